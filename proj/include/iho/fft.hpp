#pragma once
#include <complex>
#include <cstddef>

namespace iho {

// Thin RAII wrapper over an FFTW complex-to-complex transform pair.  Plans are
// created with FFTW_ESTIMATE so planning is deterministic; the unnormalized
// backward transform is rescaled by 1/n in backward().  Each instance owns its
// aligned work buffer (data()); callers evolve in place.
class Fft1d {
  public:
    explicit Fft1d(std::size_t n);
    ~Fft1d();
    Fft1d(const Fft1d&) = delete;
    Fft1d& operator=(const Fft1d&) = delete;

    std::size_t size() const { return n_; }
    std::complex<double>* data() { return buf_; }
    const std::complex<double>* data() const { return buf_; }

    void forward();   // buf <- DFT(buf), negative-exponent convention
    void backward();  // buf <- IDFT(buf) / n

  private:
    std::size_t n_;
    std::complex<double>* buf_;
    void* plan_fwd_;
    void* plan_bwd_;
};

}  // namespace iho
