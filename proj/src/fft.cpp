#include "iho/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "iho/errors.hpp"

namespace iho {

namespace {
// FFTW planning is not thread-safe; execution on distinct buffers is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft1d::Fft1d(std::size_t n) : n_(n) {
    if (n == 0) throw InvalidInputError("fft: zero-length transform");
    std::lock_guard<std::mutex> lock(plan_mutex());
    buf_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(n));
    auto* b = reinterpret_cast<fftw_complex*>(buf_);
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), b, b, FFTW_FORWARD, FFTW_ESTIMATE);
    plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n), b, b, FFTW_BACKWARD, FFTW_ESTIMATE);
}

Fft1d::~Fft1d() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    fftw_free(buf_);
}

void Fft1d::forward() { fftw_execute(static_cast<fftw_plan>(plan_fwd_)); }

void Fft1d::backward() {
    fftw_execute(static_cast<fftw_plan>(plan_bwd_));
    const double inv = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) buf_[i] *= inv;
}

}  // namespace iho
