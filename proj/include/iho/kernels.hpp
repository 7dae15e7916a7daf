#pragma once
#include <complex>
#include <cstddef>

namespace iho::kern {

using cplx = std::complex<double>;

// Every kernel ships in a serial reference variant and an OpenMP variant.
// Reductions are chunked with a fixed chunk size and combined in chunk order,
// so results are bit-identical across variants and thread counts.  Unit tests
// compare the two variants bitwise; tools/bench_kernels times them.
enum class Exec { serial, openmp };

// Process-wide default used by the higher-level modules.
Exec& default_exec();

// a[i] *= m[i]
void cmul_inplace(cplx* a, const cplx* m, std::size_t n, Exec ex);

// out[i] = |a[i]|^2
void abs2(const cplx* a, double* out, std::size_t n, Exec ex);

// w * sum_i a[i], fixed-chunk deterministic reduction
double sum_weighted(const double* a, std::size_t n, double w, Exec ex);

// w * sum_i |a[i]|^2
double norm2(const cplx* a, std::size_t n, double w, Exec ex);

// w * sum_i conj(a[i]) * b[i]
cplx dot(const cplx* a, const cplx* b, std::size_t n, double w, Exec ex);

// Orthonormal oscillator eigenfunctions on the analysis grid.  With
// y = x*inv_sqrt2 (inv_sqrt2 = 1/sqrt(2)), the basis function is
// phi_k(x) = 2^{-1/4} h_k(y) where h_k are the unit-variance Hermite
// functions, so phi_0(x) ~ exp(-x^2/4) and <x^2> = 1 in phi_0.

// psi[i] = sum_k coef[k] * phi_k(x[i])     (parallel over grid points)
void hermite_synthesis(const cplx* coef, int nlevels, const double* x,
                       std::size_t nx, cplx* psi, Exec ex);

// coef[k] = dx * sum_i phi_k(x[i]) * psi[i]   (chunked over grid points)
void hermite_analysis(const cplx* psi, const double* x, std::size_t nx,
                      double dx, int nlevels, cplx* coef, Exec ex);

// Hermitian matrix with a real diagonal and one complex band at offset +2:
// out = diag.*v + up2[j]*v[j+2] (row j) + conj(up2[j])*v[j] (row j+2).
void banded_matvec2(const double* diag, const cplx* up2, const cplx* v,
                    cplx* out, int n, Exec ex);

// Spin-readout quadrature battery: for each probe wavenumber k[j],
//   sin_out[j] = dx * sum_i sin(k[j]*x[i]) * rho[i]
//   cos_out[j] = dx * sum_i cos(k[j]*x[i]) * rho[i]
// (parallel over probe wavenumbers)
void readout_battery(const double* k, std::size_t nk, const double* x,
                     const double* rho, std::size_t nx, double dx,
                     double* sin_out, double* cos_out, Exec ex);

}  // namespace iho::kern
