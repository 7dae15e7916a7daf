#include "iho/kernels.hpp"

#include <cmath>
#include <vector>

namespace iho::kern {

namespace {

constexpr std::size_t kChunk = 1024;  // reduction granularity, fixed for determinism

inline std::size_t num_chunks(std::size_t n) { return (n + kChunk - 1) / kChunk; }

// Evaluate phi_k(x) for k = 0..nlevels-1 at one point via the stable two-term
// recurrence h_k = y*sqrt(2/k)*h_{k-1} - sqrt((k-1)/k)*h_{k-2}.  The visitor
// receives (k, phi_k).
template <typename Visit>
inline void hermite_point(double x, int nlevels, Visit&& visit) {
    const double y = x * M_SQRT1_2;
    // (2*pi)^{-1/4} * exp(-y^2/2); underflows harmlessly to 0 far out.
    double hkm1 = 0.631618777746064701 * std::exp(-0.5 * y * y);
    visit(0, hkm1);
    if (nlevels == 1) return;
    double hk = y * std::sqrt(2.0) * hkm1;
    visit(1, hk);
    for (int k = 2; k < nlevels; ++k) {
        const double hkp = y * std::sqrt(2.0 / k) * hk - std::sqrt((k - 1.0) / k) * hkm1;
        hkm1 = hk;
        hk = hkp;
        visit(k, hk);
    }
}

}  // namespace

Exec& default_exec() {
    static Exec e = Exec::openmp;
    return e;
}

void cmul_inplace(cplx* a, const cplx* m, std::size_t n, Exec ex) {
    if (ex == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) a[i] *= m[i];
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) a[i] *= m[i];
}

void abs2(const cplx* a, double* out, std::size_t n, Exec ex) {
    if (ex == Exec::serial) {
        for (std::size_t i = 0; i < n; ++i) out[i] = std::norm(a[i]);
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
        out[i] = std::norm(a[i]);
}

namespace {

template <typename T, typename ChunkSum>
T chunked_reduce(std::size_t n, Exec ex, ChunkSum&& chunk_sum) {
    const std::size_t nc = num_chunks(n);
    std::vector<T> partial(nc, T{});
    if (ex == Exec::serial) {
        for (std::size_t c = 0; c < nc; ++c)
            partial[c] = chunk_sum(c * kChunk, std::min(n, (c + 1) * kChunk));
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c)
            partial[c] = chunk_sum(c * kChunk, std::min(n, (c + 1) * kChunk));
    }
    T total{};
    for (std::size_t c = 0; c < nc; ++c) total += partial[c];
    return total;
}

}  // namespace

double sum_weighted(const double* a, std::size_t n, double w, Exec ex) {
    const double s = chunked_reduce<double>(n, ex, [a](std::size_t lo, std::size_t hi) {
        double acc = 0;
        for (std::size_t i = lo; i < hi; ++i) acc += a[i];
        return acc;
    });
    return w * s;
}

double norm2(const cplx* a, std::size_t n, double w, Exec ex) {
    const double s = chunked_reduce<double>(n, ex, [a](std::size_t lo, std::size_t hi) {
        double acc = 0;
        for (std::size_t i = lo; i < hi; ++i) acc += std::norm(a[i]);
        return acc;
    });
    return w * s;
}

cplx dot(const cplx* a, const cplx* b, std::size_t n, double w, Exec ex) {
    const cplx s = chunked_reduce<cplx>(n, ex, [a, b](std::size_t lo, std::size_t hi) {
        cplx acc = 0;
        for (std::size_t i = lo; i < hi; ++i) acc += std::conj(a[i]) * b[i];
        return acc;
    });
    return w * s;
}

void hermite_synthesis(const cplx* coef, int nlevels, const double* x,
                       std::size_t nx, cplx* psi, Exec ex) {
    auto point = [&](std::size_t i) {
        cplx acc = 0;
        hermite_point(x[i], nlevels, [&](int k, double hk) { acc += coef[k] * hk; });
        psi[i] = acc;
    };
    if (ex == Exec::serial) {
        for (std::size_t i = 0; i < nx; ++i) point(i);
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(nx); ++i) point(i);
}

void hermite_analysis(const cplx* psi, const double* x, std::size_t nx,
                      double dx, int nlevels, cplx* coef, Exec ex) {
    const std::size_t nc = num_chunks(nx);
    std::vector<cplx> partial(nc * nlevels, cplx{});
    auto chunk = [&](std::size_t c) {
        cplx* acc = partial.data() + c * nlevels;
        const std::size_t hi = std::min(nx, (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < hi; ++i)
            hermite_point(x[i], nlevels, [&](int k, double hk) { acc[k] += hk * psi[i]; });
    };
    if (ex == Exec::serial) {
        for (std::size_t c = 0; c < nc; ++c) chunk(c);
    } else {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(nc); ++c) chunk(c);
    }
    for (int k = 0; k < nlevels; ++k) coef[k] = 0;
    for (std::size_t c = 0; c < nc; ++c)
        for (int k = 0; k < nlevels; ++k) coef[k] += partial[c * nlevels + k];
    for (int k = 0; k < nlevels; ++k) coef[k] *= dx;
}

void banded_matvec2(const double* diag, const cplx* up2, const cplx* v,
                    cplx* out, int n, Exec ex) {
    auto row = [&](int j) {
        cplx acc = diag[j] * v[j];
        if (j + 2 < n) acc += up2[j] * v[j + 2];
        if (j >= 2) acc += std::conj(up2[j - 2]) * v[j - 2];
        out[j] = acc;
    };
    if (ex == Exec::serial) {
        for (int j = 0; j < n; ++j) row(j);
        return;
    }
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) row(j);
}

void readout_battery(const double* k, std::size_t nk, const double* x,
                     const double* rho, std::size_t nx, double dx,
                     double* sin_out, double* cos_out, Exec ex) {
    auto probe = [&](std::size_t j) {
        double s = 0, c = 0;
        for (std::size_t i = 0; i < nx; ++i) {
            s += std::sin(k[j] * x[i]) * rho[i];
            c += std::cos(k[j] * x[i]) * rho[i];
        }
        sin_out[j] = dx * s;
        cos_out[j] = dx * c;
    };
    if (ex == Exec::serial) {
        for (std::size_t j = 0; j < nk; ++j) probe(j);
        return;
    }
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(nk); ++j) probe(j);
}

}  // namespace iho::kern
