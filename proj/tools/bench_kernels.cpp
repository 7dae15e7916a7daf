#include <algorithm>
#include <chrono>
#include <complex>
#include <cstdio>
#include <cstring>
#include <functional>
#include <random>
#include <vector>

#include "iho/kernels.hpp"

namespace {

using iho::kern::cplx;
using iho::kern::Exec;

double best_ms(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best,
                        std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void report(const char* name, std::size_t n, double serial_ms, double omp_ms,
            bool identical) {
    std::printf("%-18s n=%-9zu serial %9.3f ms   openmp %9.3f ms   x%.2f   %s\n",
                name, n, serial_ms, omp_ms, serial_ms / omp_ms,
                identical ? "bitwise-equal" : "MISMATCH");
}

}  // namespace

int main() {
    std::mt19937 rng(20260823);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int reps = 5;

    {
        const std::size_t n = 1 << 21;
        std::vector<cplx> a(n), m(n), a2(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = {u(rng), u(rng)};
            m[i] = {u(rng), u(rng)};
        }
        a2 = a;
        const double ts = best_ms(reps, [&] {
            iho::kern::cmul_inplace(a.data(), m.data(), n, Exec::serial);
        });
        const double tp = best_ms(reps, [&] {
            iho::kern::cmul_inplace(a2.data(), m.data(), n, Exec::openmp);
        });
        report("cmul_inplace", n, ts, tp,
               std::memcmp(a.data(), a2.data(), n * sizeof(cplx)) == 0);
    }

    const std::size_t n = 1 << 21;
    std::vector<cplx> a(n), b(n);
    std::vector<double> r(n), r2(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = {u(rng), u(rng)};
        b[i] = {u(rng), u(rng)};
    }

    {
        const double ts = best_ms(
            reps, [&] { iho::kern::abs2(a.data(), r.data(), n, Exec::serial); });
        const double tp = best_ms(
            reps, [&] { iho::kern::abs2(a.data(), r2.data(), n, Exec::openmp); });
        report("abs2", n, ts, tp,
               std::memcmp(r.data(), r2.data(), n * sizeof(double)) == 0);
    }
    {
        double vs = 0, vp = 0;
        const double ts = best_ms(reps, [&] {
            vs = iho::kern::norm2(a.data(), n, 1e-3, Exec::serial);
        });
        const double tp = best_ms(reps, [&] {
            vp = iho::kern::norm2(a.data(), n, 1e-3, Exec::openmp);
        });
        report("norm2", n, ts, tp, std::memcmp(&vs, &vp, sizeof vs) == 0);
    }
    {
        cplx vs, vp;
        const double ts = best_ms(reps, [&] {
            vs = iho::kern::dot(a.data(), b.data(), n, 1e-3, Exec::serial);
        });
        const double tp = best_ms(reps, [&] {
            vp = iho::kern::dot(a.data(), b.data(), n, 1e-3, Exec::openmp);
        });
        report("dot", n, ts, tp, std::memcmp(&vs, &vp, sizeof vs) == 0);
    }

    {
        const std::size_t nx = 1 << 16;
        const int nlevels = 128;
        std::vector<double> x(nx);
        for (std::size_t i = 0; i < nx; ++i) x[i] = -30.0 + 60.0 * i / nx;
        std::vector<cplx> coef(nlevels), psi(nx), psi2(nx);
        for (auto& c : coef) c = {u(rng), u(rng)};
        const double ts = best_ms(reps, [&] {
            iho::kern::hermite_synthesis(coef.data(), nlevels, x.data(), nx,
                                         psi.data(), Exec::serial);
        });
        const double tp = best_ms(reps, [&] {
            iho::kern::hermite_synthesis(coef.data(), nlevels, x.data(), nx,
                                         psi2.data(), Exec::openmp);
        });
        report("hermite_synthesis", nx, ts, tp,
               std::memcmp(psi.data(), psi2.data(), nx * sizeof(cplx)) == 0);

        std::vector<cplx> c1(nlevels), c2(nlevels);
        const double tas = best_ms(reps, [&] {
            iho::kern::hermite_analysis(psi.data(), x.data(), nx, 60.0 / nx,
                                        nlevels, c1.data(), Exec::serial);
        });
        const double tap = best_ms(reps, [&] {
            iho::kern::hermite_analysis(psi.data(), x.data(), nx, 60.0 / nx,
                                        nlevels, c2.data(), Exec::openmp);
        });
        report("hermite_analysis", nx, tas, tap,
               std::memcmp(c1.data(), c2.data(), nlevels * sizeof(cplx)) == 0);
    }

    {
        const int dim = 8192;
        std::vector<double> diag(dim);
        std::vector<cplx> up2(dim - 2), v(dim), o1(dim), o2(dim);
        for (int i = 0; i < dim; ++i) {
            diag[i] = u(rng);
            v[i] = {u(rng), u(rng)};
        }
        for (auto& c : up2) c = {u(rng), u(rng)};
        const double ts = best_ms(reps * 20, [&] {
            iho::kern::banded_matvec2(diag.data(), up2.data(), v.data(),
                                      o1.data(), dim, Exec::serial);
        });
        const double tp = best_ms(reps * 20, [&] {
            iho::kern::banded_matvec2(diag.data(), up2.data(), v.data(),
                                      o2.data(), dim, Exec::openmp);
        });
        report("banded_matvec2", dim, ts, tp,
               std::memcmp(o1.data(), o2.data(), dim * sizeof(cplx)) == 0);
    }

    {
        const std::size_t nk = 512, nx = 1 << 15;
        std::vector<double> k(nk), x(nx), rho(nx);
        std::vector<double> s1(nk), c1(nk), s2(nk), c2(nk);
        for (std::size_t j = 0; j < nk; ++j) k[j] = 30.0 * j / nk;
        for (std::size_t i = 0; i < nx; ++i) {
            x[i] = -220.0 + 440.0 * i / nx;
            rho[i] = std::abs(u(rng));
        }
        const double ts = best_ms(3, [&] {
            iho::kern::readout_battery(k.data(), nk, x.data(), rho.data(), nx,
                                       440.0 / nx, s1.data(), c1.data(),
                                       Exec::serial);
        });
        const double tp = best_ms(3, [&] {
            iho::kern::readout_battery(k.data(), nk, x.data(), rho.data(), nx,
                                       440.0 / nx, s2.data(), c2.data(),
                                       Exec::openmp);
        });
        report("readout_battery", nk * nx, ts, tp,
               std::memcmp(s1.data(), s2.data(), nk * sizeof(double)) == 0 &&
                   std::memcmp(c1.data(), c2.data(), nk * sizeof(double)) == 0);
    }

    return 0;
}
