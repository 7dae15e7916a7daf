#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "iho/kernels.hpp"

using iho::kern::cplx;
using iho::kern::Exec;

namespace {

std::vector<cplx> random_cvec(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cplx> v(n);
    for (auto& z : v) z = {u(rng), u(rng)};
    return v;
}

bool bitwise_equal(const void* a, const void* b, std::size_t bytes) {
    return std::memcmp(a, b, bytes) == 0;
}

// Sizes around the fixed reduction chunk (1024) plus odd stragglers.
const std::vector<std::size_t> kSizes = {1,    7,    1023, 1024,
                                         1025, 2048, 5000, 100000};

}  // namespace

TEST_CASE("cmul_inplace serial and openmp agree bitwise") {
    for (std::size_t n : kSizes) {
        auto a = random_cvec(n, 1);
        const auto m = random_cvec(n, 2);
        auto b = a;
        iho::kern::cmul_inplace(a.data(), m.data(), n, Exec::serial);
        iho::kern::cmul_inplace(b.data(), m.data(), n, Exec::openmp);
        CHECK(bitwise_equal(a.data(), b.data(), n * sizeof(cplx)));
    }
}

TEST_CASE("cmul_inplace multiplies elementwise") {
    std::vector<cplx> a = {{1, 2}, {3, -1}};
    std::vector<cplx> m = {{0, 1}, {2, 0}};
    iho::kern::cmul_inplace(a.data(), m.data(), 2, Exec::serial);
    CHECK(a[0] == cplx(-2, 1));
    CHECK(a[1] == cplx(6, -2));
}

TEST_CASE("abs2 matches |z|^2 and agrees across variants") {
    for (std::size_t n : kSizes) {
        const auto a = random_cvec(n, 3);
        std::vector<double> r1(n), r2(n);
        iho::kern::abs2(a.data(), r1.data(), n, Exec::serial);
        iho::kern::abs2(a.data(), r2.data(), n, Exec::openmp);
        CHECK(bitwise_equal(r1.data(), r2.data(), n * sizeof(double)));
        for (std::size_t i = 0; i < std::min<std::size_t>(n, 16); ++i)
            CHECK(r1[i] == doctest::Approx(std::norm(a[i])).epsilon(1e-15));
    }
}

TEST_CASE("reductions are bitwise identical across variants") {
    for (std::size_t n : kSizes) {
        const auto a = random_cvec(n, 4);
        const auto b = random_cvec(n, 5);
        std::vector<double> w(n);
        for (std::size_t i = 0; i < n; ++i) w[i] = std::real(a[i]);

        const double s1 = iho::kern::sum_weighted(w.data(), n, 0.37, Exec::serial);
        const double s2 = iho::kern::sum_weighted(w.data(), n, 0.37, Exec::openmp);
        CHECK(bitwise_equal(&s1, &s2, sizeof s1));

        const double n1 = iho::kern::norm2(a.data(), n, 0.01, Exec::serial);
        const double n2 = iho::kern::norm2(a.data(), n, 0.01, Exec::openmp);
        CHECK(bitwise_equal(&n1, &n2, sizeof n1));

        const cplx d1 = iho::kern::dot(a.data(), b.data(), n, 0.01, Exec::serial);
        const cplx d2 = iho::kern::dot(a.data(), b.data(), n, 0.01, Exec::openmp);
        CHECK(bitwise_equal(&d1, &d2, sizeof d1));
    }
}

TEST_CASE("reductions match naive sums") {
    const std::size_t n = 3000;
    const auto a = random_cvec(n, 6);
    const auto b = random_cvec(n, 7);

    double norm_ref = 0;
    cplx dot_ref = 0;
    for (std::size_t i = 0; i < n; ++i) {
        norm_ref += std::norm(a[i]);
        dot_ref += std::conj(a[i]) * b[i];
    }
    const double w = 0.125;
    CHECK(iho::kern::norm2(a.data(), n, w, Exec::serial) ==
          doctest::Approx(w * norm_ref).epsilon(1e-13));
    const cplx d = iho::kern::dot(a.data(), b.data(), n, w, Exec::serial);
    CHECK(std::abs(d - w * dot_ref) < 1e-12);
}

TEST_CASE("oscillator basis functions are orthonormal on the grid") {
    const int nlev = 32;
    const std::size_t nx = 4096;
    const double x_max = 30.0;
    const double dx = 2.0 * x_max / nx;
    std::vector<double> x(nx);
    for (std::size_t i = 0; i < nx; ++i) x[i] = -x_max + i * dx;

    std::vector<std::vector<cplx>> basis(nlev, std::vector<cplx>(nx));
    std::vector<cplx> coef(nlev, 0.0);
    for (int k = 0; k < nlev; ++k) {
        std::fill(coef.begin(), coef.end(), cplx(0));
        coef[k] = 1.0;
        iho::kern::hermite_synthesis(coef.data(), nlev, x.data(), nx,
                                     basis[k].data(), Exec::serial);
    }
    double worst = 0;
    for (int j = 0; j < nlev; ++j)
        for (int k = j; k < nlev; ++k) {
            const cplx d =
                iho::kern::dot(basis[j].data(), basis[k].data(), nx, dx,
                               Exec::serial);
            worst = std::max(worst, std::abs(d - (j == k ? 1.0 : 0.0)));
        }
    CHECK(worst < 1e-12);
}

TEST_CASE("ground basis function has the expected peak value") {
    // phi_0(0) = (2 pi)^{-1/4}
    const double x0 = 0.0;
    cplx coef = 1.0, psi;
    iho::kern::hermite_synthesis(&coef, 1, &x0, 1, &psi, Exec::serial);
    CHECK(std::real(psi) == doctest::Approx(0.631618777746064701).epsilon(1e-15));
    CHECK(std::imag(psi) == 0.0);
}

TEST_CASE("hermite synthesis/analysis round trip and variant agreement") {
    const int nlev = 24;
    const std::size_t nx = 2048;
    const double x_max = 25.0;
    const double dx = 2.0 * x_max / nx;
    std::vector<double> x(nx);
    for (std::size_t i = 0; i < nx; ++i) x[i] = -x_max + i * dx;

    const auto coef = random_cvec(nlev, 8);
    std::vector<cplx> psi1(nx), psi2(nx);
    iho::kern::hermite_synthesis(coef.data(), nlev, x.data(), nx, psi1.data(),
                                 Exec::serial);
    iho::kern::hermite_synthesis(coef.data(), nlev, x.data(), nx, psi2.data(),
                                 Exec::openmp);
    CHECK(bitwise_equal(psi1.data(), psi2.data(), nx * sizeof(cplx)));

    std::vector<cplx> back1(nlev), back2(nlev);
    iho::kern::hermite_analysis(psi1.data(), x.data(), nx, dx, nlev,
                                back1.data(), Exec::serial);
    iho::kern::hermite_analysis(psi1.data(), x.data(), nx, dx, nlev,
                                back2.data(), Exec::openmp);
    CHECK(bitwise_equal(back1.data(), back2.data(), nlev * sizeof(cplx)));
    for (int k = 0; k < nlev; ++k) CHECK(std::abs(back1[k] - coef[k]) < 1e-12);
}

TEST_CASE("banded matvec agrees across variants and with the dense product") {
    for (int n : {2, 3, 37, 1024, 1500}) {
        std::mt19937 rng(100 + n);
        std::uniform_real_distribution<double> u(-1.0, 1.0);
        std::vector<double> diag(n);
        std::vector<cplx> up2(std::max(0, n - 2)), v(n), o1(n), o2(n);
        for (auto& d : diag) d = u(rng);
        for (auto& z : up2) z = {u(rng), u(rng)};
        for (auto& z : v) z = {u(rng), u(rng)};

        iho::kern::banded_matvec2(diag.data(), up2.data(), v.data(), o1.data(),
                                  n, Exec::serial);
        iho::kern::banded_matvec2(diag.data(), up2.data(), v.data(), o2.data(),
                                  n, Exec::openmp);
        CHECK(bitwise_equal(o1.data(), o2.data(), n * sizeof(cplx)));

        for (int i = 0; i < n; ++i) {
            cplx ref = diag[i] * v[i];
            if (i + 2 < n) ref += up2[i] * v[i + 2];
            if (i - 2 >= 0) ref += std::conj(up2[i - 2]) * v[i - 2];
            CHECK(std::abs(o1[i] - ref) < 1e-14);
        }
    }
}

TEST_CASE("readout battery matches direct quadrature sums") {
    const std::size_t nk = 37, nx = 3000;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> k(nk), x(nx), rho(nx);
    for (std::size_t j = 0; j < nk; ++j) k[j] = 0.4 * j;
    const double dx = 0.01;
    for (std::size_t i = 0; i < nx; ++i) {
        x[i] = -15.0 + i * dx;
        rho[i] = u(rng);
    }

    std::vector<double> s1(nk), c1(nk), s2(nk), c2(nk);
    iho::kern::readout_battery(k.data(), nk, x.data(), rho.data(), nx, dx,
                               s1.data(), c1.data(), Exec::serial);
    iho::kern::readout_battery(k.data(), nk, x.data(), rho.data(), nx, dx,
                               s2.data(), c2.data(), Exec::openmp);
    CHECK(bitwise_equal(s1.data(), s2.data(), nk * sizeof(double)));
    CHECK(bitwise_equal(c1.data(), c2.data(), nk * sizeof(double)));

    for (std::size_t j = 0; j < nk; j += 9) {
        double sref = 0, cref = 0;
        for (std::size_t i = 0; i < nx; ++i) {
            sref += std::sin(k[j] * x[i]) * rho[i];
            cref += std::cos(k[j] * x[i]) * rho[i];
        }
        CHECK(s1[j] == doctest::Approx(dx * sref).epsilon(1e-12));
        CHECK(c1[j] == doctest::Approx(dx * cref).epsilon(1e-12));
    }
}

TEST_CASE("default exec is process-wide and settable") {
    const Exec before = iho::kern::default_exec();
    iho::kern::default_exec() = Exec::serial;
    CHECK(iho::kern::default_exec() == Exec::serial);
    iho::kern::default_exec() = Exec::openmp;
    CHECK(iho::kern::default_exec() == Exec::openmp);
    iho::kern::default_exec() = before;
}
