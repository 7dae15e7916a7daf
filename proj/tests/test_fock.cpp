#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <Eigen/Eigenvalues>
#include <cmath>

#include "doctest.h"
#include "iho/fock.hpp"
#include "iho/hamiltonian.hpp"

using iho::cplx;
using iho::Mat;
using iho::Vec;

TEST_CASE("lowering operator entries") {
    const Mat a = iho::lowering(6);
    CHECK(a.rows() == 6);
    for (int n = 1; n < 6; ++n) {
        CHECK(std::abs(a(n - 1, n) - std::sqrt(double(n))) < 1e-15);
    }
    CHECK(a.cwiseAbs().sum() == doctest::Approx(std::sqrt(1.0) + std::sqrt(2.0) +
                                                std::sqrt(3.0) + std::sqrt(4.0) +
                                                std::sqrt(5.0)));
}

TEST_CASE("quadratures are Hermitian with the stated band structure") {
    for (double phi : {0.0, 1.3, -2.1}) {
        const auto [x, p] = iho::quadratures(12, phi);
        CHECK(iho::hermiticity_error(x) < 1e-15);
        CHECK(iho::hermiticity_error(p) < 1e-15);
        const cplx ph = std::polar(1.0, 0.5 * phi);
        for (int n = 0; n < 11; ++n) {
            const double s = std::sqrt(double(n + 1));
            CHECK(std::abs(x(n, n + 1) - s * ph) < 1e-15);
            CHECK(std::abs(p(n, n + 1) - cplx(0, -1) * s * ph) < 1e-15);
        }
    }
}

TEST_CASE("canonical commutator is 2i away from the truncation corner") {
    for (double phi : {0.0, 0.9}) {
        const auto [x, p] = iho::quadratures(24, phi);
        CHECK(iho::canonical_commutator_error(x, p) < 1e-13);
        // The corner entry carries the whole truncation deficit instead.
        const Mat c = iho::commutator(x, p);
        CHECK(std::abs(c(23, 23) - cplx(0, -2.0 * 23)) < 1e-12);
    }
}

TEST_CASE("squeeze-form and quadratic-form builds agree entrywise") {
    for (double phi : {0.0, 0.6}) {
        const Mat h1 = iho::build_hamiltonian(iho::SqueezeForm{1.7, phi}, 30);
        const Mat h2 = iho::build_hamiltonian(iho::IhoQuadratic{1.7, phi}, 30);
        CHECK((h1 - h2).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(iho::hermiticity_error(h1) < 1e-13);
    }
}

TEST_CASE("squeeze-form spectrum is symmetric about zero") {
    const Mat h = iho::build_hamiltonian(iho::SqueezeForm{1.0, 0.7}, 40);
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    const Eigen::VectorXd ev = es.eigenvalues();
    for (int i = 0; i < 40; ++i) {
        CHECK(ev[i] == doctest::Approx(-ev[39 - i]).epsilon(1e-10));
    }
}

TEST_CASE("fock_superposition normalizes and validates") {
    const Vec v = iho::fock_superposition(8, {{0, 1.0}, {3, {0.0, 2.0}}});
    CHECK(v.size() == 8);
    CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(v[0]) == doctest::Approx(1.0 / std::sqrt(5.0)));
    CHECK(std::abs(v[3]) == doctest::Approx(2.0 / std::sqrt(5.0)));
    CHECK(v[1] == cplx(0));

    CHECK_THROWS_AS(iho::fock_superposition(4, {{4, 1.0}}),
                    iho::InvalidInputError);
    CHECK_THROWS_AS(iho::fock_superposition(4, {{-1, 1.0}}),
                    iho::InvalidInputError);
    CHECK_THROWS_AS(iho::fock_superposition(4, {{1, 1.0}, {1, 2.0}}),
                    iho::InvalidInputError);
    CHECK_THROWS_AS(iho::fock_superposition(4, {{1, 0.0}}),
                    iho::InvalidInputError);
}

TEST_CASE("fock_pair builds the level-adjacent probe state") {
    const Vec v = iho::fock_pair(10, 3);
    CHECK(std::abs(v[3] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(v[4] - 1.0 / std::sqrt(2.0)) < 1e-15);
    CHECK(v.norm() == doctest::Approx(1.0));
    CHECK_THROWS_AS(iho::fock_pair(10, 9), iho::InvalidInputError);
}

TEST_CASE("pair state has unit position expectation and zero momentum") {
    const auto [x, p] = iho::quadratures(10, 0.0);
    const Vec v = iho::fock_pair(10, 0);
    CHECK(std::real(v.dot(x * v)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(v.dot(p * v)) < 1e-14);
}

TEST_CASE("tail_population sums the top levels") {
    Vec v = Vec::Zero(10);
    v[8] = 0.6;
    v[9] = 0.8;
    CHECK(iho::tail_population(v, 0.2) == doctest::Approx(1.0));
    CHECK(iho::tail_population(v, 0.1) == doctest::Approx(0.64));
    v.setZero();
    v[0] = 1.0;
    CHECK(iho::tail_population(v) == 0.0);
    CHECK_THROWS_AS(iho::tail_population(v, 0.0), iho::InvalidInputError);
    CHECK_THROWS_AS(iho::tail_population(v, 1.5), iho::InvalidInputError);
}

TEST_CASE("fock space dimension validation") {
    CHECK_THROWS_AS(iho::FockSpace{1}.validate(), iho::InvalidInputError);
    CHECK_NOTHROW(iho::FockSpace{2}.validate());
}
