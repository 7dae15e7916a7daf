#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "iho/duality.hpp"
#include "iho/scattering.hpp"

TEST_CASE("schwarzschild horizon derivatives") {
    const auto md = iho::schwarzschild_horizon(2.0);
    CHECK(md.fprime == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(md.gprime == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(md.r0 == 2.0);
    CHECK(iho::surface_gravity(md) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(iho::hawking_temperature(md) ==
          doctest::Approx(1.0 / (8.0 * M_PI)).epsilon(1e-15));
    CHECK_THROWS_AS(iho::schwarzschild_horizon(0.0), iho::InvalidInputError);
}

TEST_CASE("surface gravity is the geometric mean of the two derivatives") {
    iho::MetricDerivatives md;
    md.fprime = 4.0;
    md.gprime = 4.0;
    CHECK(iho::surface_gravity(md) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(iho::hawking_temperature(md) ==
          doctest::Approx(1.0 / M_PI).epsilon(1e-15));

    md.fprime = 2.0;
    md.gprime = 8.0;
    CHECK(iho::surface_gravity(md) == doctest::Approx(2.0).epsilon(1e-15));

    md.fprime = -1.0;
    CHECK_THROWS_AS(iho::surface_gravity(md), iho::InvalidInputError);
    md.fprime = 1.0;
    md.gprime = 0.0;
    CHECK_THROWS_AS(iho::hawking_temperature(md), iho::InvalidInputError);
}

TEST_CASE("tunneling rate basics") {
    CHECK(iho::tunneling_rate(0.0, 0.3) == 1.0);
    CHECK(iho::tunneling_rate(0.7, 0.7) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(iho::tunneling_rate(-0.7, 0.7) == doctest::Approx(std::exp(1.0)).epsilon(1e-15));
    CHECK_THROWS_AS(iho::tunneling_rate(1.0, 0.0), iho::InvalidInputError);
    CHECK_THROWS_AS(iho::tunneling_rate(1.0, -0.2), iho::InvalidInputError);
}

TEST_CASE("thermal emission matches the barrier branching ratio") {
    // The inverted oscillator at its natural temperature 1/(2 pi) emits with
    // the same Boltzmann weight that the scattering matrix assigns to
    // transmission over reflection.
    const double t_iho = 1.0 / (2.0 * M_PI);
    for (int i = 0; i <= 20; ++i) {
        const double eps = -2.0 + 4.0 * i / 20.0;
        const auto tr = iho::transmission_reflection(eps);
        const double gamma = iho::tunneling_rate(eps, t_iho);
        const double ratio = tr.t2 / tr.r2;
        CHECK(std::abs(gamma - ratio) <= 1e-12 * ratio);
    }
}

TEST_CASE("detailed balance of the emission asymmetry") {
    const double t_iho = 1.0 / (2.0 * M_PI);
    for (double eps : {0.3, 0.5, 1.0, 1.7}) {
        const auto plus = iho::transmission_reflection(eps);
        const auto minus = iho::transmission_reflection(-eps);
        const double ratio_sm = (plus.t2 / plus.r2) / (minus.t2 / minus.r2);
        const double ratio_th =
            iho::tunneling_rate(eps, t_iho) / iho::tunneling_rate(-eps, t_iho);
        CHECK(std::abs(ratio_sm - ratio_th) <= 1e-12 * ratio_th);
    }
}
