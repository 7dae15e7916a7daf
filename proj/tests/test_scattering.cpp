#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "iho/scattering.hpp"

using iho::GridSpec;
using iho::PacketSpec;

namespace {

// Frozen reference values, computed independently with 30-digit arithmetic
// (tools/reference_values.py) and pinned here.
constexpr double kPhaseAtM2 = -0.59253698197703459;
constexpr double kPhaseAtM1 = -0.95500772434256911;
constexpr double kPhaseAtHalf = -0.75072920212205074;
constexpr double kDelayAt0 = 1.9635100260214235;
constexpr double kDelayAtHalf = 0.86810736264547731;
constexpr double kDelayAt1 = 0.051761650994412543;
constexpr double kDelayAt2 = -0.68218669934942427;
constexpr double kT2AtMHalf = 0.95857616783363717;

constexpr double kAvgT[][2] = {
    {-2.0, 0.99545981027459653}, {-1.0, 0.90506738552150794},
    {-0.5, 0.74415864496118957}, {0.0, 0.5},
    {0.5, 0.25584135503881043},  {1.0, 0.094932614478492065},
    {2.0, 0.0045401897254034688}};

}  // namespace

TEST_CASE("scattering phase at pinned energies, odd in energy") {
    CHECK(std::abs(iho::scattering_phase(-2.0) - kPhaseAtM2) < 1e-13);
    CHECK(std::abs(iho::scattering_phase(-1.0) - kPhaseAtM1) < 1e-13);
    CHECK(std::abs(iho::scattering_phase(-0.5) - kPhaseAtHalf) < 1e-13);
    CHECK(std::abs(iho::scattering_phase(0.0)) < 1e-15);
    CHECK(std::abs(iho::scattering_phase(1.0) + kPhaseAtM1) < 1e-13);
}

TEST_CASE("group delay at pinned energies, even in energy") {
    CHECK(std::abs(iho::group_delay(0.0) - kDelayAt0) < 1e-8);
    for (double s : {-1.0, 1.0}) {
        CHECK(std::abs(iho::group_delay(s * 0.5) - kDelayAtHalf) < 1e-8);
        CHECK(std::abs(iho::group_delay(s * 1.0) - kDelayAt1) < 1e-8);
        CHECK(std::abs(iho::group_delay(s * 2.0) - kDelayAt2) < 1e-8);
    }
    // The principal-value phase wraps beyond |eps| ~ 3.4; the derivative must
    // come out smooth across the wrap.
    CHECK(std::abs(iho::group_delay(3.5) - iho::group_delay(-3.5)) < 1e-8);
    CHECK(iho::group_delay(3.5) < 0.0);
}

TEST_CASE("transmission probabilities: pinned value, logistic shape, bitwise sum") {
    CHECK(std::abs(iho::transmission_reflection(-0.5).t2 - kT2AtMHalf) < 1e-14);
    CHECK(iho::transmission_reflection(0.0).t2 == 0.5);
    CHECK(iho::transmission_reflection(0.0).r2 == 0.5);

    std::mt19937 rng(777);
    std::uniform_real_distribution<double> u(-6.0, 6.0);
    for (int i = 0; i < 25; ++i) {
        const double eps = u(rng);
        const auto tr = iho::transmission_reflection(eps);
        CHECK(tr.t2 + tr.r2 == 1.0);
        CHECK(tr.t2 > 0.0);
        CHECK(tr.r2 > 0.0);
        const double ref = 1.0 / (1.0 + std::exp(2.0 * M_PI * eps));
        if (std::abs(eps) < 5.0)
            CHECK(tr.t2 == doctest::Approx(ref).epsilon(1e-12));
    }
}

TEST_CASE("s-matrix is unitary and consistent with the probability layer") {
    for (double eps : {-3.0, -1.0, -0.2, 0.0, 0.7, 2.5}) {
        const Eigen::Matrix2cd s = iho::smatrix(eps);
        const Eigen::Matrix2cd defect =
            s.adjoint() * s - Eigen::Matrix2cd::Identity();
        CHECK(defect.cwiseAbs().maxCoeff() < 1e-13);

        const auto tr = iho::transmission_reflection(eps);
        CHECK(std::norm(s(0, 0)) == doctest::Approx(tr.t2).epsilon(1e-13));
        CHECK(std::norm(s(0, 1)) == doctest::Approx(tr.r2).epsilon(1e-13));
        CHECK(std::arg(s(0, 0)) ==
              doctest::Approx(iho::scattering_phase(eps) - 0.25 * M_PI));
    }
    CHECK(std::norm(iho::smatrix(-3.0)(0, 0)) > 0.999);
}

TEST_CASE("gamma prefactor modulus follows pi*sech(pi*eps)") {
    for (double eps : {0.0, 0.5, 1.5, -2.5}) {
        const Eigen::Matrix2cd s = iho::smatrix(eps);
        const double gamma2 =
            2.0 * M_PI * std::norm(s(0, 0)) * std::exp(M_PI * eps);
        CHECK(gamma2 ==
              doctest::Approx(M_PI / std::cosh(M_PI * eps)).epsilon(1e-12));
    }
}

TEST_CASE("energy-averaged transmission at pinned points") {
    for (const auto& row : kAvgT) {
        CHECK(std::abs(iho::energy_averaged_transmission(row[0], 1.0) - row[1]) <
              1e-12);
    }
    // Complementarity under energy reflection.
    for (double e : {0.3, 1.7}) {
        CHECK(iho::energy_averaged_transmission(e, 0.7) +
                  iho::energy_averaged_transmission(-e, 0.7) ==
              doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK_THROWS_AS(iho::energy_averaged_transmission(0.0, 0.0),
                    iho::InvalidInputError);
}

TEST_CASE("incident packet launches with the documented geometry") {
    const GridSpec grid{220.0, 32768};
    const PacketSpec spec{-0.5, 1.0, -2.2, false};
    const auto launch = iho::incident_packet(spec, grid);

    CHECK(std::abs(launch.state.norm2() - 1.0) < 1e-12);
    // The 1/|x| weight shifts the density peak to exp(-t_start - 1/2).
    CHECK(std::abs(launch.peak_x - std::exp(2.2 - 0.5)) < 2.0 * grid.dx());
    // Mass already inside |x| < 1 is erfc(2.2)/2 of the envelope.
    CHECK(launch.inner_mass > 8.5e-4);
    CHECK(launch.inner_mass < 1.0e-3);
    CHECK(launch.outer_mass < 1e-5);
    for (int i = 0; i < grid.n / 2; i += 1000)
        CHECK(launch.state.psi[i] == iho::cplx(0));
}

TEST_CASE("symmetrized packet is even across the grid") {
    const GridSpec grid{40.0, 4096};
    const PacketSpec spec{-0.5, 1.0, -0.5, true};
    const auto launch =
        iho::incident_packet(spec, grid, iho::LaunchGuards{0.5, 1e-3});
    const auto& psi = launch.state.psi;
    for (int i = 1; i < grid.n; i += 37)
        CHECK(std::abs(psi[i] - psi[grid.n - i]) < 1e-15);
    CHECK(psi[grid.n / 2] == iho::cplx(0));
}

TEST_CASE("launch guards reject unrepresentable packets") {
    const GridSpec grid{220.0, 32768};
    // Narrow bandwidth: too much envelope mass already touches the barrier.
    CHECK_THROWS_AS(iho::incident_packet({-0.5, 0.25, -2.2, false}, grid),
                    iho::NumericalGuardError);
    // Start ray beyond the box.
    CHECK_THROWS_AS(iho::incident_packet({-0.5, 1.0, -6.0, false}, grid),
                    iho::NumericalGuardError);
    CHECK_THROWS_AS(iho::incident_packet({-0.5, -1.0, -2.2, false}, grid),
                    iho::InvalidInputError);
}

TEST_CASE("scattered envelope closes mass and peaks at the delayed ray") {
    const GridSpec grid{220.0, 32768};
    const PacketSpec spec{-0.5, 1.0, -2.2, false};
    const double delay = iho::group_delay(-0.5);
    const double t = delay + 2.4;
    const auto env = iho::scattered_envelope_densities(spec, grid, t);
    const auto tr = iho::transmission_reflection(-0.5);

    double mass_t = 0, mass_r = 0;
    int peak_i = 0;
    for (int i = 0; i < grid.n; ++i) {
        mass_t += env.transmitted[i] * grid.dx();
        mass_r += env.reflected[i] * grid.dx();
        if (env.transmitted[i] > env.transmitted[peak_i]) peak_i = i;
        if (grid.x(i) > 0.0) CHECK(env.transmitted[i] == 0.0);
        if (grid.x(i) < 0.0) CHECK(env.reflected[i] == 0.0);
    }
    CHECK(std::abs(mass_t - tr.t2) < 5e-5);
    CHECK(std::abs(mass_r - tr.r2) < 5e-6);
    // The 1/|x| weight shifts the density peak to exp(t - delay - 1/2).
    CHECK(std::abs(std::abs(grid.x(peak_i)) - std::exp(2.4 - 0.5)) <
          2.0 * grid.dx());
    // Identical log-space profile on both sides, scaled by R^2/T^2.
    for (int i = 1; i < grid.n / 2; i += 501) {
        CHECK(env.reflected[grid.n - i] ==
              doctest::Approx(env.transmitted[i] * tr.r2 / tr.t2)
                  .epsilon(1e-12));
    }
}

TEST_CASE("full scatter run matches the energy-averaged transmission") {
    const GridSpec grid{220.0, 32768};
    const PacketSpec spec{-0.5, 1.0, -2.2, false};
    const double t_final = iho::group_delay(-0.5) + 2.4;

    const auto res = iho::scatter_evolve(spec, grid, 1e-3, t_final);
    CHECK(res.steps == std::lround((t_final - spec.t_start) / 1e-3));
    CHECK_FALSE(res.cancelled);
    CHECK(res.norm_err < 1e-8);
    CHECK(res.boundary_mass < 1e-3);
    // p_t and p_r exclude only the x = 0 grid point, whose cell still holds
    // a few 1e-4 of evanescent remnant at this t_final.
    CHECK(res.p_t + res.p_r <= 1.0 + 1e-9);
    CHECK(1.0 - (res.p_t + res.p_r) < 5e-4);
    CHECK(std::abs(res.p_t - 0.74415864496118957) < 0.02);

    // Halving the step leaves the transmitted mass unchanged at this scale.
    const auto res2 = iho::scatter_evolve(spec, grid, 5e-4, t_final);
    CHECK(std::abs(res.p_t - res2.p_t) < 1e-4);
}

TEST_CASE("sample hook sees launch, strides, and final state") {
    const GridSpec grid{40.0, 4096};
    const PacketSpec spec{-0.5, 1.0, -1.2, false};
    std::vector<double> seen;
    iho::SampleHook hook{[&](double t, const iho::GridState& st) {
                             seen.push_back(t);
                             CHECK(st.grid.n == 4096);
                         },
                         10};
    const auto res = iho::scatter_evolve(spec, grid, 0.01, -0.2, {}, {},
                                         iho::LaunchGuards{0.1, 1e-3}, hook);
    CHECK(res.steps == 100);
    REQUIRE(seen.size() == 11);
    CHECK(seen.front() == -1.2);
    CHECK(std::abs(seen.back() + 0.2) < 1e-12);
}

TEST_CASE("progress callback can cancel a scatter run") {
    const GridSpec grid{40.0, 4096};
    const PacketSpec spec{-0.5, 1.0, -1.2, false};
    const auto res = iho::scatter_evolve(
        spec, grid, 0.002, -0.2, [](double) { return false; }, {},
        iho::LaunchGuards{0.1, 1e-3});
    CHECK(res.cancelled);
    CHECK(res.steps == 256);
}

TEST_CASE("boundary guard stops outflow through the box edge") {
    const GridSpec grid{40.0, 4096};
    const PacketSpec spec{-0.5, 1.0, -1.2, false};
    CHECK_THROWS_AS(iho::scatter_evolve(spec, grid, 0.002, 3.5, {}, {},
                                        iho::LaunchGuards{0.1, 1e-3}),
                    iho::NumericalGuardError);
}

TEST_CASE("logistic-family fit recovers the transmission temperature") {
    std::vector<double> eps = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
    std::vector<double> pt;
    for (double e : eps) pt.push_back(iho::energy_averaged_transmission(e, 1.0));
    const auto fit = iho::fit_teff(eps, pt, 1.0);
    CHECK(std::abs(fit.t_eff * 2.0 * M_PI - 1.0) < 1e-6);
    CHECK(fit.rms < 1e-9);
    CHECK_THROWS_AS(iho::fit_teff({}, {}, 1.0), iho::InvalidInputError);
    CHECK_THROWS_AS(iho::fit_teff(eps, pt, -1.0), iho::InvalidInputError);
}
