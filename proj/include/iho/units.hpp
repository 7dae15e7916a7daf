#pragma once
#include <cmath>

#include "iho/errors.hpp"

namespace iho {

// CODATA 2018 values.
namespace si {
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J/K (exact)
inline constexpr double atomic_mass = 1.66053906660e-27;  // kg
inline constexpr double mass_be9 = 9.0121831 * atomic_mass;  // 9Be+ to ppm level
}  // namespace si

// Parametric-drive setup: a trap of frequency omega0 whose spring constant is
// modulated at omega_m = 2*omega0 with depth xi.  In the frame co-rotating at
// omega0 the slow dynamics is an inverted oscillator with effective mass
// m = 2M/xi and curvature alpha = m*omega^2 where omega = lambda = xi*omega0/2
// is the classical instability rate.
//
// All module internals work in natural units of that inverted oscillator:
//   mass 2m, length x0 = sqrt(hbar/(2 m omega)), time 1/omega, energy hbar*omega.
// In these units the instability rate is 1, the transmission temperature is
// 1/(2 pi), the quadratures obey [x,p] = 2i, and the position-representation
// Hamiltonian is -d^2/dx^2 - x^2/4 (see docs/conventions.md).
struct UnitsContract {
    double omega0 = 0;     // trap angular frequency, rad/s
    double xi = 0;         // relative modulation depth, 0 < xi << 1
    double mass_ion = 0;   // physical ion mass M, kg

    double lambda() const { return 0.5 * xi * omega0; }    // instability rate, 1/s
    double m_eff() const { return 2.0 * mass_ion / xi; }   // inverted-oscillator mass
    double alpha() const {                                  // curvature m*omega^2
        const double l = lambda();
        return m_eff() * l * l;
    }
    // Length quantum x0 = sqrt(hbar/(2 m omega)); algebraically equal to the
    // lab-frame zero-point length sqrt(hbar/(2 M omega0)).
    double x0() const { return std::sqrt(si::hbar / (2.0 * m_eff() * lambda())); }
    double p0() const { return 0.5 * si::hbar / x0(); }    // x0*p0 = hbar/2
    double t_unit() const { return 1.0 / lambda(); }       // s
    double energy_unit() const { return si::hbar * lambda(); }  // J
    double mass_unit() const { return 2.0 * m_eff(); }     // kg
    // Effective radiation temperature hbar*lambda/(2 pi k_B), kelvin.
    double temperature_K() const {
        return si::hbar * lambda() / (2.0 * M_PI * si::k_boltzmann);
    }

    void validate() const {
        if (!(omega0 > 0)) throw InvalidInputError("units: omega0 must be positive");
        if (!(xi > 0 && xi < 1)) throw InvalidInputError("units: xi must lie in (0,1)");
        if (!(mass_ion > 0)) throw InvalidInputError("units: ion mass must be positive");
    }
};

// Dimensionless temperature of the transmission law when the instability rate
// is scaled to 1.
inline constexpr double temperature_dimless = 1.0 / (2.0 * M_PI);

}  // namespace iho
