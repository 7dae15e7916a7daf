#pragma once

namespace iho {

// Horizon data of a static metric ds^2 = -f(r)dt^2 + dr^2/g(r) + ...,
// reduced to the two derivatives at the horizon radius that every formula
// here consumes.  Geometric units throughout (G = c = hbar = k_B = 1).
struct MetricDerivatives {
    double fprime = 0;
    double gprime = 0;
    double r0 = 0;  // optional metadata, not used in formulas

    void validate() const;
};

// f = g = 1 - r0/r evaluated at the horizon: both derivatives are 1/r0.
MetricDerivatives schwarzschild_horizon(double r0);

// kappa = sqrt(f'(r0) g'(r0)) / 2.
double surface_gravity(const MetricDerivatives& md);

// T = kappa / (2 pi).
double hawking_temperature(const MetricDerivatives& md);

// Leading-order emission probability at energy eps from a horizon at
// temperature t: exp(-eps/t).
double tunneling_rate(double eps, double t);

}  // namespace iho
