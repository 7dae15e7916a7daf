#pragma once

#include <vector>

#include "iho/hamiltonian.hpp"

namespace iho {

struct OtocCurve {
    std::vector<double> t;       // dimensionless times
    std::vector<double> c;       // growth observable at each time
    int dim = 0;
    double top_band_population = 0;  // worst-case tail occupation seen
    bool truncation_warning = false;
};

inline constexpr double otoc_truncation_limit = 1e-6;

// C(t) = <psi(t)| x |psi(t)>^2 under the ideal quadratic generator, with the
// position phase matched to the generator phase.  Units: squared lengths in
// the oscillator length of the grid coordinate.
OtocCurve otoc_expectation(const SqueezeForm& h, int dim, const Vec& psi0,
                           const std::vector<double>& times);

// C(t) = || [x(t), p] psi ||^2 with x(t) the Heisenberg-evolved position.
// For the untruncated generator this is 4 cosh^2(lambda t) whatever the
// state; the truncated matrix reproduces that until the edge is felt.
OtocCurve otoc_commutator(const SqueezeForm& h, int dim, const Vec& psi0,
                          const std::vector<double>& times);

// Closed forms the curves are checked against.
double pair_state_otoc(int n, double t, double lambda = 1.0);  // (n+1) cosh^2
double commutator_otoc_exact(double t, double lambda = 1.0);   // 4 cosh^2

// log(cosh z) without overflow for large |z|.
double stable_log_cosh(double z);

struct LyapunovFit {
    double lambda_linear = 0;  // half the straight-line slope of ln C
    double lambda = 0;         // cosh-model refinement of the same window
    double amplitude = 0;      // A in the model C = A cosh^2(lambda t)
    double rms_log = 0;        // rms residual of ln C under the cosh model
    double t_lo = 0, t_hi = 0;
    int npoints = 0;
};

// Fits ln C(t) over t in [t_lo, t_hi].  The straight-line slope estimate is
// biased low whenever the window includes times where cosh has not yet
// reached its exponential tail; the cosh-model refinement removes that bias
// by fitting ln A + 2 ln cosh(lambda t) directly (1-d search over lambda,
// amplitude eliminated in closed form).
LyapunovFit fit_lyapunov(const std::vector<double>& t,
                         const std::vector<double>& c, double t_lo,
                         double t_hi);

// Largest growth rate a thermal system at this temperature admits, in rad/s.
double mss_lambda_bound(double temperature_k);

}  // namespace iho
