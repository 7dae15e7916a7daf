#pragma once

#include <vector>

#include "iho/basis_change.hpp"

namespace iho {

// Interferometric probe record: the qubit's ground-level occupation after a
// probe pulse of each duration.  The phase-0 channel carries the sine
// quadrature of the motional density, the pi/2 channel the cosine one, so
// the pair determines the full characteristic function.
struct ReadoutSignal {
    std::vector<double> times;   // probe durations, seconds
    std::vector<double> p_down;  // 1 - quadrature integral, in [0, 2]
    double rabi_rate = 0;        // rad/s
    double phase_setting = 0;    // 0 or pi/2
};

ReadoutSignal readout_signal(const GridState& psi, double rabi_rate,
                             const std::vector<double>& times,
                             double phase_setting);

struct DensityReconstruction {
    Eigen::VectorXd density;     // raw inverse transform, may dip negative
    double negative_mass = 0;    // integral of the negative part
    double k_max = 0;            // bandwidth covered by the probe
    double apodization_alpha = 0;
    double smoothing_sigma = 0;  // real-space width implied by the window
};

// Rebuilds the motional density from the two quadrature channels by inverse
// Fourier transform over k = 2*Omega*t, with a Gaussian window
// exp(-(alpha*k/k_max)^2) to suppress truncation ringing.  Throws a guard
// when more than 1% of the mass comes out negative, the symptom of an
// insufficient probe bandwidth.
DensityReconstruction reconstruct_density(const ReadoutSignal& phase0,
                                          const ReadoutSignal& phase90,
                                          const GridSpec& grid,
                                          double apodization_alpha = 3.0);

// Reference smoothing route for validating reconstructions: direct
// convolution with a unit-mass Gaussian of width sigma.
Eigen::VectorXd gaussian_smooth(const Eigen::VectorXd& rho,
                                const GridSpec& grid, double sigma);

struct PhononDistribution {
    std::vector<double> populations;
    double tail_mass = 0;
    bool truncation_warning = false;
};

// Even-only pair distribution of the squeezed vacuum after squeezing
// parameter r = lambda*t, P_{2k} = (2k)! tanh^{2k} r / ((2^k k!)^2 cosh r),
// assembled with log-factorials; odd entries are exactly zero.
PhononDistribution squeezed_vacuum_populations(double r, int n_max,
                                               double tail_tol = 1e-8);

// Geometric distribution P_n = nbar^n / (1 + nbar)^{n+1}.
PhononDistribution thermal_populations(double nbar, int n_max,
                                       double tail_tol = 1e-8);

struct RadiationReport {
    PhononDistribution squeezed;
    PhononDistribution thermal;
    double n_mean = 0;        // sinh^2(r), the pair-creation growth law
    double thermal_nbar = 0;  // reference occupation the report compares to
    double odd_mass = 0;
    double total_variation = 0;
};

// Side-by-side view of the pair-created distribution against a cold thermal
// reference with the given occupation.
RadiationReport radiation_report(double r, double thermal_nbar, int n_max);

}  // namespace iho
