#pragma once

#include <vector>

#include "iho/basis_change.hpp"
#include "iho/fft.hpp"
#include "iho/propagate.hpp"

namespace iho {

// 2x2 scattering matrix of the inverted quadratic barrier at dimensionless
// energy eps, in the (transmit, reflect) amplitude convention: the diagonal
// carries transmission, the off-diagonal reflection.  Unitary for all eps.
Eigen::Matrix2cd smatrix(double eps);

struct TransmissionReflection {
    double t2 = 0;  // transmission probability
    double r2 = 0;  // reflection probability, computed so t2 + r2 == 1 bitwise
};

TransmissionReflection transmission_reflection(double eps);

// Principal-value phase of the gamma prefactor of the s-matrix.
double scattering_phase(double eps);

// Energy derivative of that phase: the peak of a narrow scattered packet is
// delayed by this amount.  Even in eps.
double group_delay(double eps);

// Transmission probability averaged over the Gaussian energy content of a
// packet with center eps0 and bandwidth delta.
double energy_averaged_transmission(double eps0, double delta);

// Incoming packet riding the barrier's own log-time coordinate: along each
// incoming ray the envelope argument is t_start + ln|x|, so the envelope is
// centered at |x| = exp(-t_start) and every energy choice shares one launch
// geometry.  The density maximum sits below the center because of the 1/|x|
// weight, at ln|x| = -t_start - 1/(2 delta^2).
struct PacketSpec {
    double eps0 = 0;
    double delta = 1.0;
    double t_start = -2.2;
    bool symmetrized = false;  // even-parity two-sided variant

    void validate() const;
};

// The envelope has Gaussian mass exp(-z^2 delta^2) in z = t_start + ln|x|,
// so narrow bandwidths spread over exponentially many decades of |x| and can
// never fit a uniform grid; these launch guards fail fast in that regime.
struct LaunchGuards {
    double inner_mass_limit = 1e-3;  // mass already inside |x| < 1
    double outer_mass_limit = 1e-5;  // mass beyond 97% of the box
};

struct LaunchResult {
    GridState state;
    double peak_x = 0;      // grid location of the density maximum
    double inner_mass = 0;  // mass at |x| < 1 at launch
    double outer_mass = 0;  // mass beyond 0.97 * x_max at launch
};

LaunchResult incident_packet(const PacketSpec& spec, const GridSpec& grid,
                             const LaunchGuards& guards = {});

// Strang-split propagator for p^2 - x^2/4 on the periodic grid: half kick
// from the barrier, full spectral kinetic step, half kick.
class SplitStepEngine {
  public:
    SplitStepEngine(const GridSpec& grid, double dt);

    void step(Vec& psi);
    double dt() const { return dt_; }
    const GridSpec& grid() const { return grid_; }

  private:
    GridSpec grid_;
    double dt_;
    std::vector<cplx> half_barrier_;
    std::vector<cplx> kinetic_;
    Fft1d fft_;
};

struct ScatterGuards {
    double boundary_mass_limit = 1e-3;  // mass in the outer 3% of the box
    double norm_drift_limit = 1e-8;     // the scheme is unitary to roundoff
    int check_every = 64;
};

// Optional observer called on the launch state, then after every `every`
// steps, and on the final state.  Disabled when every == 0.
struct SampleHook {
    std::function<void(double t, const GridState& psi)> fn;
    int every = 0;
};

struct ScatterResult {
    GridState psi;
    double p_t = 0;            // mass on the transmitted side x < 0
    double p_r = 0;            // mass on the reflected side x > 0
    double barrier_mass = 0;   // residual mass at |x| < 1
    double boundary_mass = 0;  // mass in the outer 3% of the box at the end
    double norm_err = 0;
    long steps = 0;
    bool cancelled = false;
};

// Launches the packet and evolves it to t_final.  The step is adjusted to
// divide the interval exactly; guards run every check_every steps.
ScatterResult scatter_evolve(const PacketSpec& spec, const GridSpec& grid,
                             double dt, double t_final,
                             const ProgressFn& progress = {},
                             const ScatterGuards& sguards = {},
                             const LaunchGuards& lguards = {},
                             const SampleHook& hook = {});

// Narrow-band prediction for the scattered density at time t: the launch
// envelope reappears on each side delayed by the group delay and scaled by
// the transmission or reflection probability at the center energy.  The
// transmitted column lives on x < 0, the reflected one on x > 0.
struct EnvelopeDensities {
    std::vector<double> transmitted;
    std::vector<double> reflected;
};

EnvelopeDensities scattered_envelope_densities(const PacketSpec& spec,
                                               const GridSpec& grid, double t);

// One-parameter fit of measured transmissions at several center energies to
// the bandwidth-smeared logistic family, returning the inferred logistic
// temperature.
struct TeffFit {
    double t_eff = 0;
    double rms = 0;
};

TeffFit fit_teff(const std::vector<double>& eps0, const std::vector<double>& p_t,
                 double delta);

}  // namespace iho
