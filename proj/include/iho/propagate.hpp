#pragma once
#include <Eigen/Dense>
#include <functional>

#include "iho/hamiltonian.hpp"

namespace iho {

// Called periodically by long propagations with the fraction done; returning
// false cancels the run (the result is returned partially evolved and marked
// cancelled).
using ProgressFn = std::function<bool(double)>;

// Evolution under a fixed Hermitian matrix via one eigendecomposition,
// psi(t) = V exp(-i L t) V^dag psi.  The decomposition is reused across
// times, so sampling a whole curve costs one solve plus O(dim^2) per sample.
class ExactPropagator {
  public:
    explicit ExactPropagator(const Mat& h);

    int dim() const { return static_cast<int>(evals_.size()); }
    const Eigen::VectorXd& eigenvalues() const { return evals_; }

    Vec apply(const Vec& psi, double t) const;
    Mat evolution(double t) const;  // full U(t)
    // A^dag f(t) A with f(t) = conjugation by U(t), i.e. op in the Heisenberg
    // picture: U^dag(t) op U(t).
    Mat heisenberg(const Mat& op, double t) const;

  private:
    Eigen::VectorXd evals_;
    Mat evecs_;
};

// Piecewise-constant midpoint stepping for the driven lab-frame trap:
// per step psi <- exp(-i H(theta + dtheta/2) dtheta) psi, with the
// exponential-times-vector evaluated by a Chebyshev expansion on the banded
// matrix (converged to machine precision, so each step applies the midpoint
// exponential itself and stays unitary up to roundoff).
//
// dt is in seconds and must resolve the drive: dt <= 2*pi/(40*omega_m) is
// enforced before any stepping.
class SteppedPropagator {
  public:
    SteppedPropagator(const LabFrameDriven& h, int dim, Vec psi0, double dt);

    // Advance to lab time t (>= current time); snapshots may be taken between
    // calls.  Returns false if a progress callback cancelled the run.
    bool advance_to(double t, const ProgressFn& progress = {});

    double time() const { return theta_ / h_.omega0; }
    double theta() const { return theta_; }
    const Vec& psi() const { return psi_; }
    double norm_drift() const;  // |norm - 1| so far
    long steps() const { return steps_; }
    bool cancelled() const { return cancelled_; }

  private:
    void step(double dtheta);

    LabFrameDriven h_;
    int dim_;
    Vec psi_;
    double dt_;
    double theta_ = 0;
    long steps_ = 0;
    bool cancelled_ = false;
    Vec t0_, t1_, t2_, acc_;  // Chebyshev work vectors
};

// One-shot convenience wrapper.
struct SteppedResult {
    Vec psi;
    double norm_drift = 0;
    long steps = 0;
    bool cancelled = false;
};
SteppedResult propagate_stepped(const LabFrameDriven& h, int dim, const Vec& psi0,
                                double t_final, double dt,
                                const ProgressFn& progress = {});

// Lab frame -> frame co-rotating with the undriven trap:
// c_n <- c_n * exp(+i (n + 1/2) theta), theta = omega0 * t.
void to_rotating_frame(Vec& psi, double theta);

// Independent closed-form propagator for the squeeze generator with
// lambda * t = r at rotating-frame phase phi: the normal-ordered
// (disentangled) product
//   U = R exp(+i tanh(r)/2 a^dag^2) exp(-ln cosh(r) (n+1/2))
//         exp(+i tanh(r)/2 a^2) R^dag,        R = exp(-i (phi/2) n).
// Built from triangular series in log space, no eigendecomposition involved;
// exact in the untruncated limit, unitary on the well-converged subspace.
Mat squeeze_propagator_oracle(int dim, double r, double phi = 0.0);

}  // namespace iho
