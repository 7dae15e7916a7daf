#include "iho/propagate.hpp"

#include <cmath>

#include "iho/errors.hpp"

namespace iho {

ExactPropagator::ExactPropagator(const Mat& h) {
    if (h.rows() != h.cols() || h.rows() < 2)
        throw InvalidInputError("propagator: matrix must be square, dim >= 2");
    if (hermiticity_error(h) > 1e-12)
        throw InvalidInputError("propagator: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    if (es.info() != Eigen::Success)
        throw NumericalGuardError("propagator: eigendecomposition failed");
    evals_ = es.eigenvalues();
    evecs_ = es.eigenvectors();
}

Vec ExactPropagator::apply(const Vec& psi, double t) const {
    if (psi.size() != evals_.size())
        throw InvalidInputError("propagator: state dimension mismatch");
    Vec w = evecs_.adjoint() * psi;
    for (int j = 0; j < w.size(); ++j) w[j] *= std::polar(1.0, -evals_[j] * t);
    return evecs_ * w;
}

Mat ExactPropagator::evolution(double t) const {
    Vec ph(evals_.size());
    for (int j = 0; j < ph.size(); ++j) ph[j] = std::polar(1.0, -evals_[j] * t);
    return evecs_ * ph.asDiagonal() * evecs_.adjoint();
}

Mat ExactPropagator::heisenberg(const Mat& op, double t) const {
    const Mat u = evolution(t);
    return u.adjoint() * op * u;
}

namespace {

// Chebyshev evaluation of exp(-i A tau) v for Hermitian banded A with
// spectrum inside [lo, hi].  Converges like a Bessel tail once the order
// exceeds (hi-lo)*tau/2; iterate until terms fall below 1e-16 twice running.
void cheb_exp_apply(const BandedHam& a, double tau, Vec& v, Vec& t0, Vec& t1,
                    Vec& t2, Vec& acc) {
    const auto [lo, hi] = a.bounds();
    const double center = 0.5 * (hi + lo);
    const double half = std::max(0.5 * (hi - lo), 1e-12);
    const double z = half * tau;

    t0 = v;
    // t1 = B v with B = (A - center)/half
    a.matvec(v, t1);
    t1 = (t1 - center * v) / half;

    acc = std::cyl_bessel_j(0, z) * t0 + 2.0 * cplx(0, -1) * std::cyl_bessel_j(1, z) * t1;
    cplx ik = -1;  // (-i)^k, starting at k = 2
    int small_run = 0;
    for (int k = 2; k < 16 * (static_cast<int>(z) + 4); ++k) {
        a.matvec(t1, t2);
        t2 = 2.0 * (t2 - center * t1) / half - t0;
        const double jk = std::cyl_bessel_j(k, z);
        acc += 2.0 * ik * jk * t2;
        ik *= cplx(0, -1);
        t0.swap(t1);
        t1.swap(t2);
        if (static_cast<double>(k) > z) {
            small_run = (std::abs(jk) < 1e-16) ? small_run + 1 : 0;
            if (small_run >= 2) break;
        }
    }
    const cplx phase = std::polar(1.0, -center * tau);
    v = phase * acc;
}

}  // namespace

SteppedPropagator::SteppedPropagator(const LabFrameDriven& h, int dim, Vec psi0,
                                     double dt)
    : h_(h), dim_(dim), psi_(std::move(psi0)), dt_(dt) {
    h_.validate();
    FockSpace{dim}.validate();
    if (psi_.size() != dim)
        throw InvalidInputError("stepped propagator: state dimension mismatch");
    const double dt_max = 2.0 * M_PI / (40.0 * h_.omega_m);
    if (!(dt > 0))
        throw InvalidInputError("stepped propagator: dt must be positive");
    if (dt > dt_max)
        throw NumericalGuardError(
            "stepped propagator: dt does not resolve the drive (need dt <= " +
            std::to_string(dt_max) + " s, got " + std::to_string(dt) + " s)");
}

void SteppedPropagator::step(double dtheta) {
    const BandedHam ham = build_hamiltonian(h_, dim_, theta_ + 0.5 * dtheta);
    cheb_exp_apply(ham, dtheta, psi_, t0_, t1_, t2_, acc_);
    theta_ += dtheta;
    ++steps_;
}

bool SteppedPropagator::advance_to(double t, const ProgressFn& progress) {
    const double theta_target = t * h_.omega0;
    if (theta_target < theta_ - 1e-9)
        throw InvalidInputError("stepped propagator: cannot advance backwards");
    const double dtheta = dt_ * h_.omega0;
    const double t_begin = theta_;
    while (theta_target - theta_ > 1e-9 * std::max(1.0, theta_target)) {
        step(std::min(dtheta, theta_target - theta_));
        if (progress && steps_ % 256 == 0) {
            const double frac = (theta_ - t_begin) / (theta_target - t_begin);
            if (!progress(frac)) {
                cancelled_ = true;
                return false;
            }
        }
    }
    return true;
}

double SteppedPropagator::norm_drift() const { return std::abs(psi_.norm() - 1.0); }

SteppedResult propagate_stepped(const LabFrameDriven& h, int dim, const Vec& psi0,
                                double t_final, double dt,
                                const ProgressFn& progress) {
    SteppedPropagator p(h, dim, psi0, dt);
    p.advance_to(t_final, progress);
    return {p.psi(), p.norm_drift(), p.steps(), p.cancelled()};
}

void to_rotating_frame(Vec& psi, double theta) {
    for (int n = 0; n < psi.size(); ++n)
        psi[n] *= std::polar(1.0, (n + 0.5) * theta);
}

Mat squeeze_propagator_oracle(int dim, double r, double phi) {
    FockSpace{dim}.validate();
    if (!(r >= 0)) throw InvalidInputError("squeeze oracle: r must be >= 0");
    if (r == 0) return Mat::Identity(dim, dim);

    const double th = std::tanh(r);
    const double lnch = std::log(std::cosh(r));

    // exp(+i (th/2) a^dag^2): entry (n + 2m, n) = (i th/2)^m / m! *
    // sqrt((n+2m)!/n!), assembled in log space.  a^2 exponential is the
    // transpose pattern with the same magnitudes.
    Mat up = Mat::Zero(dim, dim);
    Mat dn = Mat::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        for (int m = 0; n + 2 * m < dim; ++m) {
            const double lnmag = m * std::log(th / 2.0) - std::lgamma(m + 1.0) +
                                 0.5 * (std::lgamma(n + 2.0 * m + 1.0) -
                                        std::lgamma(n + 1.0));
            const cplx val = std::polar(std::exp(lnmag), m * M_PI_2);  // i^m
            up(n + 2 * m, n) = val;
            dn(n, n + 2 * m) = val;
        }
    }
    Vec mid(dim);
    for (int n = 0; n < dim; ++n) mid[n] = std::exp(-lnch * (n + 0.5));

    Mat u = up * mid.asDiagonal() * dn;
    if (phi != 0.0) {
        Vec rot(dim);
        for (int n = 0; n < dim; ++n) rot[n] = std::polar(1.0, -0.5 * phi * n);
        u = rot.asDiagonal() * u * rot.conjugate().asDiagonal();
    }
    return u;
}

}  // namespace iho
