#include "iho/scattering.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_gamma.h>

#include <algorithm>
#include <cmath>

#include "iho/errors.hpp"
#include "iho/kernels.hpp"

namespace iho {

namespace {

// log|Gamma(1/2 - i eps)| and its principal argument.
std::pair<double, double> lngamma_half(double eps) {
    gsl_sf_result lnr, arg;
    if (gsl_sf_lngamma_complex_e(0.5, -eps, &lnr, &arg) != 0)
        throw NumericalGuardError("smatrix: gamma evaluation failed");
    return {lnr.val, arg.val};
}

// 1 / (1 + e^a) without overflow.
double logistic(double a) {
    if (a > 0) {
        const double u = std::exp(-a);
        return u / (1.0 + u);
    }
    return 1.0 / (1.0 + std::exp(a));
}

struct SmearParams {
    double eps0, delta, t;
};

double smear_integrand(double u, void* raw) {
    const auto* p = static_cast<const SmearParams*>(raw);
    return std::exp(-u * u) * logistic((p->eps0 + p->delta * u) / p->t);
}

// Gaussian energy average (1/sqrt(pi)) integral e^{-u^2} T(eps0 + delta*u) du
// of the logistic transmission with temperature t.  The logistic has poles a
// distance pi*t/delta off the real axis, which ruins fixed-order quadrature
// for narrow temperatures, so an adaptive Gauss-Kronrod rule is used on the
// interval where the Gaussian weight is above 1e-35.
double smeared_transmission(double eps0, double delta, double t) {
    static thread_local gsl_integration_workspace* work = nullptr;
    if (!work) {
        gsl_set_error_handler_off();
        work = gsl_integration_workspace_alloc(512);
        if (!work) throw NumericalGuardError("quadrature allocation failed");
    }
    SmearParams p{eps0, delta, t};
    gsl_function f{&smear_integrand, &p};
    double value = 0, abserr = 0;
    const int status =
        gsl_integration_qag(&f, -9.0, 9.0, 1e-13, 1e-12, 512,
                            GSL_INTEG_GAUSS61, work, &value, &abserr);
    if (status != 0 && abserr > 1e-10)
        throw NumericalGuardError("energy average: quadrature failed to converge");
    return value / std::sqrt(M_PI);
}

}  // namespace

Eigen::Matrix2cd smatrix(double eps) {
    const auto [lnr, arg] = lngamma_half(eps);
    const double base = lnr - 0.5 * std::log(2.0 * M_PI);
    const cplx diag = std::polar(std::exp(base - 0.5 * M_PI * eps), arg - 0.25 * M_PI);
    const cplx off = std::polar(std::exp(base + 0.5 * M_PI * eps), arg + 0.25 * M_PI);
    Eigen::Matrix2cd s;
    s << diag, off, off, diag;
    return s;
}

TransmissionReflection transmission_reflection(double eps) {
    TransmissionReflection out;
    const double a = 2.0 * M_PI * std::abs(eps);
    const double u = std::exp(-a);
    const double small = u / (1.0 + u);
    const double large = 1.0 - small;
    if (eps >= 0) {
        out.t2 = small;
        out.r2 = large;
    } else {
        out.t2 = large;
        out.r2 = small;
    }
    return out;
}

double scattering_phase(double eps) { return lngamma_half(eps).second; }

double group_delay(double eps) {
    const double h = 1e-5;
    double d = lngamma_half(eps + h).second - lngamma_half(eps - h).second;
    d -= 2.0 * M_PI * std::round(d / (2.0 * M_PI));
    return d / (2.0 * h);
}

double energy_averaged_transmission(double eps0, double delta) {
    if (!(delta > 0))
        throw InvalidInputError("energy average: bandwidth must be positive");
    return smeared_transmission(eps0, delta, 1.0 / (2.0 * M_PI));
}

void PacketSpec::validate() const {
    if (!(delta > 0)) throw InvalidInputError("packet: bandwidth must be positive");
    if (!std::isfinite(eps0) || !std::isfinite(t_start))
        throw InvalidInputError("packet: parameters must be finite");
}

LaunchResult incident_packet(const PacketSpec& spec, const GridSpec& grid,
                             const LaunchGuards& guards) {
    spec.validate();
    grid.validate();

    LaunchResult out;
    out.state.grid = grid;
    out.state.psi = Vec::Zero(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        if (x == 0.0) continue;
        if (!spec.symmetrized && x < 0) continue;
        const double ax = std::abs(x);
        const double lx = std::log(ax);
        const double z = (spec.t_start + lx) * spec.delta;
        const double amp = std::exp(-0.5 * z * z) / std::sqrt(ax);
        // Carrier sign: the scattering label eps0 counts energy downward from
        // the barrier top, so the grid energy of the packet is -eps0.
        const double phase = spec.eps0 * lx - 0.25 * x * x;
        out.state.psi[i] = std::polar(amp, phase);
    }
    out.state.normalize();

    const Eigen::VectorXd rho = out.state.density();
    const double dx = grid.dx();
    const double outer = 0.97 * grid.x_max;
    int peak_i = 0;
    for (int i = 0; i < grid.n; ++i) {
        const double ax = std::abs(grid.x(i));
        if (ax < 1.0) out.inner_mass += rho[i] * dx;
        if (ax > outer) out.outer_mass += rho[i] * dx;
        if (rho[i] > rho[peak_i]) peak_i = i;
    }
    out.peak_x = grid.x(peak_i);

    if (out.inner_mass > guards.inner_mass_limit)
        throw NumericalGuardError(
            "packet launch: " + std::to_string(out.inner_mass) +
            " of the norm already sits at |x| < 1; the bandwidth/start time "
            "combination does not separate the packet from the barrier");
    if (out.outer_mass > guards.outer_mass_limit)
        throw NumericalGuardError(
            "packet launch: " + std::to_string(out.outer_mass) +
            " of the norm falls off the grid; enlarge x_max or move t_start");
    return out;
}

SplitStepEngine::SplitStepEngine(const GridSpec& grid, double dt)
    : grid_(grid), dt_(dt), fft_(static_cast<std::size_t>(grid.n)) {
    grid_.validate();
    if (!(dt > 0)) throw InvalidInputError("split step: dt must be positive");
    half_barrier_.resize(grid.n);
    kinetic_.resize(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid_.x(i);
        const double k = grid_.k(i);
        half_barrier_[i] = std::polar(1.0, 0.125 * x * x * dt);
        kinetic_[i] = std::polar(1.0, -k * k * dt);
    }
}

void SplitStepEngine::step(Vec& psi) {
    const std::size_t n = static_cast<std::size_t>(grid_.n);
    if (psi.size() != grid_.n)
        throw InvalidInputError("split step: state size mismatch");
    cplx* p = psi.data();
    const auto ex = kern::default_exec();
    kern::cmul_inplace(p, half_barrier_.data(), n, ex);
    std::copy(p, p + n, fft_.data());
    fft_.forward();
    kern::cmul_inplace(fft_.data(), kinetic_.data(), n, ex);
    fft_.backward();
    std::copy(fft_.data(), fft_.data() + n, p);
    kern::cmul_inplace(p, half_barrier_.data(), n, ex);
}

namespace {

double strip_mass(const GridState& st, double lo_ax, double hi_ax) {
    const Eigen::VectorXd rho = st.density();
    const double dx = st.grid.dx();
    double m = 0;
    for (int i = 0; i < st.grid.n; ++i) {
        const double ax = std::abs(st.grid.x(i));
        if (ax >= lo_ax && ax < hi_ax) m += rho[i] * dx;
    }
    return m;
}

}  // namespace

ScatterResult scatter_evolve(const PacketSpec& spec, const GridSpec& grid,
                             double dt, double t_final,
                             const ProgressFn& progress,
                             const ScatterGuards& sguards,
                             const LaunchGuards& lguards,
                             const SampleHook& hook) {
    if (!(t_final > spec.t_start))
        throw InvalidInputError("scatter: t_final must exceed the launch time");
    if (!(dt > 0)) throw InvalidInputError("scatter: dt must be positive");

    ScatterResult out;
    out.psi = incident_packet(spec, grid, lguards).state;

    const double span = t_final - spec.t_start;
    const long nsteps = std::max(1L, std::lround(span / dt));
    SplitStepEngine engine(grid, span / nsteps);
    const bool sampling = hook.fn && hook.every > 0;
    if (sampling) hook.fn(spec.t_start, out.psi);

    for (long s = 0; s < nsteps; ++s) {
        engine.step(out.psi.psi);
        ++out.steps;
        if (sampling && (out.steps % hook.every == 0 || s + 1 == nsteps))
            hook.fn(spec.t_start + (s + 1) * engine.dt(), out.psi);
        if (out.steps % sguards.check_every == 0 || s + 1 == nsteps) {
            const double bmass = strip_mass(out.psi, 0.97 * grid.x_max,
                                            grid.x_max + 1.0);
            if (bmass > sguards.boundary_mass_limit)
                throw NumericalGuardError(
                    "scatter: " + std::to_string(bmass) +
                    " of the norm reached the box boundary; enlarge x_max");
            const double drift = std::abs(out.psi.norm2() - 1.0);
            if (drift > sguards.norm_drift_limit)
                throw NumericalGuardError("scatter: norm drift " +
                                          std::to_string(drift));
        }
        if (progress && out.steps % 256 == 0) {
            if (!progress(static_cast<double>(s + 1) / nsteps)) {
                out.cancelled = true;
                break;
            }
        }
    }

    const Eigen::VectorXd rho = out.psi.density();
    const double dx = grid.dx();
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        const double m = rho[i] * dx;
        if (x < 0) out.p_t += m;
        if (x > 0) out.p_r += m;
        if (std::abs(x) < 1.0) out.barrier_mass += m;
    }
    out.boundary_mass = strip_mass(out.psi, 0.97 * grid.x_max, grid.x_max + 1.0);
    out.norm_err = std::abs(out.psi.norm2() - 1.0);
    return out;
}

EnvelopeDensities scattered_envelope_densities(const PacketSpec& spec,
                                               const GridSpec& grid, double t) {
    spec.validate();
    grid.validate();
    const auto [t2, r2] = transmission_reflection(spec.eps0);
    const double delay = group_delay(spec.eps0);
    const double norm = spec.delta / std::sqrt(M_PI);

    EnvelopeDensities out;
    out.transmitted.assign(grid.n, 0.0);
    out.reflected.assign(grid.n, 0.0);
    for (int i = 0; i < grid.n; ++i) {
        const double x = grid.x(i);
        if (x == 0.0) continue;
        const double ax = std::abs(x);
        const double z = (t - std::log(ax) - delay) * spec.delta;
        const double env = norm * std::exp(-z * z) / ax;
        if (x < 0) out.transmitted[i] = t2 * env;
        if (x > 0) out.reflected[i] = r2 * env;
    }
    return out;
}

TeffFit fit_teff(const std::vector<double>& eps0, const std::vector<double>& p_t,
                 double delta) {
    if (eps0.size() != p_t.size() || eps0.empty())
        throw InvalidInputError("fit_teff: input length mismatch");
    if (!(delta > 0)) throw InvalidInputError("fit_teff: bandwidth must be positive");

    const auto sse = [&](double t) {
        double acc = 0;
        for (size_t i = 0; i < eps0.size(); ++i) {
            const double r = p_t[i] - smeared_transmission(eps0[i], delta, t);
            acc += r * r;
        }
        return acc;
    };

    double lo = 0.02, hi = 1.0;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = sse(x1), f2 = sse(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = sse(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = sse(x2);
        }
    }
    TeffFit fit;
    fit.t_eff = 0.5 * (lo + hi);
    fit.rms = std::sqrt(sse(fit.t_eff) / eps0.size());
    return fit;
}

}  // namespace iho
