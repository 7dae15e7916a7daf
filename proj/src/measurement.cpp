#include "iho/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "iho/errors.hpp"
#include "iho/kernels.hpp"

namespace iho {

namespace {

bool near(double a, double b) { return std::abs(a - b) < 1e-12; }

// Uniform spacing of a strictly increasing sample grid, or a throw.
double uniform_step(const std::vector<double>& t, const char* what) {
    if (t.size() < 2) throw InvalidInputError(std::string(what) + ": need >= 2 samples");
    const double dt = t[1] - t[0];
    if (!(dt > 0)) throw InvalidInputError(std::string(what) + ": times must increase");
    for (size_t j = 1; j < t.size(); ++j) {
        const double step = t[j] - t[j - 1];
        if (std::abs(step - dt) > 1e-9 * std::max(dt, 1.0))
            throw InvalidInputError(std::string(what) + ": time grid must be uniform");
    }
    return dt;
}

}  // namespace

ReadoutSignal readout_signal(const GridState& psi, double rabi_rate,
                             const std::vector<double>& times,
                             double phase_setting) {
    psi.grid.validate();
    if (!(rabi_rate > 0))
        throw InvalidInputError("readout: rabi rate must be positive");
    if (times.empty()) throw InvalidInputError("readout: no probe times");
    const bool sine_channel = near(phase_setting, 0.0);
    if (!sine_channel && !near(phase_setting, M_PI_2))
        throw InvalidInputError("readout: phase setting must be 0 or pi/2");
    if (std::abs(psi.norm2() - 1.0) > 1e-9)
        throw InvalidInputError("readout: state must be normalized");

    const int nk = static_cast<int>(times.size());
    std::vector<double> ks(nk);
    for (int j = 0; j < nk; ++j) {
        if (times[j] < 0) throw InvalidInputError("readout: negative probe time");
        ks[j] = 2.0 * rabi_rate * times[j];
    }
    const Eigen::VectorXd rho = psi.density();
    const Eigen::VectorXd ax = psi.grid.axis();
    std::vector<double> s(nk), c(nk);
    kern::readout_battery(ks.data(), nk, ax.data(), rho.data(), psi.grid.n,
                          psi.grid.dx(), s.data(), c.data(),
                          kern::default_exec());

    ReadoutSignal out;
    out.times = times;
    out.rabi_rate = rabi_rate;
    out.phase_setting = sine_channel ? 0.0 : M_PI_2;
    out.p_down.resize(nk);
    for (int j = 0; j < nk; ++j)
        out.p_down[j] = 1.0 - (sine_channel ? s[j] : c[j]);
    return out;
}

DensityReconstruction reconstruct_density(const ReadoutSignal& phase0,
                                          const ReadoutSignal& phase90,
                                          const GridSpec& grid,
                                          double apodization_alpha) {
    grid.validate();
    if (!near(phase0.phase_setting, 0.0) || !near(phase90.phase_setting, M_PI_2))
        throw InvalidInputError("reconstruct: need one signal per phase setting");
    if (phase0.times != phase90.times ||
        std::abs(phase0.rabi_rate - phase90.rabi_rate) > 0)
        throw InvalidInputError("reconstruct: signals were not taken together");
    if (phase0.p_down.size() != phase0.times.size() ||
        phase90.p_down.size() != phase90.times.size())
        throw InvalidInputError("reconstruct: malformed signal");
    if (!(apodization_alpha > 0))
        throw InvalidInputError("reconstruct: apodization must be positive");
    const double dt = uniform_step(phase0.times, "reconstruct");
    if (std::abs(phase0.times.front()) > 1e-15)
        throw InvalidInputError("reconstruct: probe must start at t = 0");

    const int nk = static_cast<int>(phase0.times.size());
    const double dk = 2.0 * phase0.rabi_rate * dt;
    const double k_max = 2.0 * phase0.rabi_rate * phase0.times.back();

    DensityReconstruction out;
    out.k_max = k_max;
    out.apodization_alpha = apodization_alpha;
    // The window exp(-(alpha k / k_max)^2) is a Gaussian of k-width
    // k_max/(alpha sqrt(2)), i.e. real-space smoothing of width
    // sqrt(2) alpha / k_max.
    out.smoothing_sigma = std::sqrt(2.0) * apodization_alpha / k_max;
    out.density.resize(grid.n);

    // Trapezoid-weighted, windowed quadrature samples.  The synthesis sums
    // run through the same battery kernel as the analysis, with the roles of
    // positions and wavenumbers swapped.
    std::vector<double> ks(nk), sin_w(nk), cos_w(nk);
    for (int j = 0; j < nk; ++j) {
        const double u = apodization_alpha * (phase0.times[j] / phase0.times.back());
        const double w = std::exp(-u * u) * ((j == 0 || j == nk - 1) ? 0.5 : 1.0);
        ks[j] = dk * j;
        sin_w[j] = w * (1.0 - phase0.p_down[j]);
        cos_w[j] = w * (1.0 - phase90.p_down[j]);
    }
    const Eigen::VectorXd ax = grid.axis();
    std::vector<double> from_sin(grid.n), from_cos(grid.n), scratch(grid.n);
    kern::readout_battery(ax.data(), grid.n, ks.data(), sin_w.data(), nk, 1.0,
                          from_sin.data(), scratch.data(), kern::default_exec());
    kern::readout_battery(ax.data(), grid.n, ks.data(), cos_w.data(), nk, 1.0,
                          scratch.data(), from_cos.data(), kern::default_exec());
    for (int i = 0; i < grid.n; ++i)
        out.density[i] = (from_sin[i] + from_cos[i]) * dk / M_PI;

    double neg = 0;
    for (int i = 0; i < grid.n; ++i)
        if (out.density[i] < 0) neg -= out.density[i] * grid.dx();
    out.negative_mass = neg;
    if (neg > 0.01)
        throw NumericalGuardError(
            "reconstruct: " + std::to_string(neg) +
            " of the mass came out negative; probe bandwidth too small");
    return out;
}

Eigen::VectorXd gaussian_smooth(const Eigen::VectorXd& rho,
                                const GridSpec& grid, double sigma) {
    grid.validate();
    if (rho.size() != grid.n) throw InvalidInputError("smooth: size mismatch");
    if (!(sigma > 0)) throw InvalidInputError("smooth: sigma must be positive");
    const double dx = grid.dx();
    const int reach = static_cast<int>(std::ceil(6.0 * sigma / dx));
    std::vector<double> kernel(2 * reach + 1);
    double ksum = 0;
    for (int r = -reach; r <= reach; ++r) {
        const double u = r * dx / sigma;
        ksum += kernel[r + reach] = std::exp(-0.5 * u * u);
    }
    for (double& k : kernel) k /= ksum;

    Eigen::VectorXd out(grid.n);
    for (int i = 0; i < grid.n; ++i) {
        double acc = 0;
        const int lo = std::max(0, i - reach), hi = std::min(grid.n - 1, i + reach);
        for (int j = lo; j <= hi; ++j) acc += kernel[j - i + reach] * rho[j];
        out[i] = acc;
    }
    return out;
}

PhononDistribution squeezed_vacuum_populations(double r, int n_max,
                                               double tail_tol) {
    if (!(r >= 0)) throw InvalidInputError("squeezed populations: r must be >= 0");
    if (n_max < 0) throw InvalidInputError("squeezed populations: n_max < 0");

    PhononDistribution out;
    out.populations.assign(n_max + 1, 0.0);
    const double lnth = (r > 0) ? std::log(std::tanh(r)) : 0.0;
    const double lnch = std::log(std::cosh(r));
    for (int k = 0; 2 * k <= n_max; ++k) {
        if (r == 0 && k > 0) break;
        const double lnp = std::lgamma(2.0 * k + 1.0) + 2.0 * k * lnth -
                           2.0 * k * M_LN2 - 2.0 * std::lgamma(k + 1.0) - lnch;
        out.populations[2 * k] = std::exp(lnp);
    }
    double sum = 0;
    for (double p : out.populations) sum += p;
    out.tail_mass = 1.0 - sum;
    out.truncation_warning = out.tail_mass > tail_tol;
    return out;
}

PhononDistribution thermal_populations(double nbar, int n_max, double tail_tol) {
    if (!(nbar >= 0)) throw InvalidInputError("thermal populations: nbar < 0");
    if (n_max < 0) throw InvalidInputError("thermal populations: n_max < 0");

    PhononDistribution out;
    out.populations.assign(n_max + 1, 0.0);
    const double q = nbar / (1.0 + nbar);
    double p = 1.0 / (1.0 + nbar);
    for (int n = 0; n <= n_max; ++n) {
        out.populations[n] = p;
        p *= q;
    }
    double sum = 0;
    for (double v : out.populations) sum += v;
    out.tail_mass = 1.0 - sum;
    out.truncation_warning = out.tail_mass > tail_tol;
    return out;
}

RadiationReport radiation_report(double r, double thermal_nbar, int n_max) {
    RadiationReport rep;
    rep.squeezed = squeezed_vacuum_populations(r, n_max);
    rep.thermal = thermal_populations(thermal_nbar, n_max);
    const double sh = std::sinh(r);
    rep.n_mean = sh * sh;
    rep.thermal_nbar = thermal_nbar;
    for (size_t n = 1; n < rep.squeezed.populations.size(); n += 2)
        rep.odd_mass += rep.squeezed.populations[n];
    double tv = 0;
    for (size_t n = 0; n < rep.squeezed.populations.size(); ++n)
        tv += std::abs(rep.squeezed.populations[n] - rep.thermal.populations[n]);
    rep.total_variation = 0.5 * tv;
    return rep;
}

}  // namespace iho
