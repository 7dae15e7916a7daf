#include "iho/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "iho/duality.hpp"
#include "iho/errors.hpp"
#include "iho/kernels.hpp"
#include "iho/measurement.hpp"
#include "iho/otoc.hpp"
#include "iho/propagate.hpp"
#include "iho/scattering.hpp"
#include "iho/units.hpp"

namespace iho {

using nlohmann::json;

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[20];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

class ArtifactWriter {
  public:
    explicit ArtifactWriter(std::string dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw IoError("cannot create output directory '" + dir_ + "'");
    }

    void write_csv(const std::string& name, const std::string& header,
                   const std::vector<std::vector<double>>& rows) {
        std::string bytes = header + "\n";
        for (const auto& row : rows) {
            for (size_t i = 0; i < row.size(); ++i) {
                if (i) bytes += ',';
                bytes += fmt(row[i]);
            }
            bytes += '\n';
        }
        write_bytes(name, bytes);
    }

    void write_json(const std::string& name, const json& j) {
        write_bytes(name, j.dump(2) + "\n");
    }

    const std::vector<std::string>& files() const { return files_; }
    const std::map<std::string, std::string>& hashes() const { return hashes_; }

  private:
    void write_bytes(const std::string& name, const std::string& bytes) {
        const std::string path = dir_ + "/" + name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + path + "' for writing");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("short write to '" + path + "'");
        files_.push_back(name);
        hashes_[name] = fnv1a_hex(bytes);
    }

    std::string dir_;
    std::vector<std::string> files_;
    std::map<std::string, std::string> hashes_;
};

struct Physical {
    UnitsContract units;
    double phi = 0;
};

Physical physical_from(Config& cfg) {
    Physical ph;
    const double f0 = cfg.get_double("physical.omega0_hz", 1.0e7);
    const double xi = cfg.get_double("physical.xi", 0.01);
    const double amu = cfg.get_double("physical.mass_amu", 9.0121831);
    ph.phi = cfg.get_double("physical.phi", 0.0);
    ph.units = UnitsContract{2.0 * M_PI * f0, xi, amu * si::atomic_mass};
    ph.units.validate();
    return ph;
}

std::vector<double> linspace(double a, double b, int n) {
    if (n < 2) throw ConfigError("need at least 2 sample points");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = a + (b - a) * i / (n - 1);
    return out;
}

json units_json(const UnitsContract& u) {
    return json{{"omega0_rad_s", u.omega0},
                {"omega0_hz", u.omega0 / (2.0 * M_PI)},
                {"xi", u.xi},
                {"mass_ion_kg", u.mass_ion},
                {"lambda_rad_s", u.lambda()},
                {"m_eff_kg", u.m_eff()},
                {"alpha_si", u.alpha()},
                {"x0_m", u.x0()},
                {"t_unit_s", u.t_unit()},
                {"energy_unit_j", u.energy_unit()},
                {"temperature_k", u.temperature_K()},
                {"temperature_dimless", temperature_dimless}};
}

// ---------------------------------------------------------------- otoc ----

void run_otoc(const Physical& ph, Config& cfg, ArtifactWriter& w, json& summary) {
    const int dim = cfg.get_int("otoc.dim", 300);
    const std::vector<double> nvals_raw =
        cfg.get_double_list("otoc.n_values", {0, 1, 2, 4});
    const double t_max = cfg.get_double("otoc.t_max", 3.0);
    const int n_times = cfg.get_int("otoc.n_times", 61);
    const double fit_lo = cfg.get_double("otoc.fit_lo", 1.5);
    const double fit_hi = cfg.get_double("otoc.fit_hi", 3.0);
    cfg.check_all_consumed();

    std::vector<int> nvals;
    for (double v : nvals_raw) {
        if (v < 0 || v != std::floor(v))
            throw ConfigError("otoc.n_values: levels must be nonneg integers");
        nvals.push_back(static_cast<int>(v));
    }

    const std::vector<double> times = linspace(0.0, t_max, n_times);
    const SqueezeForm h{1.0, ph.phi};
    const double x0sq = ph.units.x0() * ph.units.x0();

    summary["fits"] = json::object();
    for (int n : nvals) {
        const OtocCurve curve =
            otoc_expectation(h, dim, fock_pair(dim, n), times);
        std::vector<std::vector<double>> rows;
        for (size_t j = 0; j < times.size(); ++j)
            rows.push_back({curve.t[j], curve.c[j], curve.c[j] * x0sq});
        w.write_csv("otoc_n" + std::to_string(n) + ".csv",
                    "t_dimless,C_over_x0sq,C_SI_m2", rows);

        const LyapunovFit fit = fit_lyapunov(curve.t, curve.c, fit_lo, fit_hi);
        summary["fits"]["n" + std::to_string(n)] = {
            {"lambda_linear", fit.lambda_linear},
            {"lambda", fit.lambda},
            {"amplitude", fit.amplitude},
            {"rms_log", fit.rms_log},
            {"npoints", fit.npoints},
            {"top_band_population", curve.top_band_population},
            {"truncation_warning", curve.truncation_warning}};
    }

    const OtocCurve comm =
        otoc_commutator(h, dim, fock_pair(dim, nvals.front()), times);
    std::vector<std::vector<double>> crow;
    for (size_t j = 0; j < times.size(); ++j)
        crow.push_back({comm.t[j], comm.c[j]});
    w.write_csv("otoc_commutator.csv", "t_dimless,C_commutator", crow);

    const double lam = ph.units.lambda();
    const double t_k = ph.units.temperature_K();
    summary["mss"] = {{"lambda_rad_s", lam},
                      {"temperature_k", t_k},
                      {"bound_rad_s", mss_lambda_bound(t_k)},
                      {"saturation_ratio", lam / mss_lambda_bound(t_k)}};
}

// ----------------------------------------------------------------- rwa ----

void run_rwa(const Physical& ph, Config& cfg, ArtifactWriter& w, json& summary) {
    const int dim = cfg.get_int("rwa.dim", 256);
    const int steps_per_cycle = cfg.get_int("rwa.steps_per_cycle", 48);
    const double lt_fid = cfg.get_double("rwa.lambda_t_max", 1.0);
    const int n_samples = cfg.get_int("rwa.n_samples", 25);
    const int dim_driven = cfg.get_int("rwa.dim_driven", 1024);
    const double lt_drive = cfg.get_double("rwa.lambda_t_drive", 2.6);
    const int sample_cycles = cfg.get_int("rwa.sample_every_cycles", 4);
    const double fit_lo_lt = cfg.get_double("rwa.fit_lo_lambda_t", 1.5);
    const double omega_m =
        2.0 * M_PI * cfg.get_double("rwa.omega_m_hz",
                                    ph.units.omega0 / M_PI);
    cfg.check_all_consumed();

    const LabFrameDriven lab{ph.units.omega0, ph.units.xi, omega_m, ph.phi};
    const double lam = ph.units.lambda();
    const double dt_si = 2.0 * M_PI / omega_m / steps_per_cycle;

    // Fidelity of the driven evolution against the ideal squeeze in the
    // co-rotating frame, for the vacuum and the benchmark pair state.
    const Vec vac = Vec::Unit(dim, 0);
    const Vec pair0 = fock_pair(dim, 0);
    SteppedPropagator drv_vac(lab, dim, vac, dt_si);
    SteppedPropagator drv_pair(lab, dim, pair0, dt_si);
    const ExactPropagator ideal(build_dense(SqueezeForm{1.0, ph.phi}, dim));

    std::vector<std::vector<double>> fid_rows;
    double window_lt = 0;
    bool window_open = true;
    for (int k = 1; k <= n_samples; ++k) {
        const double lt = lt_fid * k / n_samples;
        const double t_si = lt / lam;
        drv_vac.advance_to(t_si);
        drv_pair.advance_to(t_si);
        Vec a = drv_vac.psi();
        Vec b = drv_pair.psi();
        to_rotating_frame(a, drv_vac.theta());
        to_rotating_frame(b, drv_pair.theta());
        const double f_vac = std::norm(ideal.apply(vac, lt).dot(a));
        const double f_pair = std::norm(ideal.apply(pair0, lt).dot(b));
        fid_rows.push_back({lt, f_vac, f_pair});
        if (window_open && f_vac >= 0.99 && f_pair >= 0.99)
            window_lt = lt;
        else
            window_open = false;
    }
    w.write_csv("rwa_fidelity.csv", "lambda_t,fidelity_vacuum,fidelity_pair",
                fid_rows);
    summary["fidelity"] = {{"lambda_t_max", lt_fid},
                           {"min_fidelity_vacuum",
                            std::min_element(fid_rows.begin(), fid_rows.end(),
                                             [](auto& x, auto& y) {
                                                 return x[1] < y[1];
                                             })->at(1)},
                           {"min_fidelity_pair",
                            std::min_element(fid_rows.begin(), fid_rows.end(),
                                             [](auto& x, auto& y) {
                                                 return x[2] < y[2];
                                             })->at(2)},
                           {"window_lambda_t_at_0p99", window_lt},
                           {"norm_drift", drv_pair.norm_drift()}};

    // Growth-rate extraction from the driven run alone, fitted in SI time.
    SteppedPropagator drv(lab, dim_driven, fock_pair(dim_driven, 0), dt_si);
    const Quadratures q = quadratures(dim_driven, ph.phi);
    const double t_cycle = 2.0 * M_PI / omega_m;
    std::vector<double> ts, cs;
    std::vector<std::vector<double>> drows;
    double tail_max = 0;
    for (int m = 1;; ++m) {
        const double t_si = m * sample_cycles * t_cycle;
        if (lam * t_si > lt_drive + 1e-12) break;
        drv.advance_to(t_si);
        Vec psi = drv.psi();
        to_rotating_frame(psi, drv.theta());
        const double ex = std::real(psi.dot(q.x * psi));
        const double ex_si = ex * ph.units.x0();
        ts.push_back(t_si);
        cs.push_back(ex_si * ex_si);
        drows.push_back({t_si, drv.theta(), ex, ex_si});
        tail_max = std::max(tail_max, tail_population(psi));
    }
    w.write_csv("driven_expectation.csv",
                "t_si,theta,x_expect_dimless,x_expect_si_m", drows);

    const LyapunovFit fit =
        fit_lyapunov(ts, cs, fit_lo_lt / lam, lt_drive / lam);
    summary["drive_fit"] = {{"lambda_fit_rad_s", fit.lambda},
                            {"lambda_linear_rad_s", fit.lambda_linear},
                            {"lambda_expected_rad_s", lam},
                            {"rel_err", std::abs(fit.lambda - lam) / lam},
                            {"rms_log", fit.rms_log},
                            {"npoints", fit.npoints},
                            {"dim", dim_driven},
                            {"top_band_population", tail_max},
                            {"norm_drift", drv.norm_drift()},
                            {"steps", drv.steps()}};
}

// -------------------------------------------------------------- scatter ----

void run_scatter(const Physical& ph, Config& cfg, ArtifactWriter& w,
                 json& summary) {
    const double eps0 = cfg.get_double("scatter.eps0", -0.5);
    const double delta = cfg.get_double("scatter.delta", 1.0);
    const double t_start = cfg.get_double("scatter.t_start", -2.2);
    const double x_max = cfg.get_double("scatter.x_max", 220.0);
    const int n_points = cfg.get_int("scatter.n_points", 32768);
    const double dt = cfg.get_double("scatter.dt", 5e-4);
    const double delay = group_delay(eps0);
    const double t_final = cfg.get_double("scatter.t_final", delay + 2.4);
    const double probe_x_si = cfg.get_double("scatter.probe_x_si", 1.35e-9);
    const int sample_every = cfg.get_int("scatter.sample_every", 200);
    cfg.check_all_consumed();

    const GridSpec grid{x_max, n_points};
    const PacketSpec spec{eps0, delta, t_start, false};

    const double probe_x = probe_x_si / ph.units.x0();
    int probe_i = 0;
    for (int i = 1; i < grid.n; ++i)
        if (std::abs(grid.x(i) - probe_x) < std::abs(grid.x(probe_i) - probe_x))
            probe_i = i;

    std::vector<std::vector<double>> probe_rows;
    SampleHook hook;
    hook.every = sample_every;
    hook.fn = [&](double t, const GridState& st) {
        probe_rows.push_back(
            {t, t / ph.units.lambda(), std::norm(st.psi[probe_i])});
    };

    const ScatterResult res =
        scatter_evolve(spec, grid, dt, t_final, {}, {}, {}, hook);

    const EnvelopeDensities env =
        scattered_envelope_densities(spec, grid, t_final);
    std::vector<std::vector<double>> prof, sim;
    const Eigen::VectorXd rho = res.psi.density();
    for (int i = 0; i < grid.n; ++i) {
        prof.push_back({grid.x(i), env.transmitted[i], env.reflected[i]});
        sim.push_back({grid.x(i), rho[i]});
    }
    w.write_csv("scatter_profile.csv", "x_dimless,density_T,density_R", prof);
    w.write_csv("scatter_simulated.csv", "x_dimless,density", sim);
    w.write_csv("probe_series.csv", "t_dimless,t_si_s,density_at_probe",
                probe_rows);

    const double p_t_avg = energy_averaged_transmission(eps0, delta);
    w.write_csv("transmission.csv", "eps0,P_T,P_R,P_T_analytic",
                {{eps0, res.p_t, res.p_r, p_t_avg}});

    summary["eps0"] = eps0;
    summary["delta"] = delta;
    summary["p_t"] = res.p_t;
    summary["p_r"] = res.p_r;
    summary["p_t_analytic_avg"] = p_t_avg;
    summary["p_t_analytic_pointwise"] = transmission_reflection(eps0).t2;
    summary["barrier_mass"] = res.barrier_mass;
    summary["boundary_mass"] = res.boundary_mass;
    summary["norm_err"] = res.norm_err;
    summary["steps"] = res.steps;
    summary["group_delay"] = delay;
    summary["t_final"] = t_final;
    summary["probe_x_dimless"] = grid.x(probe_i);
}

// -------------------------------------------------------------- smatrix ----

void run_smatrix(const Physical&, Config& cfg, ArtifactWriter& w,
                 json& summary) {
    const double eps_min = cfg.get_double("smatrix.eps_min", -3.0);
    const double eps_max = cfg.get_double("smatrix.eps_max", 3.0);
    const int n = cfg.get_int("smatrix.n", 241);
    cfg.check_all_consumed();
    if (!(eps_min < eps_max)) throw ConfigError("smatrix: empty energy range");

    const std::vector<double> eps = linspace(eps_min, eps_max, n);
    std::vector<std::vector<double>> rows;
    double unitarity = 0, prob_sum = 0;
    for (double e : eps) {
        const auto tr = transmission_reflection(e);
        rows.push_back({e, tr.t2, tr.r2});
        const Eigen::Matrix2cd s = smatrix(e);
        unitarity = std::max(
            unitarity, (s.adjoint() * s - Eigen::Matrix2cd::Identity())
                           .cwiseAbs()
                           .maxCoeff());
        prob_sum = std::max(prob_sum, std::abs(tr.t2 + tr.r2 - 1.0));
    }
    w.write_csv("smatrix.csv", "eps,T2,R2", rows);

    summary["max_unitarity_defect"] = unitarity;
    summary["max_probability_defect"] = prob_sum;
    summary["phase_at_half"] = scattering_phase(-0.5);
    summary["group_delay"] = {{"eps_0", group_delay(0.0)},
                              {"eps_half", group_delay(0.5)},
                              {"eps_one", group_delay(1.0)},
                              {"eps_two", group_delay(2.0)}};
}

// -------------------------------------------------------------- squeeze ----

void run_squeeze(const Physical& ph, Config& cfg, ArtifactWriter& w,
                 json& summary) {
    const double lt = cfg.get_double("squeeze.lambda_t", 0.88);
    const double nbar = cfg.get_double("squeeze.nbar", 0.02);
    const int n_max = cfg.get_int("squeeze.n_max", 40);
    const int dim = cfg.get_int("squeeze.dim", 200);
    const int n_curve = cfg.get_int("squeeze.n_curve", 23);
    cfg.check_all_consumed();

    const RadiationReport rep = radiation_report(lt, nbar, n_max);
    std::vector<std::vector<double>> rows;
    for (int n = 0; n <= n_max; ++n)
        rows.push_back({static_cast<double>(n), rep.squeezed.populations[n],
                        rep.thermal.populations[n]});
    w.write_csv("squeeze.csv", "n,P_squeezed,P_thermal", rows);

    // Independent dynamical route: evolve the vacuum with the ideal
    // generator and read populations off the state.
    const ExactPropagator prop(build_dense(SqueezeForm{1.0, ph.phi}, dim));
    const Vec vac = Vec::Unit(dim, 0);
    const Vec psi = prop.apply(vac, lt);
    double max_err = 0, odd_mass = 0;
    for (int n = 0; n < dim; ++n) {
        const double p = std::norm(psi[n]);
        if (n <= n_max)
            max_err = std::max(max_err,
                               std::abs(p - rep.squeezed.populations[n]));
        if (n % 2 == 1) odd_mass += p;
    }

    std::vector<std::vector<double>> curve;
    for (int k = 0; k < n_curve; ++k) {
        const double t = lt * k / (n_curve - 1);
        const Vec st = prop.apply(vac, t);
        double nm = 0;
        for (int n = 0; n < dim; ++n) nm += n * std::norm(st[n]);
        const double sh = std::sinh(t);
        curve.push_back({t, nm, sh * sh});
    }
    w.write_csv("nmean.csv", "lambda_t,n_mean,n_mean_expected", curve);

    summary["lambda_t"] = lt;
    summary["nbar"] = nbar;
    summary["dim"] = dim;
    summary["n_mean_expected"] = rep.n_mean;
    summary["numeric_max_abs_err"] = max_err;
    summary["numeric_odd_mass"] = odd_mass;
    summary["analytic_odd_mass"] = rep.odd_mass;
    summary["squeezed_tail_mass"] = rep.squeezed.tail_mass;
    summary["thermal_tail_mass"] = rep.thermal.tail_mass;
    summary["total_variation"] = rep.total_variation;
}

// -------------------------------------------------------------- measure ----

void run_measure(const Physical&, Config& cfg, ArtifactWriter& w,
                 json& summary) {
    const double eps0 = cfg.get_double("scatter.eps0", -0.5);
    const double delta = cfg.get_double("scatter.delta", 1.0);
    const double t_start = cfg.get_double("scatter.t_start", -2.2);
    const double x_max = cfg.get_double("scatter.x_max", 220.0);
    const int n_points = cfg.get_int("scatter.n_points", 32768);
    const double dt = cfg.get_double("scatter.dt", 5e-4);
    const double t_final =
        cfg.get_double("scatter.t_final", group_delay(eps0) + 2.4);
    const double rabi_hz = cfg.get_double("measure.rabi_rate_hz", 1.0e5);
    const double k_max = cfg.get_double("measure.k_max", 30.0);
    const int n_times = cfg.get_int("measure.n_times", 4096);
    const double alpha = cfg.get_double("measure.apodization_alpha", 3.0);
    cfg.check_all_consumed();

    const GridSpec grid{x_max, n_points};
    const PacketSpec spec{eps0, delta, t_start, false};
    const ScatterResult res = scatter_evolve(spec, grid, dt, t_final);

    const double rabi = 2.0 * M_PI * rabi_hz;
    const std::vector<double> times = linspace(0.0, k_max / (2.0 * rabi), n_times);
    const ReadoutSignal sig0 = readout_signal(res.psi, rabi, times, 0.0);
    const ReadoutSignal sig90 = readout_signal(res.psi, rabi, times, M_PI_2);

    std::vector<std::vector<double>> srow;
    for (int j = 0; j < n_times; ++j)
        srow.push_back({times[j], sig0.p_down[j], sig90.p_down[j]});
    w.write_csv("readout.csv", "t,P_down_phase0,P_down_phase90", srow);

    const DensityReconstruction rec =
        reconstruct_density(sig0, sig90, grid, alpha);
    const Eigen::VectorXd truth = res.psi.density();
    std::vector<std::vector<double>> rrow;
    for (int i = 0; i < grid.n; ++i)
        rrow.push_back({grid.x(i), rec.density[i], truth[i]});
    w.write_csv("reconstruction.csv",
                "x_dimless,density_reconstructed,density_true", rrow);

    const Eigen::VectorXd smooth =
        gaussian_smooth(truth, grid, rec.smoothing_sigma);
    const double l2_rel = (rec.density - smooth).norm() / smooth.norm();

    double lobe_neg = 0, lobe_pos = 0;
    for (int i = 0; i < grid.n; ++i) {
        if (grid.x(i) < 0) lobe_neg += rec.density[i] * grid.dx();
        if (grid.x(i) > 0) lobe_pos += rec.density[i] * grid.dx();
    }

    summary["rabi_rate_rad_s"] = rabi;
    summary["k_max"] = k_max;
    summary["apodization_alpha"] = alpha;
    summary["smoothing_sigma"] = rec.smoothing_sigma;
    summary["negative_mass"] = rec.negative_mass;
    summary["l2_rel_vs_smoothed_truth"] = l2_rel;
    summary["lobe_ratio_reconstructed"] = lobe_pos / lobe_neg;
    summary["lobe_ratio_simulated"] = res.p_r / res.p_t;
    summary["p_t"] = res.p_t;
    summary["p_r"] = res.p_r;
}

// -------------------------------------------------------------- duality ----

void run_duality(const Physical&, Config& cfg, ArtifactWriter& w,
                 json& summary) {
    const std::vector<double> r0s =
        cfg.get_double_list("duality.r0_list", {0.5, 1.0, 2.0});
    const std::vector<double> fps =
        cfg.get_double_list("duality.fprime_list", {4.0, 1.0});
    const std::vector<double> gps =
        cfg.get_double_list("duality.gprime_list", {4.0, 1.0});
    const std::vector<double> eps_checks =
        cfg.get_double_list("duality.eps_checks", {0.5, 1.0});
    cfg.check_all_consumed();
    if (fps.size() != gps.size())
        throw ConfigError("duality: fprime_list and gprime_list differ in length");

    std::vector<std::vector<double>> rows;
    for (double r0 : r0s) {
        const MetricDerivatives md = schwarzschild_horizon(r0);
        rows.push_back({md.fprime, md.gprime, surface_gravity(md),
                        hawking_temperature(md)});
    }
    for (size_t i = 0; i < fps.size(); ++i) {
        const MetricDerivatives md{fps[i], gps[i], 0.0};
        rows.push_back({md.fprime, md.gprime, surface_gravity(md),
                        hawking_temperature(md)});
    }
    w.write_csv("duality.csv", "fprime,gprime,kappa,T_hawking", rows);

    // Closure of the analogy at the matched temperature 1/(2 pi): the
    // emission weight equals the transmission-to-reflection ratio pointwise,
    // and detailed balance equals the ratio of those ratios.
    summary["closure"] = json::object();
    for (double e : eps_checks) {
        const auto pos = transmission_reflection(e);
        const auto neg = transmission_reflection(-e);
        const double ratio_pos = pos.t2 / pos.r2;
        const double ratio_neg = neg.t2 / neg.r2;
        const double gamma_pos = tunneling_rate(e, temperature_dimless);
        const double gamma_neg = tunneling_rate(-e, temperature_dimless);
        summary["closure"][fmt(e)] = {
            {"tunneling_rate", gamma_pos},
            {"t2_over_r2", ratio_pos},
            {"pointwise_rel_diff",
             std::abs(gamma_pos - ratio_pos) / ratio_pos},
            {"detailed_balance", gamma_pos / gamma_neg},
            {"ratio_of_ratios", ratio_pos / ratio_neg},
            {"balance_rel_diff", std::abs(gamma_pos / gamma_neg -
                                          ratio_pos / ratio_neg) /
                                     (ratio_pos / ratio_neg)}};
    }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names{
        "otoc", "rwa", "scatter", "smatrix", "squeeze", "measure", "duality"};
    return names;
}

RunResult run_experiment(const std::string& experiment, Config& cfg,
                         const std::string& out_dir) {
    const auto& names = experiment_names();
    if (std::find(names.begin(), names.end(), experiment) == names.end())
        throw ConfigError("unknown experiment '" + experiment + "'");
    if (cfg.has("experiment")) {
        const std::string declared = cfg.get_string("experiment");
        if (declared != experiment)
            throw ConfigError("config declares experiment '" + declared +
                              "' but '" + experiment + "' was requested");
    }

    const auto t0 = std::chrono::steady_clock::now();
    const Physical ph = physical_from(cfg);
    ArtifactWriter w(out_dir);
    json summary;
    summary["experiment"] = experiment;

    if (experiment == "otoc")
        run_otoc(ph, cfg, w, summary);
    else if (experiment == "rwa")
        run_rwa(ph, cfg, w, summary);
    else if (experiment == "scatter")
        run_scatter(ph, cfg, w, summary);
    else if (experiment == "smatrix")
        run_smatrix(ph, cfg, w, summary);
    else if (experiment == "squeeze")
        run_squeeze(ph, cfg, w, summary);
    else if (experiment == "measure")
        run_measure(ph, cfg, w, summary);
    else
        run_duality(ph, cfg, w, summary);

    w.write_json("summary.json", summary);

    const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - t0)
                          .count();
    json manifest;
    manifest["artifact_version"] = artifact_version;
    manifest["experiment"] = experiment;
    manifest["config"] = json(cfg.entries());
    manifest["units"] = units_json(ph.units);
    manifest["phi"] = ph.phi;
#ifdef _OPENMP
    manifest["exec"] = {{"mode", kern::default_exec() == kern::Exec::openmp
                                     ? "openmp"
                                     : "serial"},
                        {"max_threads", omp_get_max_threads()}};
#else
    manifest["exec"] = {{"mode", "serial"}, {"max_threads", 1}};
#endif
    manifest["wall_ms"] = wall;
    manifest["outputs"] = json(w.hashes());
    w.write_json("manifest.json", manifest);

    RunResult out;
    out.files = w.files();
    out.summary = summary;
    return out;
}

RunResult aggregate_scatter_sweep(const std::vector<RunResult>& runs,
                                  const std::string& out_dir) {
    if (runs.empty()) throw ConfigError("sweep: no runs to aggregate");

    std::vector<std::vector<double>> rows;
    std::vector<double> eps0s, pts;
    double delta = 0;
    for (const auto& r : runs) {
        if (!r.summary.contains("eps0"))
            throw ConfigError("sweep aggregation expects scatter runs");
        const double e = r.summary.at("eps0").get<double>();
        const double d = r.summary.at("delta").get<double>();
        if (delta == 0)
            delta = d;
        else if (std::abs(delta - d) > 0)
            throw ConfigError("sweep: bandwidth differs between runs");
        eps0s.push_back(e);
        pts.push_back(r.summary.at("p_t").get<double>());
        rows.push_back({e, r.summary.at("p_t").get<double>(),
                        r.summary.at("p_r").get<double>(),
                        r.summary.at("p_t_analytic_avg").get<double>()});
    }
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a[0] < b[0]; });

    ArtifactWriter w(out_dir);
    w.write_csv("transmission_sweep.csv", "eps0,P_T,P_R,P_T_analytic", rows);

    const TeffFit fit = fit_teff(eps0s, pts, delta);
    json summary;
    summary["t_eff"] = fit.t_eff;
    summary["t_eff_times_2pi"] = fit.t_eff * 2.0 * M_PI;
    summary["rms"] = fit.rms;
    summary["n_runs"] = runs.size();
    summary["delta"] = delta;
    w.write_json("sweep_summary.json", summary);

    RunResult out;
    out.files = w.files();
    out.summary = summary;
    return out;
}

}  // namespace iho
