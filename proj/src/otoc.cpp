#include "iho/otoc.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "iho/errors.hpp"
#include "iho/propagate.hpp"
#include "iho/units.hpp"

namespace iho {

namespace {

Vec checked_state(int dim, const Vec& psi0) {
    if (psi0.size() != dim)
        throw InvalidInputError("otoc: state dimension mismatch");
    const double nrm = psi0.norm();
    if (nrm < 1e-300) throw InvalidInputError("otoc: zero state");
    return psi0 / nrm;
}

void record_tail(OtocCurve& out, const Vec& psi_t) {
    const double tail = tail_population(psi_t);
    if (tail > out.top_band_population) out.top_band_population = tail;
    if (tail > otoc_truncation_limit) out.truncation_warning = true;
}

}  // namespace

OtocCurve otoc_expectation(const SqueezeForm& h, int dim, const Vec& psi0,
                           const std::vector<double>& times) {
    const Vec psi = checked_state(dim, psi0);
    const ExactPropagator prop(build_dense(h, dim));
    const Quadratures q = quadratures(dim, h.phi);

    OtocCurve out;
    out.dim = dim;
    out.t = times;
    out.c.reserve(times.size());
    for (const double t : times) {
        const Vec psi_t = prop.apply(psi, t);
        const cplx ex = psi_t.dot(q.x * psi_t);
        out.c.push_back(std::norm(ex));
        record_tail(out, psi_t);
    }
    return out;
}

OtocCurve otoc_commutator(const SqueezeForm& h, int dim, const Vec& psi0,
                          const std::vector<double>& times) {
    const Vec psi = checked_state(dim, psi0);
    const ExactPropagator prop(build_dense(h, dim));
    const Quadratures q = quadratures(dim, h.phi);

    OtocCurve out;
    out.dim = dim;
    out.t = times;
    out.c.reserve(times.size());
    for (const double t : times) {
        const Mat xt = prop.heisenberg(q.x, t);
        const Vec v = commutator(xt, q.p) * psi;
        out.c.push_back(v.squaredNorm());
        record_tail(out, prop.apply(psi, t));
    }
    return out;
}

double pair_state_otoc(int n, double t, double lambda) {
    const double ch = std::cosh(lambda * t);
    return (n + 1.0) * ch * ch;
}

double commutator_otoc_exact(double t, double lambda) {
    const double ch = std::cosh(lambda * t);
    return 4.0 * ch * ch;
}

double stable_log_cosh(double z) {
    const double a = std::abs(z);
    return a + std::log1p(std::exp(-2.0 * a)) - M_LN2;
}

namespace {

// Sum of squared residuals of y against ln A + 2 ln cosh(lambda t), with
// ln A chosen optimally for this lambda.  Returns {sse, ln A}.
std::pair<double, double> cosh_model_sse(const std::vector<double>& t,
                                         const std::vector<double>& y,
                                         double lambda) {
    const int n = static_cast<int>(t.size());
    double mean_res = 0;
    for (int i = 0; i < n; ++i)
        mean_res += y[i] - 2.0 * stable_log_cosh(lambda * t[i]);
    mean_res /= n;
    double sse = 0;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - mean_res - 2.0 * stable_log_cosh(lambda * t[i]);
        sse += r * r;
    }
    return {sse, mean_res};
}

}  // namespace

LyapunovFit fit_lyapunov(const std::vector<double>& t,
                         const std::vector<double>& c, double t_lo,
                         double t_hi) {
    if (t.size() != c.size()) throw InvalidInputError("fit_lyapunov: length mismatch");
    if (!(t_lo < t_hi)) throw InvalidInputError("fit_lyapunov: empty window");

    std::vector<double> ts, ys;
    for (size_t i = 0; i < t.size(); ++i) {
        if (t[i] < t_lo - 1e-12 || t[i] > t_hi + 1e-12) continue;
        if (!(c[i] > 0))
            throw InvalidInputError("fit_lyapunov: non-positive value in window");
        ts.push_back(t[i]);
        ys.push_back(std::log(c[i]));
    }
    const int n = static_cast<int>(ts.size());
    if (n < 3) throw InvalidInputError("fit_lyapunov: need at least 3 points in window");

    double mt = 0, my = 0;
    for (int i = 0; i < n; ++i) {
        mt += ts[i];
        my += ys[i];
    }
    mt /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
        sxx += (ts[i] - mt) * (ts[i] - mt);
        sxy += (ts[i] - mt) * (ys[i] - my);
    }
    if (!(sxx > 0)) throw InvalidInputError("fit_lyapunov: degenerate time window");

    LyapunovFit fit;
    fit.t_lo = t_lo;
    fit.t_hi = t_hi;
    fit.npoints = n;
    fit.lambda_linear = 0.5 * sxy / sxx;

    // Golden-section search for the cosh-model rate in a bracket around the
    // straight-line estimate, which always underestimates for this model.
    double lo = 0.5 * std::abs(fit.lambda_linear);
    double hi = 2.0 * std::abs(fit.lambda_linear) + 1e-6;
    if (lo <= 0) lo = 1e-9;
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = cosh_model_sse(ts, ys, x1).first;
    double f2 = cosh_model_sse(ts, ys, x2).first;
    for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, hi); ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = cosh_model_sse(ts, ys, x1).first;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = cosh_model_sse(ts, ys, x2).first;
        }
    }
    fit.lambda = 0.5 * (lo + hi);
    const auto [sse, ln_a] = cosh_model_sse(ts, ys, fit.lambda);
    fit.amplitude = std::exp(ln_a);
    fit.rms_log = std::sqrt(sse / n);
    return fit;
}

double mss_lambda_bound(double temperature_k) {
    if (!(temperature_k > 0))
        throw InvalidInputError("mss_lambda_bound: temperature must be positive");
    return 2.0 * M_PI * si::k_boltzmann * temperature_k / si::hbar;
}

}  // namespace iho
