#include "iho/hamiltonian.hpp"

#include <cmath>

#include "iho/errors.hpp"
#include "iho/kernels.hpp"

namespace iho {

void LabFrameDriven::validate() const {
    if (!(omega0 > 0)) throw InvalidInputError("lab frame: omega0 must be positive");
    if (!(xi >= 0 && xi < 1)) throw InvalidInputError("lab frame: xi must lie in [0,1)");
    if (!(omega_m > 0)) throw InvalidInputError("lab frame: omega_m must be positive");
}

double LabFrameDriven::w(double theta) const {
    return 1.0 - xi * std::cos((omega_m / omega0) * theta + phi);
}

Mat BandedHam::to_dense() const {
    const int n = dim();
    Mat m = Mat::Zero(n, n);
    for (int j = 0; j < n; ++j) m(j, j) = diag[j];
    for (int j = 0; j + 2 < n; ++j) {
        m(j, j + 2) = up2[j];
        m(j + 2, j) = std::conj(up2[j]);
    }
    return m;
}

void BandedHam::matvec(const Vec& v, Vec& out) const {
    const int n = dim();
    if (v.size() != n) throw InvalidInputError("banded matvec: size mismatch");
    out.resize(n);
    kern::banded_matvec2(diag.data(), up2.data(), v.data(), out.data(), n,
                         kern::default_exec());
}

std::pair<double, double> BandedHam::bounds() const {
    const int n = dim();
    double lo = diag[0], hi = diag[0];
    for (int j = 0; j < n; ++j) {
        double r = 0;
        if (j + 2 < n) r += std::abs(up2[j]);
        if (j >= 2) r += std::abs(up2[j - 2]);
        lo = std::min(lo, diag[j] - r);
        hi = std::max(hi, diag[j] + r);
    }
    return {lo, hi};
}

Mat build_hamiltonian(const SqueezeForm& h, int dim) {
    FockSpace{dim}.validate();
    Mat m = Mat::Zero(dim, dim);
    const cplx c = -0.5 * h.lambda * std::polar(1.0, h.phi);  // multiplies a^2
    for (int n = 0; n + 2 < dim; ++n) {
        const double s = std::sqrt((n + 1.0) * (n + 2.0));
        m(n, n + 2) = c * s;
        m(n + 2, n) = std::conj(c) * s;
    }
    return m;
}

Mat build_hamiltonian(const IhoQuadratic& h, int dim) {
    const Quadratures q = quadratures(dim, h.phi);
    return h.lambda * 0.25 * (q.p * q.p - q.x * q.x);
}

BandedHam build_hamiltonian(const LabFrameDriven& h, int dim, double theta) {
    h.validate();
    FockSpace{dim}.validate();
    const double w2 = h.w(theta) * h.w(theta);
    BandedHam b;
    b.diag.resize(dim);
    b.up2.resize(dim - 2);
    for (int n = 0; n < dim; ++n) b.diag[n] = (2.0 * n + 1.0) * (1.0 + w2) * 0.25;
    for (int n = 0; n + 2 < dim; ++n)
        b.up2[n] = std::sqrt((n + 1.0) * (n + 2.0)) * (w2 - 1.0) * 0.25;
    return b;
}

Mat build_dense(const HamiltonianSpec& spec, int dim, double theta) {
    return std::visit(
        [&](const auto& h) -> Mat {
            using T = std::decay_t<decltype(h)>;
            if constexpr (std::is_same_v<T, LabFrameDriven>)
                return build_hamiltonian(h, dim, theta).to_dense();
            else
                return build_hamiltonian(h, dim);
        },
        spec);
}

}  // namespace iho
