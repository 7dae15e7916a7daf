#include "iho/fock.hpp"

#include <algorithm>
#include <cmath>

namespace iho {

Mat lowering(int dim) {
    FockSpace{dim}.validate();
    Mat a = Mat::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

Quadratures quadratures(int dim, double phi) {
    const Mat a = lowering(dim);
    const Mat ad = a.adjoint();
    const cplx e = std::polar(1.0, 0.5 * phi);
    Quadratures q;
    q.x = e * a + std::conj(e) * ad;
    q.p = cplx(0, -1) * (e * a - std::conj(e) * ad);
    return q;
}

Vec fock_superposition(int dim, const std::vector<std::pair<int, cplx>>& terms) {
    FockSpace{dim}.validate();
    if (terms.empty()) throw InvalidInputError("fock_superposition: no terms");
    Vec v = Vec::Zero(dim);
    for (const auto& [n, amp] : terms) {
        if (n < 0 || n >= dim)
            throw InvalidInputError("fock_superposition: level outside space");
        if (v[n] != cplx(0))
            throw InvalidInputError("fock_superposition: duplicate level");
        v[n] = amp;
    }
    const double nrm = v.norm();
    if (nrm < 1e-300) throw InvalidInputError("fock_superposition: zero vector");
    return v / nrm;
}

Vec fock_pair(int dim, int n) {
    return fock_superposition(dim, {{n, 1.0}, {n + 1, 1.0}});
}

double hermiticity_error(const Mat& m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double canonical_commutator_error(const Mat& x, const Mat& p) {
    const int dim = static_cast<int>(x.rows());
    if (dim < 3) throw InvalidInputError("commutator check needs dim >= 3");
    const Mat c = commutator(x, p);
    const int keep = dim - 2;
    Mat expect = Mat::Zero(keep, keep);
    expect.diagonal().setConstant(cplx(0, 2));
    return (c.topLeftCorner(keep, keep) - expect).cwiseAbs().maxCoeff();
}

double tail_population(const Vec& coef, double fraction) {
    const int n = static_cast<int>(coef.size());
    if (n == 0 || !(fraction > 0) || !(fraction <= 1))
        throw InvalidInputError("tail_population: bad arguments");
    const int count = std::max(1, static_cast<int>(n * fraction));
    double s = 0;
    for (int i = n - count; i < n; ++i) s += std::norm(coef[i]);
    return s;
}

}  // namespace iho
