#include "iho/basis_change.hpp"

#include <cmath>

#include "iho/kernels.hpp"

namespace iho {

Eigen::VectorXd GridSpec::axis() const {
    Eigen::VectorXd ax(n);
    for (int i = 0; i < n; ++i) ax[i] = x(i);
    return ax;
}

double GridState::norm2() const {
    return kern::norm2(psi.data(), psi.size(), grid.dx(), kern::default_exec());
}

void GridState::normalize() {
    const double n2 = norm2();
    if (n2 < 1e-300) throw InvalidInputError("grid state: zero norm");
    psi /= std::sqrt(n2);
}

Eigen::VectorXd GridState::density() const {
    Eigen::VectorXd rho(psi.size());
    kern::abs2(psi.data(), rho.data(), psi.size(), kern::default_exec());
    return rho;
}

GridState fock_to_grid(const Vec& coef, const GridSpec& grid) {
    grid.validate();
    if (coef.size() < 1) throw InvalidInputError("fock_to_grid: empty coefficient vector");
    const Eigen::VectorXd ax = grid.axis();
    GridState out{grid, Vec(grid.n)};
    kern::hermite_synthesis(coef.data(), static_cast<int>(coef.size()), ax.data(),
                            grid.n, out.psi.data(), kern::default_exec());
    const double want = coef.squaredNorm();
    const double got = out.norm2();
    if (std::abs(got - want) > 1e-6 * std::max(want, 1e-30))
        throw NumericalGuardError(
            "fock_to_grid: grid does not cover the requested levels (leaked norm " +
            std::to_string(std::abs(got - want)) + ")");
    return out;
}

Vec grid_to_fock(const GridState& state, int nlevels) {
    state.grid.validate();
    if (nlevels < 1) throw InvalidInputError("grid_to_fock: nlevels must be >= 1");
    if (state.psi.size() != state.grid.n)
        throw InvalidInputError("grid_to_fock: state/grid size mismatch");
    const Eigen::VectorXd ax = state.grid.axis();
    Vec coef(nlevels);
    kern::hermite_analysis(state.psi.data(), ax.data(), state.grid.n,
                           state.grid.dx(), nlevels, coef.data(),
                           kern::default_exec());
    return coef;
}

double leaked_norm(const Vec& coef) { return 1.0 - coef.squaredNorm(); }

}  // namespace iho
