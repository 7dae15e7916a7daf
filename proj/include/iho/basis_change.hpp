#pragma once
#include <Eigen/Dense>

#include "iho/errors.hpp"
#include "iho/fock.hpp"

namespace iho {

// Uniform symmetric position grid x_i = -x_max + i*dx, dx = 2*x_max/n,
// i = 0..n-1 (so x = 0 is a grid point and +x_max is excluded, matching the
// periodic layout of the spectral transforms).  n must be a power of two.
struct GridSpec {
    double x_max = 0;
    int n = 0;

    double dx() const { return 2.0 * x_max / n; }
    double x(int i) const { return -x_max + i * dx(); }
    // Momentum in transform ordering: k_i = 2*pi*i/(n*dx) for i < n/2, then
    // shifted negative frequencies.
    double k(int i) const {
        const double dk = M_PI / x_max;
        return (i < n / 2) ? i * dk : (i - n) * dk;
    }
    Eigen::VectorXd axis() const;

    void validate() const {
        if (!(x_max > 0)) throw InvalidInputError("grid: x_max must be positive");
        if (n < 16 || (n & (n - 1)) != 0)
            throw InvalidInputError("grid: point count must be a power of two >= 16");
    }
};

// Wavefunction sampled on a GridSpec, normalized so dx*sum|psi|^2 = 1.
struct GridState {
    GridSpec grid;
    Vec psi;

    double norm2() const;
    void normalize();
    Eigen::VectorXd density() const;
};

// Synthesize the position representation of number-state amplitudes.  The
// basis functions are the eigenfunctions of the companion upright oscillator
// p^2 + x^2/4, i.e. phi_0 ~ exp(-x^2/4).  Throws a coverage guard if more
// than 1e-6 of the norm leaks off the grid.
GridState fock_to_grid(const Vec& coef, const GridSpec& grid);

// Project a grid wavefunction onto the first nlevels basis functions.
Vec grid_to_fock(const GridState& state, int nlevels);

// 1 - sum_k |coef_k|^2 for a projection of a unit-norm state.
double leaked_norm(const Vec& coef);

}  // namespace iho
