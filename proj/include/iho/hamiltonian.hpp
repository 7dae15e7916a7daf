#pragma once
#include <Eigen/Dense>
#include <variant>

#include "iho/fock.hpp"

namespace iho {

// Rotating-frame generator of the unstable dynamics in natural units
// (energies in units of hbar*omega, omega = instability rate):
//   H = -(lambda/2) * (a^2 e^{+i phi} + a^dag^2 e^{-i phi})
// lambda is the dimensionless instability rate (1 in natural units).
struct SqueezeForm {
    double lambda = 1.0;
    double phi = 0.0;
};

// The same operator assembled from the quadrature pair instead:
//   H = lambda * (p^2 - x^2)/4  with x,p at rotating-frame phase phi.
// The normally-ordered cross terms cancel identically, so this matrix equals
// the SqueezeForm build entry by entry, truncation included.
struct IhoQuadratic {
    double lambda = 1.0;
    double phi = 0.0;
};

// Lab-frame parametrically driven trap in units of hbar*omega0 with phase
// variable theta = omega0*t:
//   H(theta) = -(b - b^dag)^2/4 + w(theta)^2 (b + b^dag)^2/4,
//   w(theta) = 1 - xi*cos((omega_m/omega0)*theta + phi).
// No small-xi expansion is applied; the quadratic drive term is kept exactly.
struct LabFrameDriven {
    double omega0 = 0;   // rad/s
    double xi = 0;       // modulation depth
    double omega_m = 0;  // rad/s, resonant choice is 2*omega0
    double phi = 0;

    void validate() const;
    double w(double theta) const;
};

using HamiltonianSpec = std::variant<SqueezeForm, IhoQuadratic, LabFrameDriven>;

// Hermitian with one band at +-2; diagonal real.
struct BandedHam {
    Eigen::VectorXd diag;  // size n
    Vec up2;               // size n-2, H(j, j+2)

    int dim() const { return static_cast<int>(diag.size()); }
    Mat to_dense() const;
    void matvec(const Vec& v, Vec& out) const;
    // Gershgorin bounds on the spectrum, {lo, hi}.
    std::pair<double, double> bounds() const;
};

Mat build_hamiltonian(const SqueezeForm& h, int dim);
Mat build_hamiltonian(const IhoQuadratic& h, int dim);
// Time-dependent; returns the instantaneous matrix at phase theta.
BandedHam build_hamiltonian(const LabFrameDriven& h, int dim, double theta);
Mat build_dense(const HamiltonianSpec& spec, int dim, double theta = 0.0);

}  // namespace iho
