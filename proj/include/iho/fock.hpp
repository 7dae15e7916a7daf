#pragma once
#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "iho/errors.hpp"

namespace iho {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using cplx = std::complex<double>;

// Truncated number-state space of dimension dim (levels 0..dim-1).
struct FockSpace {
    int dim = 0;
    void validate() const {
        if (dim < 2 || dim > 100000)
            throw InvalidInputError("fock: dim must lie in [2, 100000]");
    }
};

// Lowering operator a with a|n> = sqrt(n)|n-1>.
Mat lowering(int dim);

// Quadrature pair for rotating-frame phase phi:
//   x = a e^{+i phi/2} + a^dag e^{-i phi/2}
//   p = -i (a e^{+i phi/2} - a^dag e^{-i phi/2})
// Both Hermitian; [x,p] = 2i away from the truncation corner.
struct Quadratures {
    Mat x, p;
};
Quadratures quadratures(int dim, double phi = 0.0);

// Normalized superposition sum_k amp_k |n_k>.  Levels must be distinct and
// inside the space; the zero vector is rejected.
Vec fock_superposition(int dim, const std::vector<std::pair<int, cplx>>& terms);

// (|n> + |n+1>)/sqrt(2), the standard probe state for the out-of-time-order
// correlator.
Vec fock_pair(int dim, int n);

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// Max-abs deviation from Hermiticity.
double hermiticity_error(const Mat& m);

// Largest |[x,p] - 2i| matrix entry over the block that excludes the last
// two rows and columns (the truncation corner is excluded by convention).
double canonical_commutator_error(const Mat& x, const Mat& p);

// Population in the top `fraction` of levels; a cheap truncation monitor.
double tail_population(const Vec& coef, double fraction = 0.1);

}  // namespace iho
