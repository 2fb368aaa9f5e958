#pragma once

#include <vector>

#include "mur/complex_matrix.hpp"

namespace mur {

inline constexpr int kMaxKernelDim = 16;

struct EigMaxResult {
    double value = 0.0;
    std::vector<cplx> vector; // unit-norm eigenvector for the largest eigenvalue
};

// Largest eigenvalue of a Hermitian matrix (n <= 16), absolute error <= 1e-10.
// Input must be Hermitian within 1e-12; it is symmetrized before iterating so
// accumulation noise from projector sums cannot leak into the result.
double hermitian_eigmax(const ComplexMatrix& m);
EigMaxResult hermitian_eigmax_with_vector(const ComplexMatrix& m);

// Smallest eigenvalue under the same contract; used for positivity checks.
double hermitian_eigmin(const ComplexMatrix& m);

// Full spectrum in nonincreasing order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// sigma_max(M) = sqrt(lambda_max(M^dagger M)), any rectangular shape with
// both sides in [1, 16].
double largest_singular_value(const ComplexMatrix& m);

// Sum of selected rank-1 projectors |v_j><v_j| where the v_j are columns of
// unitary basis matrices. One index set per basis; all bases share dimension.
ComplexMatrix projector_sum(const std::vector<ComplexMatrix>& basis_matrices,
                            const std::vector<std::vector<int>>& selections);

} // namespace mur
