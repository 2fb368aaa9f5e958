#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mur/complex_matrix.hpp"
#include "mur/rng.hpp"

namespace mur {

// Nonnegative reals with a declared total mass: 1 for single-measurement
// statistics, L for an L-fold direct sum. Entries in [-1e-12, 0) are clamped
// to zero on construction; anything more negative is rejected.
struct ProbabilityVector {
    std::vector<double> entries;
    double weight = 1.0;

    ProbabilityVector() = default;
    ProbabilityVector(std::vector<double> e, double declared_weight);

    double sum() const;
    double max_entry() const;
    std::size_t size() const { return entries.size(); }
};

struct PureState {
    int dim = 0;
    std::vector<cplx> amplitudes;

    PureState() = default;
    PureState(int d, std::vector<cplx> amps); // validates unit norm (1e-10)
};

class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m); // Hermitian, trace 1, positive
    static DensityMatrix from_pure(const PureState& psi);

    int dim() const { return matrix_.rows(); }
    const ComplexMatrix& matrix() const { return matrix_; }

private:
    ComplexMatrix matrix_;
};

// A d x d unitary whose columns are the measurement eigenvectors.
class OrthonormalBasis {
public:
    OrthonormalBasis(ComplexMatrix columns, std::string label); // validates at 1e-10

    int dim() const { return columns_.rows(); }
    const ComplexMatrix& matrix() const { return columns_; }
    const std::string& label() const { return label_; }
    cplx vector_entry(int row, int col) const { return columns_(row, col); }

private:
    ComplexMatrix columns_;
    std::string label_;
};

// Born rule: entry j = <a_j|rho|a_j>, clamped into [0, 1], weight 1.
ProbabilityVector born_probabilities(const PureState& psi, const OrthonormalBasis& basis);
ProbabilityVector born_probabilities(const DensityMatrix& rho, const OrthonormalBasis& basis);

// (cos t sin f, cos t cos f, sin t, 0) in dimension 4
PureState state_family(double theta, double phi);

// The built-in dimension-4 measurement set: computational basis A, its
// complex unbiased partner B, and the overlapping triple C1, C2, C3.
const std::vector<OrthonormalBasis>& builtin_bases();
const OrthonormalBasis& builtin_basis(const std::string& name); // A,B,C1,C2,C3
bool is_builtin_basis_name(const std::string& name);

// entry (j,k) = <v_j^(1)|v_k^(2)>; unitary when both bases are orthonormal
ComplexMatrix overlap_matrix(const OrthonormalBasis& b1, const OrthonormalBasis& b2);

// Uniform pure state: i.i.d. standard complex Gaussian amplitudes, normalized.
PureState haar_random_state(int dim, std::uint64_t seed);
PureState haar_random_state(int dim, Rng& rng);

// Mixture of 2-4 Haar pure states with flat Dirichlet weights.
DensityMatrix random_mixed_state(int dim, Rng& rng);

// JSON basis file: {"dim": d, "vectors": [[[re,im],...] per column], "label": s}
OrthonormalBasis load_basis_json(const std::string& path);
OrthonormalBasis parse_basis_json(std::istream& in, const std::string& origin);
void save_basis_json(const OrthonormalBasis& basis, std::ostream& out);

} // namespace mur
