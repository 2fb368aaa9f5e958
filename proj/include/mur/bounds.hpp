#pragma once

#include <cstdint>
#include <vector>

#include "mur/bound_profile.hpp"
#include "mur/quantum.hpp"

namespace mur {

// Exhaustive-enumeration guard: (2^d)^L selection families are visited.
inline constexpr int kMaxBoundDim = 8;
inline constexpr int kMaxBoundMeasurements = 4;

// One index set per measurement; the search space of the maximizations.
struct SelectionFamily {
    std::vector<std::vector<int>> index_sets;
    int total_size() const;
};

// Per-k diagnostics: the maximizing family, the raw eigenvalue it achieved
// and the eigenvector achieving it (the witness state for tightness).
struct BoundWitness {
    SelectionFamily family;
    double eig_value = 0.0;
    std::vector<cplx> maximizer;
};

struct BoundComputation {
    CumulativeBoundProfile profile;
    std::vector<BoundWitness> witnesses; // one per k for direct sums
};

// Direct-sum bound: Omega_k = max over families with sum |I_l| = k of
// lambda_max(sum of selected projectors), clamped nondecreasing, capped at
// L. For any state the sum of any k entries of (+)_l p_l is the expectation
// of such a projector sum, so every partial sum is dominated.
CumulativeBoundProfile ds_bound(const std::vector<OrthonormalBasis>& bases);
BoundComputation ds_bound_detailed(const std::vector<OrthonormalBasis>& bases);

// Direct-product bound: Omega_k = max over families with sum |I_l| =
// k + L - 1 (every set nonempty) of (lambda_max / L)^L, monotonized and
// capped at 1; the AM-GM step turns the sum of selected probabilities into
// a bound on their product.
CumulativeBoundProfile dp_bound(const std::vector<OrthonormalBasis>& bases);

// Appendix variant for pairs: half of ds_bound, total 1.
CumulativeBoundProfile normalized_ds_bound(const std::vector<OrthonormalBasis>& bases);

struct PairwiseBounds {
    int first = 0;
    int second = 0;
    CumulativeBoundProfile dp;
    CumulativeBoundProfile ds;
    double dp_entropy_bits = 0.0;
    double ds_entropy_bits = 0.0;
};

struct PairwiseBoundReport {
    std::vector<PairwiseBounds> pairs;
    CumulativeBoundProfile full_dp;
    CumulativeBoundProfile full_ds;
    double full_dp_entropy_bits = 0.0;
    double full_ds_entropy_bits = 0.0;
};

// Every two-measurement bound among L >= 3 bases, next to the joint
// L-measurement bounds, for the pairwise-vs-joint comparison.
PairwiseBoundReport pairwise_bound_report(const std::vector<OrthonormalBasis>& bases);

} // namespace mur
