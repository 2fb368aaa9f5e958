#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mur/bound_profile.hpp"
#include "mur/quantum.hpp"
#include "mur/rng.hpp"

namespace mur {

inline constexpr double kOrderTol = 1e-9;

// Entries in nonincreasing order together with their partial sums.
struct SortedProfile {
    std::vector<double> sorted;
    std::vector<double> cumulative;
    double weight = 0.0;
};

SortedProfile sorted_profile(const ProbabilityVector& x);

// All pairwise products p_j * q_k; weight multiplies.
ProbabilityVector direct_product(const ProbabilityVector& p, const ProbabilityVector& q);

// Concatenation; weight adds.
ProbabilityVector direct_sum(const std::vector<ProbabilityVector>& ps);

// True iff x is majorized by y (x "more uncertain"): every sorted partial
// sum of x is <= the one of y within tol and the totals agree within tol.
bool majorizes(const ProbabilityVector& x, const ProbabilityVector& y, double tol = kOrderTol);

// True iff every sorted partial sum of x stays below the profile:
// sum_{j<=k} x_j^down <= Omega_k + tol. Totals must agree within tol.
bool dominated_by_profile(const ProbabilityVector& x, const CumulativeBoundProfile& profile,
                          double tol = kOrderTol);

// Signed slack min_k (Omega_k - partial sum); negative means violated.
double profile_margin(const ProbabilityVector& x, const CumulativeBoundProfile& profile);

// Least concave majorant of the cumulative sequence: the smallest concave
// Omega' >= Omega with the same endpoints. Its increments are nonincreasing,
// so the result is a genuinely sorted bound vector.
CumulativeBoundProfile flatten(const CumulativeBoundProfile& profile);

// x obtained from y by `count` random T-transforms (pairwise mixing with
// t in [0, 1/2]); guarantees x majorized by y exactly.
ProbabilityVector apply_random_t_transforms(const ProbabilityVector& y, int count, Rng& rng);

// Random y on the simplex and x = T-transformed y with 1..3*dim transforms.
std::pair<ProbabilityVector, ProbabilityVector> random_majorized_pair(int dim,
                                                                      std::uint64_t seed);
std::pair<ProbabilityVector, ProbabilityVector> random_majorized_pair(int dim, Rng& rng);

// Uniform distribution on the simplex (flat Dirichlet).
ProbabilityVector random_distribution(int dim, Rng& rng);

} // namespace mur
