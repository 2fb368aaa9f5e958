#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mur/quantum.hpp"

namespace mur {

// Shannon entropy in bits, -sum x log2 x with 0 log 0 = 0. Unnormalized
// input is evaluated with the same formula, which is exactly what makes the
// entropy of a direct sum equal the sum of the component entropies.
double shannon_entropy(const ProbabilityVector& x);

// S(u) = sum of entries (the l1 mass).
double sum_measure(const ProbabilityVector& x);

// M(u) = largest entry = 2^{-Hmin}.
double max_measure(const ProbabilityVector& x);

// U = S - M, the sum of all but the largest sorted entry.
double s_minus_m(const ProbabilityVector& x);

// F = sum log2 x_i; undefined as soon as any entry is zero.
std::optional<double> log_product(const ProbabilityVector& x);

// Hmin = -log2 max entry.
double min_entropy(const ProbabilityVector& x);

struct UncertaintyMeasure {
    std::string name;
    std::function<std::optional<double>(const ProbabilityVector&)> evaluate;
    bool schur_concave = false;
    bool dp_additive = false;
    bool ds_additive = false;
    bool defined_on_zeros = true;
};

// Fixed registry: shannon | sum | max | s-minus-m | log-product | min-entropy.
const std::vector<UncertaintyMeasure>& measure_registry();
const UncertaintyMeasure& measure_by_name(const std::string& name);

struct AdditivityReport {
    bool dp_additive = false;
    bool ds_additive = false;
    bool super_additive = false;
    double max_dp_violation = 0.0;
    double max_ds_violation = 0.0;
};

// Tests U(p (x) q) = U(p) + U(q) and U(p (+) q) = U(p) + U(q) on random
// strictly positive distribution pairs, verdicts at 1e-9.
AdditivityReport check_additivity(const UncertaintyMeasure& m, int trials, std::uint64_t seed);

} // namespace mur
