#include "mur/measures.hpp"

#include <algorithm>
#include <cmath>

#include "mur/errors.hpp"
#include "mur/majorization.hpp"

namespace mur {

double shannon_entropy(const ProbabilityVector& x) {
    long double h = 0.0L;
    for (double p : x.entries) {
        if (p > 0.0) h -= p * std::log2(p);
    }
    return static_cast<double>(h);
}

double sum_measure(const ProbabilityVector& x) {
    return x.sum();
}

double max_measure(const ProbabilityVector& x) {
    return x.max_entry();
}

double s_minus_m(const ProbabilityVector& x) {
    return sum_measure(x) - max_measure(x);
}

std::optional<double> log_product(const ProbabilityVector& x) {
    long double f = 0.0L;
    for (double p : x.entries) {
        if (p <= 0.0) return std::nullopt;
        f += std::log2(p);
    }
    return static_cast<double>(f);
}

double min_entropy(const ProbabilityVector& x) {
    return -std::log2(max_measure(x));
}

namespace {

std::function<std::optional<double>(const ProbabilityVector&)> lift(
    double (*fn)(const ProbabilityVector&)) {
    return [fn](const ProbabilityVector& x) -> std::optional<double> { return fn(x); };
}

std::vector<UncertaintyMeasure> make_registry() {
    std::vector<UncertaintyMeasure> r;
    r.push_back({"shannon", lift(&shannon_entropy), true, true, true, true});
    r.push_back({"sum", lift(&sum_measure), true, false, true, true});
    // max is Schur-convex, not concave; kept in the registry because the
    // direct-sum/product algebra of M is what the S - M measure builds on
    r.push_back({"max", lift(&max_measure), false, false, false, true});
    r.push_back({"s-minus-m", lift(&s_minus_m), true, false, false, true});
    // F = sum of logs gains a factor of the partner's length under a direct
    // product (each p_i appears d_q times), so only the direct-sum identity
    // F(p (+) q) = F(p) + F(q) survives
    r.push_back({"log-product", &log_product, true, false, true, false});
    r.push_back({"min-entropy", lift(&min_entropy), true, true, false, true});
    return r;
}

} // namespace

const std::vector<UncertaintyMeasure>& measure_registry() {
    static const std::vector<UncertaintyMeasure> registry = make_registry();
    return registry;
}

const UncertaintyMeasure& measure_by_name(const std::string& name) {
    for (const UncertaintyMeasure& m : measure_registry())
        if (m.name == name) return m;
    throw InputError("unknown measure '" + name + "'");
}

AdditivityReport check_additivity(const UncertaintyMeasure& m, int trials, std::uint64_t seed) {
    if (trials < 1) throw InputError("additivity check needs at least one trial");
    Rng rng(seed);
    AdditivityReport rep;
    for (int t = 0; t < trials; ++t) {
        const int dp = 2 + static_cast<int>(rng.below(5));
        const int dq = 2 + static_cast<int>(rng.below(5));
        const ProbabilityVector p = random_distribution(dp, rng);
        const ProbabilityVector q = random_distribution(dq, rng);
        const auto up = m.evaluate(p);
        const auto uq = m.evaluate(q);
        const auto uprod = m.evaluate(direct_product(p, q));
        const auto usum = m.evaluate(direct_sum({p, q}));
        if (!up || !uq || !uprod || !usum) continue; // zero-free draws, not expected
        rep.max_dp_violation = std::max(rep.max_dp_violation, std::abs(*uprod - (*up + *uq)));
        rep.max_ds_violation = std::max(rep.max_ds_violation, std::abs(*usum - (*up + *uq)));
    }
    rep.dp_additive = rep.max_dp_violation <= 1e-9;
    rep.ds_additive = rep.max_ds_violation <= 1e-9;
    rep.super_additive = rep.dp_additive && rep.ds_additive;
    return rep;
}

} // namespace mur
