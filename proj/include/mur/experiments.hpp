#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mur/bounds.hpp"
#include "mur/measures.hpp"
#include "mur/quantum.hpp"

namespace mur {

inline constexpr std::uint64_t kDefaultSeed = 0x5EED;
inline constexpr int kDefaultCountsPerSetting = 4000; // typical photon rate per second
inline constexpr int kDefaultRepetitions = 100;

struct XiValues {
    std::optional<double> xi_dp; // U(joint product) - U(dp bound)
    std::optional<double> xi_ds; // U(joint sum) - U(ds bound)
    std::optional<double> xi;    // U(ds bound) - U(joint product)
};

// Built-in basis names resolve directly; anything else is read as a JSON
// basis file path.
std::vector<OrthonormalBasis> resolve_bases(const std::vector<std::string>& names);

// The three gap quantities from one state and a shared pair of cached
// profiles. The convenience overload builds the profiles itself.
XiValues xi_quantities(const PureState& state, const std::vector<OrthonormalBasis>& bases,
                       const CumulativeBoundProfile& dp_profile,
                       const CumulativeBoundProfile& ds_profile, const UncertaintyMeasure& m);
XiValues xi_quantities(const PureState& state, const std::vector<OrthonormalBasis>& bases,
                       const UncertaintyMeasure& m);

struct NoiseSpec {
    int counts_per_setting = kDefaultCountsPerSetting;
    int repetitions = kDefaultRepetitions;
    std::uint64_t seed = kDefaultSeed;
};

struct SweepSpec {
    double theta_from = 0.0;
    double theta_to = 0.0;
    int theta_steps = 1;
    double phi_from = 0.0;
    double phi_to = 0.0;
    int phi_steps = 1;
    std::vector<std::string> basis_names; // built-in names or file paths
    std::string measure = "shannon";
    std::optional<NoiseSpec> noise;
    bool normalized_columns = false; // append the weight-1/2 direct-sum view (pairs)
};

struct SweepPoint {
    double theta = 0.0;
    double phi = 0.0;
    std::vector<ProbabilityVector> distributions;
    std::vector<double> shannon_per_measurement;
    double shannon_sum = 0.0;
    XiValues xi;
    std::optional<double> noisy_mean; // U of the estimated direct sum, over repetitions
    std::optional<double> noisy_std;
    std::optional<double> normalized_entropy; // H(p/2 (+) q/2), pairs only
};

struct SweepResult {
    SweepSpec spec;
    std::vector<OrthonormalBasis> bases;
    CumulativeBoundProfile dp_profile;
    CumulativeBoundProfile ds_profile;
    std::optional<CumulativeBoundProfile> normalized_ds_profile;
    std::vector<SweepPoint> points;
};

// Row-major theta-then-phi grid; deterministic for a fixed spec.
SweepResult run_sweep(const SweepSpec& spec);

// Named presets for the standard two- and three-measurement scans.
SweepSpec sweep_preset(const std::string& name);
std::vector<std::string> sweep_preset_names();

void write_sweep_csv(const SweepResult& result, std::ostream& out);

struct CountSample {
    std::vector<std::int64_t> counts;
    ProbabilityVector estimate;
};

// n multinomial draws from the Born distribution; estimate = counts / n.
CountSample simulate_counts(const PureState& state, const OrthonormalBasis& basis, int n,
                            std::uint64_t seed);

struct VerifyReport {
    std::int64_t pure_trials = 0;
    std::int64_t mixed_trials = 0;
    std::int64_t violations = 0;
    double worst_margin = 0.0; // min over trials of min_k (Omega_k - partial sum)
    std::vector<cplx> worst_state; // amplitudes of the worst pure offender
};

// Soundness sampling: `trials` Haar pure states plus trials/10 random
// mixtures, each checked against the requested bound at tolerance tol.
VerifyReport monte_carlo_verify(const std::vector<OrthonormalBasis>& bases, BoundKind kind,
                                std::int64_t trials, std::uint64_t seed, double tol = 1e-9);
VerifyReport monte_carlo_verify_profile(const std::vector<OrthonormalBasis>& bases,
                                        const CumulativeBoundProfile& profile,
                                        std::int64_t trials, std::uint64_t seed,
                                        double tol = 1e-9);

struct Eq5ChainReport {
    double max_product_sum_gap = 0.0; // max |H(p (x) q) - H(p (+) q)|
    double min_sum_entropy = 0.0;     // min H(p (+) q) over trials
    double ds_bound_entropy = 0.0;
    double dp_bound_entropy = 0.0;
    bool chain_holds = false;
};

// Shannon chain H(p (x) q) = H(p (+) q) >= H(ds bound) >= H(dp bound).
Eq5ChainReport eq5_shannon_chain(const std::vector<OrthonormalBasis>& bases,
                                 std::int64_t trials, std::uint64_t seed);

} // namespace mur
