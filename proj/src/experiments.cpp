#include "mur/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "mur/errors.hpp"
#include "mur/majorization.hpp"

namespace mur {
namespace {

constexpr double kPi = std::numbers::pi;

std::optional<double> measure_on_profile(const UncertaintyMeasure& m,
                                         const CumulativeBoundProfile& profile) {
    return m.evaluate(ProbabilityVector(profile.increments(), profile.total));
}

std::optional<double> minus(std::optional<double> a, std::optional<double> b) {
    if (a && b) return *a - *b;
    return std::nullopt;
}

double grid_value(double from, double to, int steps, int i) {
    if (steps <= 1) return from;
    return from + (to - from) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

struct RunningStat {
    int n = 0;
    double sum = 0.0;
    double sumsq = 0.0;
    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
    }
    double mean() const { return n > 0 ? sum / n : 0.0; }
    double sample_std() const {
        if (n < 2) return 0.0;
        const double m = mean();
        return std::sqrt(std::max(0.0, (sumsq - n * m * m) / (n - 1)));
    }
};

} // namespace

std::vector<OrthonormalBasis> resolve_bases(const std::vector<std::string>& names) {
    std::vector<OrthonormalBasis> out;
    out.reserve(names.size());
    for (const std::string& name : names) {
        if (is_builtin_basis_name(name)) {
            out.push_back(builtin_basis(name));
        } else {
            out.push_back(load_basis_json(name));
        }
    }
    return out;
}

XiValues xi_quantities(const PureState& state, const std::vector<OrthonormalBasis>& bases,
                       const CumulativeBoundProfile& dp_profile,
                       const CumulativeBoundProfile& ds_profile, const UncertaintyMeasure& m) {
    std::vector<ProbabilityVector> dists;
    dists.reserve(bases.size());
    for (const OrthonormalBasis& b : bases) dists.push_back(born_probabilities(state, b));

    ProbabilityVector joint_dp = dists.front();
    for (std::size_t l = 1; l < dists.size(); ++l) joint_dp = direct_product(joint_dp, dists[l]);
    const ProbabilityVector joint_ds = direct_sum(dists);

    const auto u_joint_dp = m.evaluate(joint_dp);
    const auto u_joint_ds = m.evaluate(joint_ds);
    const auto u_omega_dp = measure_on_profile(m, dp_profile);
    const auto u_omega_ds = measure_on_profile(m, ds_profile);

    XiValues out;
    out.xi_dp = minus(u_joint_dp, u_omega_dp);
    out.xi_ds = minus(u_joint_ds, u_omega_ds);
    out.xi = minus(u_omega_ds, u_joint_dp);
    return out;
}

XiValues xi_quantities(const PureState& state, const std::vector<OrthonormalBasis>& bases,
                       const UncertaintyMeasure& m) {
    return xi_quantities(state, bases, dp_bound(bases), ds_bound(bases), m);
}

SweepSpec sweep_preset(const std::string& name) {
    SweepSpec s;
    const int grid = 101;
    const auto phi_scan = [&](double theta) {
        s.theta_from = s.theta_to = theta;
        s.theta_steps = 1;
        s.phi_from = 0.0;
        s.phi_to = 2.0 * kPi;
        s.phi_steps = grid;
    };
    const auto theta_scan = [&](double phi) {
        s.phi_from = s.phi_to = phi;
        s.phi_steps = 1;
        s.theta_from = 0.0;
        s.theta_to = 2.0 * kPi;
        s.theta_steps = grid;
    };

    if (name == "2a") {
        phi_scan(kPi / 4.0);
        s.basis_names = {"A", "B"};
        s.measure = "s-minus-m";
    } else if (name == "2b") {
        theta_scan(kPi / 4.0);
        s.basis_names = {"A", "B"};
        s.measure = "s-minus-m";
    } else if (name == "2c") {
        phi_scan(kPi);
        s.basis_names = {"C1", "C2", "C3"};
        s.measure = "s-minus-m";
    } else if (name == "2d") {
        theta_scan(kPi / 2.0);
        s.basis_names = {"C1", "C2", "C3"};
        s.measure = "s-minus-m";
    } else if (name == "3a") {
        phi_scan(kPi / 4.0);
        s.basis_names = {"A", "B"};
        s.measure = "shannon";
    } else if (name == "3b") {
        theta_scan(kPi / 4.0);
        s.basis_names = {"A", "B"};
        s.measure = "shannon";
    } else if (name == "3c") {
        phi_scan(kPi);
        s.basis_names = {"C1", "C2", "C3"};
        s.measure = "shannon";
    } else if (name == "3d") {
        theta_scan(kPi / 2.0);
        s.basis_names = {"C1", "C2", "C3"};
        s.measure = "shannon";
    } else if (name == "appendixA") {
        phi_scan(kPi / 4.0);
        s.basis_names = {"A", "B"};
        s.measure = "shannon";
        s.normalized_columns = true;
    } else {
        throw InputError("unknown sweep preset '" + name + "'");
    }
    return s;
}

std::vector<std::string> sweep_preset_names() {
    return {"2a", "2b", "2c", "2d", "3a", "3b", "3c", "3d", "appendixA"};
}

CountSample simulate_counts(const PureState& state, const OrthonormalBasis& basis, int n,
                            std::uint64_t seed) {
    if (n < 1) throw InputError("count simulation needs n >= 1");
    const ProbabilityVector p = born_probabilities(state, basis);
    std::vector<double> cumulative(p.size());
    double run = 0.0;
    for (std::size_t j = 0; j < p.size(); ++j) {
        run += p.entries[j];
        cumulative[j] = run;
    }

    CountSample out;
    out.counts.assign(p.size(), 0);
    Rng rng(seed);
    for (int shot = 0; shot < n; ++shot) {
        const double u = rng.uniform01() * run;
        std::size_t j = 0;
        while (j + 1 < cumulative.size() && u >= cumulative[j]) ++j;
        ++out.counts[j];
    }
    std::vector<double> est(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        est[j] = static_cast<double>(out.counts[j]) / static_cast<double>(n);
    }
    out.estimate = ProbabilityVector(std::move(est), 1.0);
    return out;
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.theta_steps < 1 || spec.phi_steps < 1) {
        throw InputError("sweep needs at least one step per axis");
    }
    if (spec.noise && spec.noise->counts_per_setting < 1) {
        throw InputError("noise simulation needs counts_per_setting >= 1");
    }

    SweepResult result;
    result.spec = spec;
    result.bases = resolve_bases(spec.basis_names);
    const UncertaintyMeasure& m = measure_by_name(spec.measure);
    result.dp_profile = dp_bound(result.bases);
    result.ds_profile = ds_bound(result.bases);
    if (spec.normalized_columns) {
        if (result.bases.size() != 2) {
            throw DimensionError("normalized direct-sum columns are defined for pairs");
        }
        result.normalized_ds_profile = normalized_ds_bound(result.bases);
    }

    const int L = static_cast<int>(result.bases.size());
    result.points.reserve(static_cast<std::size_t>(spec.theta_steps) * spec.phi_steps);

    std::size_t point_index = 0;
    for (int ti = 0; ti < spec.theta_steps; ++ti) {
        const double theta = grid_value(spec.theta_from, spec.theta_to, spec.theta_steps, ti);
        for (int pi = 0; pi < spec.phi_steps; ++pi, ++point_index) {
            const double phi = grid_value(spec.phi_from, spec.phi_to, spec.phi_steps, pi);
            SweepPoint pt;
            pt.theta = theta;
            pt.phi = phi;
            const PureState state = state_family(theta, phi);
            for (const OrthonormalBasis& b : result.bases) {
                pt.distributions.push_back(born_probabilities(state, b));
            }
            double hsum = 0.0;
            for (const ProbabilityVector& d : pt.distributions) {
                const double h = shannon_entropy(d);
                pt.shannon_per_measurement.push_back(h);
                hsum += h;
            }
            pt.shannon_sum = hsum;
            pt.xi = xi_quantities(state, result.bases, result.dp_profile, result.ds_profile, m);

            if (spec.normalized_columns) {
                std::vector<ProbabilityVector> halves;
                for (const ProbabilityVector& d : pt.distributions) {
                    std::vector<double> e = d.entries;
                    for (double& x : e) x *= 0.5;
                    halves.emplace_back(std::move(e), 0.5 * d.weight);
                }
                pt.normalized_entropy = shannon_entropy(direct_sum(halves));
            }

            if (spec.noise) {
                const NoiseSpec& ns = *spec.noise;
                const std::uint64_t point_seed = mix_seed(ns.seed, point_index);
                RunningStat stat;
                for (int rep = 0; rep < ns.repetitions; ++rep) {
                    const std::uint64_t rep_seed = mix_seed(point_seed, rep);
                    std::vector<ProbabilityVector> estimates;
                    estimates.reserve(L);
                    for (int l = 0; l < L; ++l) {
                        estimates.push_back(simulate_counts(state, result.bases[l],
                                                            ns.counts_per_setting,
                                                            mix_seed(rep_seed, l))
                                                .estimate);
                    }
                    const auto value = m.evaluate(direct_sum(estimates));
                    if (value) stat.add(*value);
                }
                if (stat.n > 0) {
                    pt.noisy_mean = stat.mean();
                    pt.noisy_std = stat.sample_std();
                }
            }

            result.points.push_back(std::move(pt));
        }
    }
    return result;
}

namespace {

void csv_number(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    out << buf;
}

void csv_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) {
        csv_number(out, *v);
    } else {
        out << "nan";
    }
}

} // namespace

void write_sweep_csv(const SweepResult& result, std::ostream& out) {
    static const char prefixes[] = {'p', 'q', 'r', 's'};
    const int L = static_cast<int>(result.bases.size());
    const int d = result.bases.front().dim();

    out << "theta,phi";
    for (int l = 0; l < L; ++l)
        for (int j = 0; j < d; ++j) out << ',' << prefixes[l] << j;
    for (int l = 0; l < L; ++l) out << ",H_" << result.bases[l].label();
    out << ",H_sum,xi_dp,xi_ds,xi,noisy_mean,noisy_std";
    if (result.normalized_ds_profile) out << ",h_norm_joint,h_norm_bound";
    out << '\n';

    const double h_norm_bound =
        result.normalized_ds_profile ? result.normalized_ds_profile->entropy_bits() : 0.0;

    for (const SweepPoint& pt : result.points) {
        csv_number(out, pt.theta);
        out << ',';
        csv_number(out, pt.phi);
        for (const ProbabilityVector& dist : pt.distributions)
            for (double x : dist.entries) {
                out << ',';
                csv_number(out, x);
            }
        for (double h : pt.shannon_per_measurement) {
            out << ',';
            csv_number(out, h);
        }
        out << ',';
        csv_number(out, pt.shannon_sum);
        out << ',';
        csv_optional(out, pt.xi.xi_dp);
        out << ',';
        csv_optional(out, pt.xi.xi_ds);
        out << ',';
        csv_optional(out, pt.xi.xi);
        out << ',';
        csv_optional(out, pt.noisy_mean);
        out << ',';
        csv_optional(out, pt.noisy_std);
        if (result.normalized_ds_profile) {
            out << ',';
            csv_optional(out, pt.normalized_entropy);
            out << ',';
            csv_number(out, h_norm_bound);
        }
        out << '\n';
    }
}

VerifyReport monte_carlo_verify_profile(const std::vector<OrthonormalBasis>& bases,
                                        const CumulativeBoundProfile& profile,
                                        std::int64_t trials, std::uint64_t seed, double tol) {
    if (trials < 1) throw InputError("verification needs at least one trial");
    const int d = bases.front().dim();
    const bool product = profile.kind == BoundKind::direct_product;

    VerifyReport rep;
    rep.worst_margin = profile.total;

    const auto joint_of = [&](const auto& state) {
        std::vector<ProbabilityVector> dists;
        dists.reserve(bases.size());
        for (const OrthonormalBasis& b : bases) dists.push_back(born_probabilities(state, b));
        if (!product) return direct_sum(dists);
        ProbabilityVector joint = dists.front();
        for (std::size_t l = 1; l < dists.size(); ++l) joint = direct_product(joint, dists[l]);
        return joint;
    };

    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        const PureState psi = haar_random_state(d, rng);
        const double margin = profile_margin(joint_of(psi), profile);
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_state = psi.amplitudes;
        }
        if (margin < -tol) ++rep.violations;
        ++rep.pure_trials;
    }
    for (std::int64_t t = 0; t < trials / 10; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trials + t)));
        const DensityMatrix rho = random_mixed_state(d, rng);
        const double margin = profile_margin(joint_of(rho), profile);
        if (margin < rep.worst_margin) {
            rep.worst_margin = margin;
            rep.worst_state.clear(); // offender is mixed; no amplitude vector
        }
        if (margin < -tol) ++rep.violations;
        ++rep.mixed_trials;
    }
    return rep;
}

VerifyReport monte_carlo_verify(const std::vector<OrthonormalBasis>& bases, BoundKind kind,
                                std::int64_t trials, std::uint64_t seed, double tol) {
    const CumulativeBoundProfile profile =
        kind == BoundKind::direct_product ? dp_bound(bases) : ds_bound(bases);
    return monte_carlo_verify_profile(bases, profile, trials, seed, tol);
}

Eq5ChainReport eq5_shannon_chain(const std::vector<OrthonormalBasis>& bases,
                                 std::int64_t trials, std::uint64_t seed) {
    const int d = bases.front().dim();
    Eq5ChainReport rep;
    rep.ds_bound_entropy = ds_bound(bases).entropy_bits();
    rep.dp_bound_entropy = dp_bound(bases).entropy_bits();
    rep.min_sum_entropy = std::numeric_limits<double>::infinity();

    for (std::int64_t t = 0; t < trials; ++t) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
        const PureState psi = haar_random_state(d, rng);
        std::vector<ProbabilityVector> dists;
        for (const OrthonormalBasis& b : bases) dists.push_back(born_probabilities(psi, b));
        ProbabilityVector joint_dp = dists.front();
        for (std::size_t l = 1; l < dists.size(); ++l) joint_dp = direct_product(joint_dp, dists[l]);
        const double h_dp = shannon_entropy(joint_dp);
        const double h_ds = shannon_entropy(direct_sum(dists));
        rep.max_product_sum_gap = std::max(rep.max_product_sum_gap, std::abs(h_dp - h_ds));
        rep.min_sum_entropy = std::min(rep.min_sum_entropy, h_ds);
    }
    rep.chain_holds = rep.max_product_sum_gap <= 1e-9 &&
                      rep.min_sum_entropy >= rep.ds_bound_entropy - 1e-9 &&
                      rep.ds_bound_entropy >= rep.dp_bound_entropy - 1e-9;
    return rep;
}

} // namespace mur
