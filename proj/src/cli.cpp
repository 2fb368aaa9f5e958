#include "mur/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mur/bounds.hpp"
#include "mur/errors.hpp"
#include "mur/experiments.hpp"
#include "mur/majorization.hpp"
#include "mur/measures.hpp"
#include "mur/quantum.hpp"

namespace mur::cli {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitSemantic = 3;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string json_array(const std::vector<double>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += fmt(xs[i]);
    }
    return s + "]";
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    for (const std::string& tok : split_commas(s)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw InputError("trailing characters in number '" + tok + "'");
        } catch (const std::exception&) {
            throw InputError("cannot parse number '" + tok + "'");
        }
    }
    if (out.empty()) throw InputError("empty number list");
    return out;
}

// Output goes to --out when given, otherwise to the session stream.
class OutputTarget {
public:
    OutputTarget(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open output file " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : fallback_; }

private:
    std::ofstream file_;
    std::ostream& fallback_;
};

void emit_profile_json(const CumulativeBoundProfile& p, std::ostream& out) {
    out << "{\n";
    out << "  \"kind\": \"" << to_string(p.kind) << "\",\n";
    out << "  \"L\": " << p.num_measurements << ",\n";
    out << "  \"dim\": " << p.dim << ",\n";
    out << "  \"omega\": " << json_array(p.omega) << ",\n";
    out << "  \"increments\": " << json_array(p.increments()) << ",\n";
    out << "  \"printed_increments\": " << json_array(p.printed_increments()) << ",\n";
    out << "  \"entropy_bits\": " << fmt(p.entropy_bits()) << "\n";
    out << "}\n";
}

struct GlobalOpts {
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    double tol = 1e-9;
};

int cmd_bound(const std::vector<std::string>& basis_names, const std::string& kind,
              bool normalized, bool flat, const GlobalOpts& g, std::ostream& out) {
    const std::vector<OrthonormalBasis> bases = resolve_bases(basis_names);
    CumulativeBoundProfile profile;
    if (normalized) {
        if (kind != "ds") throw DimensionError("--normalized applies to direct-sum bounds only");
        profile = normalized_ds_bound(bases);
    } else if (kind == "dp") {
        profile = dp_bound(bases);
    } else {
        profile = ds_bound(bases);
    }
    if (flat) profile = flatten(profile);
    OutputTarget target(g.out_path, out);
    emit_profile_json(profile, target.stream());
    return kExitOk;
}

int cmd_sweep(SweepSpec spec, const GlobalOpts& g, std::ostream& out) {
    if (spec.noise) spec.noise->seed = g.seed;
    const SweepResult result = run_sweep(spec);

    const std::string path = g.out_path.empty() ? "sweep.csv" : g.out_path;
    {
        std::ofstream file(path);
        if (!file) throw InputError("cannot open output file " + path);
        write_sweep_csv(result, file);
    }

    const auto minmax_of = [&](auto getter) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const SweepPoint& pt : result.points) {
            const std::optional<double> v = getter(pt);
            if (!v) continue;
            lo = std::min(lo, *v);
            hi = std::max(hi, *v);
        }
        return std::pair<double, double>{lo, hi};
    };
    const auto [xdp_lo, xdp_hi] = minmax_of([](const SweepPoint& p) { return p.xi.xi_dp; });
    const auto [xds_lo, xds_hi] = minmax_of([](const SweepPoint& p) { return p.xi.xi_ds; });
    const auto [xi_lo, xi_hi] = minmax_of([](const SweepPoint& p) { return p.xi.xi; });
    double hsum_min = std::numeric_limits<double>::infinity();
    for (const SweepPoint& pt : result.points) hsum_min = std::min(hsum_min, pt.shannon_sum);

    out << "wrote " << result.points.size() << " rows to " << path << "\n";
    out << "xi_dp: min " << fmt(xdp_lo) << " max " << fmt(xdp_hi) << "\n";
    out << "xi_ds: min " << fmt(xds_lo) << " max " << fmt(xds_hi) << "\n";
    out << "xi:    min " << fmt(xi_lo) << " max " << fmt(xi_hi) << "\n";
    out << "H_sum: min " << fmt(hsum_min) << "\n";
    if (result.normalized_ds_profile) {
        const double bound = result.normalized_ds_profile->entropy_bits();
        double margin = std::numeric_limits<double>::infinity();
        for (const SweepPoint& pt : result.points) {
            if (pt.normalized_entropy) margin = std::min(margin, *pt.normalized_entropy - bound);
        }
        out << "normalized direct-sum margin: min " << fmt(margin) << "\n";
    }
    return kExitOk;
}

int cmd_verify(const std::vector<std::string>& basis_names, const std::string& kind,
               std::int64_t trials, const std::string& omega_override, const GlobalOpts& g,
               std::ostream& out, std::ostream& err) {
    const std::vector<OrthonormalBasis> bases = resolve_bases(basis_names);
    const BoundKind bk = (kind == "dp") ? BoundKind::direct_product : BoundKind::direct_sum;

    CumulativeBoundProfile profile = bk == BoundKind::direct_product ? dp_bound(bases)
                                                                     : ds_bound(bases);
    if (!omega_override.empty()) {
        // test hook: replace the cumulative bound values wholesale
        std::vector<double> omega = parse_double_list(omega_override);
        profile = CumulativeBoundProfile(bk, profile.num_measurements, profile.dim,
                                         std::move(omega), profile.total);
    }

    const VerifyReport rep = monte_carlo_verify_profile(bases, profile, trials, g.seed, g.tol);
    const Eq5ChainReport chain = eq5_shannon_chain(bases, std::min<std::int64_t>(trials, 10000),
                                                   mix_seed(g.seed, 0xE95));

    OutputTarget target(g.out_path, out);
    std::ostream& os = target.stream();
    os << "{\n";
    os << "  \"kind\": \"" << to_string(bk) << "\",\n";
    os << "  \"trials_pure\": " << rep.pure_trials << ",\n";
    os << "  \"trials_mixed\": " << rep.mixed_trials << ",\n";
    os << "  \"violations\": " << rep.violations << ",\n";
    os << "  \"worst_margin\": " << fmt(rep.worst_margin) << ",\n";
    os << "  \"shannon_chain\": {\n";
    os << "    \"max_product_sum_gap\": " << fmt(chain.max_product_sum_gap) << ",\n";
    os << "    \"min_sum_entropy\": " << fmt(chain.min_sum_entropy) << ",\n";
    os << "    \"ds_bound_entropy\": " << fmt(chain.ds_bound_entropy) << ",\n";
    os << "    \"dp_bound_entropy\": " << fmt(chain.dp_bound_entropy) << ",\n";
    os << "    \"holds\": " << (chain.chain_holds ? "true" : "false") << "\n";
    os << "  }\n";
    os << "}\n";

    if (rep.violations > 0) {
        err << "bound violated " << rep.violations << " times; worst margin "
            << fmt(rep.worst_margin) << "\n";
        if (!rep.worst_state.empty()) {
            err << "worst offender amplitudes:";
            for (const cplx& a : rep.worst_state) {
                err << " (" << fmt(a.real()) << ", " << fmt(a.imag()) << ")";
            }
            err << "\n";
        } else {
            err << "worst offender was a mixed state\n";
        }
        return kExitViolation;
    }
    return kExitOk;
}

int cmd_measures(const std::string& measure_name, bool all, const std::string& dist,
                 bool strict, int trials, const GlobalOpts& g, std::ostream& out) {
    std::vector<UncertaintyMeasure> selected;
    if (all) {
        selected = measure_registry();
    } else if (!measure_name.empty()) {
        selected.push_back(measure_by_name(measure_name));
    } else {
        throw InputError("pass --measure <name> or --all");
    }

    bool undefined_seen = false;
    if (!dist.empty()) {
        std::vector<double> entries = parse_double_list(dist);
        double weight = 0.0;
        for (double x : entries) weight += x;
        const ProbabilityVector pv(std::move(entries), weight);
        out << "distribution: " << json_array(pv.entries) << " (weight " << fmt(pv.weight)
            << ")\n";
        for (const UncertaintyMeasure& m : selected) {
            const auto v = m.evaluate(pv);
            out << "  " << m.name << ": ";
            if (v) {
                out << fmt(*v) << "\n";
            } else {
                out << "undefined\n";
                undefined_seen = true;
            }
        }
    }

    out << "additivity (trials " << trials << ", tolerance 1e-9):\n";
    out << "  measure        dp_additive  ds_additive  super_additive\n";
    for (const UncertaintyMeasure& m : selected) {
        const AdditivityReport rep = check_additivity(m, trials, g.seed);
        char line[96];
        std::snprintf(line, sizeof(line), "  %-14s %-12s %-12s %s\n", m.name.c_str(),
                      rep.dp_additive ? "yes" : "no", rep.ds_additive ? "yes" : "no",
                      rep.super_additive ? "yes" : "no");
        out << line;
    }

    if (strict && undefined_seen) {
        throw UndefinedValueError("a measure was undefined on the given distribution");
    }
    return kExitOk;
}

int cmd_simulate(double theta, double phi, const std::string& basis_name, int n, int reps,
                 const GlobalOpts& g, std::ostream& out) {
    const std::vector<OrthonormalBasis> bases = resolve_bases({basis_name});
    const OrthonormalBasis& basis = bases.front();
    const PureState state = state_family(theta, phi);
    const ProbabilityVector exact = born_probabilities(state, basis);

    const CountSample first = simulate_counts(state, basis, n, mix_seed(g.seed, 0));
    double mean = 0.0;
    double m2 = 0.0;
    for (int rep = 0; rep < reps; ++rep) {
        const CountSample s = rep == 0 ? first
                                       : simulate_counts(state, basis, n, mix_seed(g.seed, rep));
        const double h = shannon_entropy(s.estimate);
        const double delta = h - mean;
        mean += delta / (rep + 1);
        m2 += delta * (h - mean);
    }
    const double stddev = reps > 1 ? std::sqrt(m2 / (reps - 1)) : 0.0;

    OutputTarget target(g.out_path, out);
    std::ostream& os = target.stream();
    os << "{\n";
    os << "  \"basis\": \"" << basis.label() << "\",\n";
    os << "  \"n\": " << n << ",\n";
    os << "  \"repetitions\": " << reps << ",\n";
    os << "  \"counts\": [";
    for (std::size_t j = 0; j < first.counts.size(); ++j) {
        if (j) os << ", ";
        os << first.counts[j];
    }
    os << "],\n";
    os << "  \"estimate\": " << json_array(first.estimate.entries) << ",\n";
    os << "  \"exact\": " << json_array(exact.entries) << ",\n";
    os << "  \"shannon_exact\": " << fmt(shannon_entropy(exact)) << ",\n";
    os << "  \"shannon_mean\": " << fmt(mean) << ",\n";
    os << "  \"shannon_std\": " << fmt(stddev) << "\n";
    os << "}\n";
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"majorization uncertainty bounds for finite-dimensional measurements"};
    app.name("mur");

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for all randomness")->capture_default_str();
    app.add_option("--out", g.out_path, "output file (default: standard output)");
    app.add_option("--tol", g.tol, "tolerance for order checks")->capture_default_str();
    app.require_subcommand(1);
    // global flags may appear after the subcommand; inherited by the
    // subcommands created below
    app.fallthrough();

    // bound
    auto* bound = app.add_subcommand("bound", "compute a state-independent bound profile");
    std::string bound_bases;
    std::string bound_kind = "ds";
    bool bound_normalized = false;
    bool bound_flatten = false;
    bound->add_option("--bases", bound_bases, "comma list of built-ins (A,B,C1,C2,C3) or files")
        ->required();
    bound->add_option("--kind", bound_kind, "dp | ds")
        ->check(CLI::IsMember({"dp", "ds"}));
    bound->add_flag("--normalized", bound_normalized, "weight-1/2 direct-sum variant (pairs)");
    bound->add_flag("--flatten", bound_flatten, "least concave majorant of the profile");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "evaluate a state-family grid to CSV");
    std::string figure;
    std::string sweep_bases;
    std::string sweep_measure = "shannon";
    double theta_from = 0.0, theta_to = 0.0, phi_from = 0.0, phi_to = 0.0;
    int theta_steps = 1, phi_steps = 1;
    int noise_counts = 0;
    int noise_reps = kDefaultRepetitions;
    sweep->add_option("--figure", figure, "preset: 2a 2b 2c 2d 3a 3b 3c 3d appendixA");
    sweep->add_option("--bases", sweep_bases, "comma list of bases");
    sweep->add_option("--measure", sweep_measure, "uncertainty measure name");
    sweep->add_option("--theta-from", theta_from);
    sweep->add_option("--theta-to", theta_to);
    sweep->add_option("--theta-steps", theta_steps);
    sweep->add_option("--phi-from", phi_from);
    sweep->add_option("--phi-to", phi_to);
    sweep->add_option("--phi-steps", phi_steps);
    sweep->add_option("--noise", noise_counts, "counts per measurement setting");
    sweep->add_option("--reps", noise_reps, "noise repetitions per grid point");

    // verify
    auto* verify = app.add_subcommand("verify", "Monte Carlo soundness check of a bound");
    std::string verify_bases;
    std::string verify_kind = "ds";
    std::int64_t trials = 100000;
    std::string omega_override;
    verify->add_option("--bases", verify_bases)->required();
    verify->add_option("--kind", verify_kind, "dp | ds")->check(CLI::IsMember({"dp", "ds"}));
    verify->add_option("--trials", trials, "Haar pure trials (plus trials/10 mixed)");
    verify->add_option("--omega-override", omega_override,
                       "test hook: replace the cumulative bound values");

    // measures
    auto* measures = app.add_subcommand("measures", "evaluate measures and additivity");
    std::string measure_name;
    bool measures_all = false;
    std::string dist;
    bool strict = false;
    int measure_trials = 2000;
    measures->add_option("--measure", measure_name, "measure name");
    measures->add_flag("--all", measures_all, "all registered measures");
    measures->add_option("--dist", dist, "inline comma-separated distribution");
    measures->add_flag("--strict", strict, "fail when a value is undefined");
    measures->add_option("--trials", measure_trials, "additivity trials");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "finite-count statistics for one setting");
    double sim_theta = 0.0, sim_phi = 0.0;
    std::string sim_basis;
    int sim_n = kDefaultCountsPerSetting;
    int sim_reps = 1;
    simulate->add_option("--theta", sim_theta)->required();
    simulate->add_option("--phi", sim_phi)->required();
    simulate->add_option("--basis", sim_basis)->required();
    simulate->add_option("--n", sim_n, "counts per run");
    simulate->add_option("--reps", sim_reps, "independent repetitions");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        if (bound->parsed()) {
            return cmd_bound(split_commas(bound_bases), bound_kind, bound_normalized,
                             bound_flatten, g, out);
        }
        if (sweep->parsed()) {
            SweepSpec spec;
            if (!figure.empty()) {
                spec = sweep_preset(figure);
            } else {
                if (sweep_bases.empty()) {
                    throw InputError("pass --figure or an explicit --bases grid");
                }
                spec.basis_names = split_commas(sweep_bases);
                spec.measure = sweep_measure;
                spec.theta_from = theta_from;
                spec.theta_to = theta_to;
                spec.theta_steps = theta_steps;
                spec.phi_from = phi_from;
                spec.phi_to = phi_to;
                spec.phi_steps = phi_steps;
            }
            if (noise_counts > 0) {
                spec.noise = NoiseSpec{noise_counts, noise_reps, g.seed};
            }
            return cmd_sweep(std::move(spec), g, out);
        }
        if (verify->parsed()) {
            return cmd_verify(split_commas(verify_bases), verify_kind, trials, omega_override,
                              g, out, err);
        }
        if (measures->parsed()) {
            return cmd_measures(measure_name, measures_all, dist, strict, measure_trials, g,
                                out);
        }
        if (simulate->parsed()) {
            return cmd_simulate(sim_theta, sim_phi, sim_basis, sim_n, sim_reps, g, out);
        }
        err << "error: no command given\n";
        return kExitInput;
    } catch (const DimensionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const ComplexityError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const InvalidMatrixError& e) {
        err << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

} // namespace mur::cli
