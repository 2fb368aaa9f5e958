#include "mur/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mur/errors.hpp"

namespace mur {

SortedProfile sorted_profile(const ProbabilityVector& x) {
    SortedProfile out;
    out.sorted = x.entries;
    std::sort(out.sorted.begin(), out.sorted.end(), std::greater<double>());
    out.cumulative.resize(out.sorted.size());
    long double run = 0.0L;
    for (std::size_t i = 0; i < out.sorted.size(); ++i) {
        run += out.sorted[i];
        out.cumulative[i] = static_cast<double>(run);
    }
    out.weight = static_cast<double>(run);
    return out;
}

ProbabilityVector direct_product(const ProbabilityVector& p, const ProbabilityVector& q) {
    std::vector<double> out;
    out.reserve(p.size() * q.size());
    for (double a : p.entries)
        for (double b : q.entries) out.push_back(a * b);
    return ProbabilityVector(std::move(out), p.weight * q.weight);
}

ProbabilityVector direct_sum(const std::vector<ProbabilityVector>& ps) {
    if (ps.empty()) throw InputError("direct sum of an empty sequence");
    std::vector<double> out;
    double weight = 0.0;
    for (const ProbabilityVector& p : ps) {
        out.insert(out.end(), p.entries.begin(), p.entries.end());
        weight += p.weight;
    }
    return ProbabilityVector(std::move(out), weight);
}

bool majorizes(const ProbabilityVector& x, const ProbabilityVector& y, double tol) {
    SortedProfile sx = sorted_profile(x);
    SortedProfile sy = sorted_profile(y);
    if (std::abs(sx.weight - sy.weight) > tol) return false;
    const std::size_t n = std::max(sx.cumulative.size(), sy.cumulative.size());
    for (std::size_t k = 0; k < n; ++k) {
        const double cx = k < sx.cumulative.size() ? sx.cumulative[k] : sx.weight;
        const double cy = k < sy.cumulative.size() ? sy.cumulative[k] : sy.weight;
        if (cx > cy + tol) return false;
    }
    return true;
}

double profile_margin(const ProbabilityVector& x, const CumulativeBoundProfile& profile) {
    SortedProfile sx = sorted_profile(x);
    double margin = profile.total - sx.weight; // slack at k = n and beyond
    for (std::size_t k = 0; k < sx.cumulative.size(); ++k) {
        const double omega = k < profile.omega.size() ? profile.omega[k] : profile.total;
        margin = std::min(margin, omega - sx.cumulative[k]);
    }
    return margin;
}

bool dominated_by_profile(const ProbabilityVector& x, const CumulativeBoundProfile& profile,
                          double tol) {
    if (std::abs(x.sum() - profile.total) > std::max(tol, 1e-9)) {
        throw DimensionError("distribution total does not match the profile total");
    }
    return profile_margin(x, profile) >= -tol;
}

CumulativeBoundProfile flatten(const CumulativeBoundProfile& profile) {
    // Upper concave envelope of the points (0,0), (1,Omega_1) ... (n,Omega_n)
    // by a monotone-chain scan; x-coordinates are the integers 0..n.
    const std::size_t n = profile.omega.size();
    std::vector<std::size_t> hull; // indices into the point list 0..n
    std::vector<double> y(n + 1);
    y[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) y[i + 1] = profile.omega[i];

    for (std::size_t i = 0; i <= n; ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2];
            const std::size_t b = hull[hull.size() - 1];
            // keep b only if it lies strictly above chord a -> i
            const double lhs = (y[b] - y[a]) * static_cast<double>(i - a);
            const double rhs = (y[i] - y[a]) * static_cast<double>(b - a);
            if (lhs > rhs) break;
            hull.pop_back();
        }
        hull.push_back(i);
    }

    std::vector<double> env(n);
    for (std::size_t seg = 0; seg + 1 < hull.size(); ++seg) {
        const std::size_t a = hull[seg];
        const std::size_t b = hull[seg + 1];
        const double slope = (y[b] - y[a]) / static_cast<double>(b - a);
        for (std::size_t k = a + 1; k <= b; ++k) {
            env[k - 1] = y[a] + slope * static_cast<double>(k - a);
        }
    }
    return CumulativeBoundProfile(profile.kind, profile.num_measurements, profile.dim,
                                  std::move(env), profile.total);
}

ProbabilityVector random_distribution(int dim, Rng& rng) {
    std::vector<double> v(dim);
    double s = 0.0;
    for (double& x : v) {
        x = -std::log(rng.uniform01_open0());
        s += x;
    }
    for (double& x : v) x /= s;
    return ProbabilityVector(std::move(v), 1.0);
}

ProbabilityVector apply_random_t_transforms(const ProbabilityVector& y, int count, Rng& rng) {
    std::vector<double> x = y.entries;
    const int n = static_cast<int>(x.size());
    for (int step = 0; step < count; ++step) {
        const int i = static_cast<int>(rng.below(n));
        int j = static_cast<int>(rng.below(n - 1));
        if (j >= i) ++j;
        const double t = rng.uniform(0.0, 0.5);
        const double xi = x[i];
        const double xj = x[j];
        x[i] = (1.0 - t) * xi + t * xj;
        x[j] = t * xi + (1.0 - t) * xj;
    }
    return ProbabilityVector(std::move(x), y.weight);
}

std::pair<ProbabilityVector, ProbabilityVector> random_majorized_pair(int dim, Rng& rng) {
    if (dim < 2) throw DimensionError("majorized pairs need dimension >= 2");
    ProbabilityVector y = random_distribution(dim, rng);
    const int count = 1 + static_cast<int>(rng.below(3 * dim));
    ProbabilityVector x = apply_random_t_transforms(y, count, rng);
    return {std::move(x), std::move(y)};
}

std::pair<ProbabilityVector, ProbabilityVector> random_majorized_pair(int dim,
                                                                      std::uint64_t seed) {
    Rng rng(seed);
    return random_majorized_pair(dim, rng);
}

} // namespace mur
