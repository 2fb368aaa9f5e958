#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "mur/errors.hpp"
#include "mur/majorization.hpp"
#include "mur/quantum.hpp"

using namespace mur;

namespace {

ProbabilityVector pv(std::vector<double> e) {
    double w = 0.0;
    for (double x : e) w += x;
    return ProbabilityVector(std::move(e), w);
}

CumulativeBoundProfile profile_of(std::vector<double> omega, double total) {
    return CumulativeBoundProfile(BoundKind::direct_sum, 2, 4, std::move(omega), total);
}

} // namespace

TEST_CASE("direct product of distributions") {
    const ProbabilityVector a = direct_product(pv({1.0, 0.0}), pv({0.5, 0.5}));
    CHECK(a.entries == std::vector<double>{0.5, 0.5, 0.0, 0.0});
    CHECK(a.weight == doctest::Approx(1.0));

    const ProbabilityVector u4 = pv({0.25, 0.25, 0.25, 0.25});
    const ProbabilityVector b = direct_product(u4, u4);
    CHECK(b.size() == 16);
    for (double x : b.entries) CHECK(x == doctest::Approx(1.0 / 16.0));

    const ProbabilityVector c =
        direct_product(pv({0.25, 0.25, 0.5, 0.0}), pv({0.25, 0.25, 0.25, 0.25}));
    CHECK(c.max_entry() == doctest::Approx(0.125));
}

TEST_CASE("direct sum concatenates and adds weights") {
    const ProbabilityVector s = direct_sum({pv({1.0, 0.0}), pv({0.5, 0.5})});
    CHECK(s.entries == std::vector<double>{1.0, 0.0, 0.5, 0.5});
    CHECK(s.weight == doctest::Approx(2.0));

    const ProbabilityVector u4 = pv({0.25, 0.25, 0.25, 0.25});
    const ProbabilityVector t = direct_sum({u4, u4, u4});
    CHECK(t.size() == 12);
    CHECK(t.weight == doctest::Approx(3.0));

    CHECK_THROWS_AS(direct_sum({}), InputError);
}

TEST_CASE("majorization order on the printed examples") {
    CHECK(majorizes(pv({0.5, 0.5}), pv({1.0, 0.0})));
    const ProbabilityVector x = pv({0.3, 0.4, 0.3});
    CHECK(majorizes(x, x)); // reflexive
    CHECK_FALSE(majorizes(pv({0.5, 0.5, 0.0}), pv({0.6, 0.2, 0.2})));
    // padding makes unequal lengths comparable
    CHECK(majorizes(pv({0.5, 0.3, 0.2}), pv({0.6, 0.4})));
}

TEST_CASE("profile domination on the two-measurement example") {
    // p (+) q for the second basis state against the direct-sum bound profile
    const CumulativeBoundProfile ds = profile_of({1.0, 1.5, 1.0 + std::sqrt(0.5), 2.0}, 2.0);
    const ProbabilityVector joint =
        direct_sum({pv({0.0, 1.0, 0.0, 0.0}), pv({0.25, 0.25, 0.25, 0.25})});
    CHECK(dominated_by_profile(joint, ds));

    const ProbabilityVector peaked = direct_sum({pv({1.0, 0.0}), pv({1.0, 0.0})});
    CHECK(dominated_by_profile(peaked, profile_of({1.0, 2.0}, 2.0)));

    const CumulativeBoundProfile tight = profile_of({0.5, 1.0}, 1.0);
    CHECK_FALSE(dominated_by_profile(pv({0.6, 0.4}), tight));

    // mismatched totals are a contract violation, not a false
    CHECK_THROWS_AS(dominated_by_profile(pv({1.0}), profile_of({1.0, 2.0}, 2.0)),
                    DimensionError);
}

TEST_CASE("flatten: concave input is a fixed point") {
    const CumulativeBoundProfile p = profile_of({1.0, 1.5, 1.8, 2.0}, 2.0);
    const CumulativeBoundProfile f = flatten(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
        CHECK(f.omega[i] == doctest::Approx(p.omega[i]).epsilon(1e-12));
    }
}

TEST_CASE("flatten: the direct-sum profile gains a straight tail segment") {
    const CumulativeBoundProfile p = profile_of({1.0, 1.5, 1.7071, 2.0}, 2.0);
    const CumulativeBoundProfile f = flatten(p);
    CHECK(f.omega[0] == doctest::Approx(1.0));
    CHECK(f.omega[1] == doctest::Approx(1.5));
    CHECK(f.omega[2] == doctest::Approx(1.75)); // chord from (2, 1.5) to (4, 2)
    CHECK(f.omega[3] == doctest::Approx(2.0));
    const std::vector<double> inc = f.increments();
    CHECK(inc[2] == doctest::Approx(0.25));
    CHECK(inc[3] == doctest::Approx(0.25));
}

TEST_CASE("flatten: non-monotone increments straighten to the chord") {
    const CumulativeBoundProfile p =
        CumulativeBoundProfile(BoundKind::direct_product, 2, 4, {0.5625, 0.7286, 1.0}, 1.0);
    const CumulativeBoundProfile f = flatten(p);
    CHECK(f.omega[0] == doctest::Approx(0.5625));
    CHECK(f.omega[1] == doctest::Approx(0.78125)); // line from (1, 0.5625) to (3, 1)
    CHECK(f.omega[2] == doctest::Approx(1.0));
    const std::vector<double> inc = f.increments();
    CHECK(inc[1] == doctest::Approx(0.21875));
    CHECK(inc[2] == doctest::Approx(0.21875));
}

TEST_CASE("flatten dominates its input, preserves the total, sorts increments") {
    Rng rng(31);
    for (int t = 0; t < 2000; ++t) {
        const int n = 3 + static_cast<int>(rng.below(8));
        std::vector<double> omega(n);
        double run = 0.0;
        for (double& o : omega) {
            run += rng.uniform01() + 1e-6;
            o = run;
        }
        const CumulativeBoundProfile p(BoundKind::direct_sum, 2, n, omega, run);
        const CumulativeBoundProfile f = flatten(p);
        CHECK(f.total == doctest::Approx(p.total));
        CHECK(f.omega.back() == doctest::Approx(p.omega.back()).epsilon(1e-12));
        const std::vector<double> inc = f.increments();
        for (std::size_t i = 0; i < f.size(); ++i) {
            CHECK(f.omega[i] >= p.omega[i] - 1e-12);
            if (i > 0) CHECK(inc[i] <= inc[i - 1] + 1e-12);
        }
    }
}

TEST_CASE("domination by a profile implies domination by its flattening") {
    Rng rng(32);
    for (int t = 0; t < 2000; ++t) {
        std::vector<double> omega(6);
        double run = 0.0;
        for (double& o : omega) {
            run += rng.uniform01() + 1e-6;
            o = run;
        }
        const CumulativeBoundProfile p(BoundKind::direct_sum, 2, 3, omega, run);

        ProbabilityVector x = random_distribution(6, rng);
        for (double& e : x.entries) e *= run;
        x.weight = run;
        if (dominated_by_profile(x, p)) {
            CHECK(dominated_by_profile(x, flatten(p)));
        }
    }
}

TEST_CASE("random majorized pairs are majorized by construction") {
    for (int t = 0; t < 10000; ++t) {
        const auto [x, y] = random_majorized_pair(2 + (t % 7), 1000 + t);
        CHECK(majorizes(x, y, 1e-12));
    }
}

TEST_CASE("zero T-transforms leave the distribution unchanged") {
    Rng rng(33);
    const ProbabilityVector y = random_distribution(5, rng);
    const ProbabilityVector x = apply_random_t_transforms(y, 0, rng);
    CHECK(x.entries == y.entries);
}

TEST_CASE("uniform is the bottom of the order, a point mass the top") {
    Rng rng(34);
    for (int t = 0; t < 10000; ++t) {
        const int d = 2 + static_cast<int>(rng.below(7));
        const ProbabilityVector y = random_distribution(d, rng);
        const ProbabilityVector uniform(std::vector<double>(d, 1.0 / d), 1.0);
        std::vector<double> point(d, 0.0);
        point[0] = 1.0;
        CHECK(majorizes(uniform, y));
        CHECK(majorizes(y, ProbabilityVector(point, 1.0)));
    }
}

TEST_CASE("majorization is transitive along composed T-transform chains") {
    Rng rng(35);
    for (int t = 0; t < 10000; ++t) {
        const int d = 3 + static_cast<int>(rng.below(5));
        const ProbabilityVector z = random_distribution(d, rng);
        const ProbabilityVector y = apply_random_t_transforms(z, 1 + (t % 5), rng);
        const ProbabilityVector x = apply_random_t_transforms(y, 1 + (t % 3), rng);
        CHECK(majorizes(x, z, 1e-12));
    }
}

TEST_CASE("majorizes is insensitive to permutations of either argument") {
    Rng rng(36);
    for (int t = 0; t < 2000; ++t) {
        const int d = 3 + static_cast<int>(rng.below(4));
        auto [x, y] = random_majorized_pair(d, rng);
        std::vector<double> xs = x.entries;
        std::vector<double> ys = y.entries;
        for (int i = d - 1; i > 0; --i) std::swap(xs[i], xs[rng.below(i + 1)]);
        for (int i = d - 1; i > 0; --i) std::swap(ys[i], ys[rng.below(i + 1)]);
        CHECK(majorizes(ProbabilityVector(xs, x.weight), ProbabilityVector(ys, y.weight),
                        1e-12));
        CHECK_FALSE(majorizes(ProbabilityVector(ys, y.weight), ProbabilityVector(xs, x.weight),
                              1e-12) !=
                    majorizes(y, x, 1e-12));
    }
}

TEST_CASE("sorted profile exposes nonincreasing entries and running sums") {
    const SortedProfile s = sorted_profile(pv({0.1, 0.6, 0.3}));
    CHECK(s.sorted == std::vector<double>{0.6, 0.3, 0.1});
    CHECK(s.cumulative[0] == doctest::Approx(0.6));
    CHECK(s.cumulative[1] == doctest::Approx(0.9));
    CHECK(s.cumulative[2] == doctest::Approx(1.0));
    CHECK(s.weight == doctest::Approx(1.0));
}
