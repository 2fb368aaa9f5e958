#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mur {

// splitmix64 step; used to derive independent substreams from one seed so
// that parallel or reordered evaluation cannot change any result.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Deterministic random source. All randomness in the library flows through
// this wrapper; distributions are hand-rolled on top of raw mt19937_64
// output so that streams are reproducible across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // uniform in [0, 1)
    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    // uniform in (0, 1]; safe as a log argument
    double uniform01_open0() {
        return 1.0 - uniform01();
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift; bias is negligible for n << 2^64
        return static_cast<std::uint64_t>(uniform01() * static_cast<double>(n)) % n;
    }

    // standard normal via Box-Muller
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform01_open0();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace mur
