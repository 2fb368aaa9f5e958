#pragma once

#include <string>
#include <vector>

namespace mur {

enum class BoundKind { direct_product, direct_sum };

std::string to_string(BoundKind kind);

// Nondecreasing partial-sum bounds Omega_1 <= ... <= Omega_n with
// Omega_n = total (1 for direct products, L for direct sums). The increment
// view is what uncertainty measures are evaluated on; it is not necessarily
// sorted, which is why the cumulative form is primary.
struct CumulativeBoundProfile {
    BoundKind kind = BoundKind::direct_sum;
    int num_measurements = 0;
    int dim = 0;
    std::vector<double> omega;
    double total = 0.0;

    CumulativeBoundProfile() = default;
    CumulativeBoundProfile(BoundKind k, int L, int d, std::vector<double> om, double tot);

    std::size_t size() const { return omega.size(); }
    std::vector<double> increments() const;

    // Publication view: trailing zero increments are dropped, and for
    // two-measurement direct sums the conventional leading 1 is dropped as
    // well, matching how such bounds are usually listed.
    std::vector<double> printed_increments() const;

    // Shannon entropy (base 2) of the increment view.
    double entropy_bits() const;
};

} // namespace mur
