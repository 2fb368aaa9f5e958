#include "mur/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "mur/errors.hpp"
#include "mur/measures.hpp"
#include "mur/numkernel.hpp"

namespace mur {

std::string to_string(BoundKind kind) {
    return kind == BoundKind::direct_product ? "direct_product" : "direct_sum";
}

CumulativeBoundProfile::CumulativeBoundProfile(BoundKind k, int L, int d,
                                               std::vector<double> om, double tot)
    : kind(k), num_measurements(L), dim(d), omega(std::move(om)), total(tot) {
    if (omega.empty()) throw DimensionError("bound profile cannot be empty");
    double prev = 0.0;
    for (double& o : omega) {
        if (o < prev - 1e-12) throw InputError("bound profile must be nondecreasing");
        o = std::max(o, prev);
        prev = o;
    }
    if (omega.front() <= 0.0) throw InputError("bound profile must start above zero");
    if (std::abs(omega.back() - total) > 1e-9) {
        throw InputError("bound profile must end at its declared total");
    }
}

std::vector<double> CumulativeBoundProfile::increments() const {
    std::vector<double> inc(omega.size());
    double prev = 0.0;
    for (std::size_t i = 0; i < omega.size(); ++i) {
        inc[i] = std::max(0.0, omega[i] - prev);
        prev = omega[i];
    }
    return inc;
}

std::vector<double> CumulativeBoundProfile::printed_increments() const {
    std::vector<double> inc = increments();
    std::size_t last = inc.size();
    while (last > 1 && inc[last - 1] <= 1e-12) --last;
    inc.resize(last);
    if (kind == BoundKind::direct_sum && num_measurements == 2 && inc.size() > 1 &&
        std::abs(inc.front() - 1.0) <= 1e-9) {
        inc.erase(inc.begin());
    }
    return inc;
}

double CumulativeBoundProfile::entropy_bits() const {
    return shannon_entropy(ProbabilityVector(increments(), total));
}

int SelectionFamily::total_size() const {
    int n = 0;
    for (const auto& s : index_sets) n += static_cast<int>(s.size());
    return n;
}

namespace {

void check_bound_inputs(const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() < 2) throw DimensionError("bound construction needs at least 2 measurements");
    if (bases.size() > static_cast<std::size_t>(kMaxBoundMeasurements)) {
        throw ComplexityError("exhaustive bound search is limited to 4 measurements");
    }
    const int d = bases.front().dim();
    for (const OrthonormalBasis& b : bases) {
        if (b.dim() != d) throw DimensionError("bound construction needs equal dimensions");
    }
    if (d > kMaxBoundDim) {
        throw ComplexityError("exhaustive bound search is limited to dimension 8 "
                              "(2^d subsets per measurement)");
    }
}

std::vector<int> mask_to_indices(std::uint32_t mask) {
    std::vector<int> idx;
    for (int j = 0; mask != 0; ++j, mask >>= 1)
        if (mask & 1u) idx.push_back(j);
    return idx;
}

// All 2^d projector subset sums of one basis, indexed by bitmask.
std::vector<ComplexMatrix> subset_projector_sums(const OrthonormalBasis& basis) {
    const int d = basis.dim();
    const std::uint32_t count = 1u << d;
    std::vector<ComplexMatrix> sums;
    sums.reserve(count);
    sums.emplace_back(d, d); // empty selection
    for (std::uint32_t mask = 1; mask < count; ++mask) {
        const int low = std::countr_zero(mask);
        ComplexMatrix m = sums[mask & (mask - 1)];
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m(r, c) += basis.vector_entry(r, low) * std::conj(basis.vector_entry(c, low));
        sums.push_back(std::move(m));
    }
    return sums;
}

struct RawMax {
    double value = -1.0;
    std::vector<std::uint32_t> masks;
};

// Visits every selection family (one subset mask per basis) in lexicographic
// mask order and hands (masks, popcount total, lambda_max) to the sink.
// Families living inside a single basis are orthogonal projector sums with
// lambda_max exactly 1, so the eigensolver is skipped for them.
template <typename Sink>
void enumerate_families(const std::vector<OrthonormalBasis>& bases, bool require_nonempty,
                        Sink&& sink) {
    const int L = static_cast<int>(bases.size());
    const int d = bases.front().dim();
    const std::uint32_t count = 1u << d;

    std::vector<std::vector<ComplexMatrix>> subsets;
    subsets.reserve(L);
    for (const OrthonormalBasis& b : bases) subsets.push_back(subset_projector_sums(b));

    std::vector<std::uint32_t> masks(L, require_nonempty ? 1u : 0u);
    if (!require_nonempty) masks[L - 1] = 1u; // skip the all-empty family

    for (;;) {
        int k = 0;
        int nonempty = 0;
        for (std::uint32_t m : masks) {
            k += std::popcount(m);
            if (m != 0) ++nonempty;
        }

        double lam;
        const ComplexMatrix* matrix = nullptr;
        ComplexMatrix scratch;
        if (nonempty == 1) {
            lam = 1.0;
        } else {
            scratch = subsets[0][masks[0]];
            for (int l = 1; l < L; ++l) scratch += subsets[l][masks[l]];
            lam = hermitian_eigmax(scratch);
            matrix = &scratch;
        }
        sink(masks, k, lam, matrix);

        // odometer increment, last mask fastest; preserves lexicographic order
        int pos = L - 1;
        const std::uint32_t lo = require_nonempty ? 1u : 0u;
        while (pos >= 0) {
            if (++masks[pos] < count) break;
            masks[pos] = lo;
            --pos;
        }
        if (pos < 0) break;
    }
}

} // namespace

BoundComputation ds_bound_detailed(const std::vector<OrthonormalBasis>& bases) {
    check_bound_inputs(bases);
    const int L = static_cast<int>(bases.size());
    const int d = bases.front().dim();
    const int n = L * d;

    std::vector<RawMax> best(n + 1);
    enumerate_families(bases, false,
                       [&](const std::vector<std::uint32_t>& masks, int k, double lam,
                           const ComplexMatrix*) {
                           if (lam > best[k].value) best[k] = {lam, masks};
                       });

    std::vector<double> omega(n);
    double prev = 0.0;
    for (int k = 1; k <= n; ++k) {
        prev = std::min(static_cast<double>(L), std::max(best[k].value, prev));
        omega[k - 1] = prev;
    }

    BoundComputation out;
    out.profile = CumulativeBoundProfile(BoundKind::direct_sum, L, d, std::move(omega),
                                         static_cast<double>(L));
    out.witnesses.reserve(n);
    for (int k = 1; k <= n; ++k) {
        BoundWitness w;
        for (std::uint32_t m : best[k].masks) w.family.index_sets.push_back(mask_to_indices(m));
        std::vector<ComplexMatrix> mats;
        for (const OrthonormalBasis& b : bases) mats.push_back(b.matrix());
        const EigMaxResult eig =
            hermitian_eigmax_with_vector(projector_sum(mats, w.family.index_sets));
        w.eig_value = eig.value;
        w.maximizer = eig.vector;
        out.witnesses.push_back(std::move(w));
    }
    return out;
}

CumulativeBoundProfile ds_bound(const std::vector<OrthonormalBasis>& bases) {
    check_bound_inputs(bases);
    const int L = static_cast<int>(bases.size());
    const int d = bases.front().dim();
    const int n = L * d;

    std::vector<double> best(n + 1, -1.0);
    enumerate_families(bases, false,
                       [&](const std::vector<std::uint32_t>&, int k, double lam,
                           const ComplexMatrix*) { best[k] = std::max(best[k], lam); });

    std::vector<double> omega(n);
    double prev = 0.0;
    for (int k = 1; k <= n; ++k) {
        prev = std::min(static_cast<double>(L), std::max(best[k], prev));
        omega[k - 1] = prev;
    }
    return CumulativeBoundProfile(BoundKind::direct_sum, L, d, std::move(omega),
                                  static_cast<double>(L));
}

CumulativeBoundProfile dp_bound(const std::vector<OrthonormalBasis>& bases) {
    check_bound_inputs(bases);
    const int L = static_cast<int>(bases.size());
    const int d = bases.front().dim();
    std::int64_t n64 = 1;
    for (int l = 0; l < L; ++l) n64 *= d;
    const int n = static_cast<int>(n64);

    // families with every set nonempty and sum of sizes = k + L - 1 bound
    // the k-th partial sum; any k cells of the product grid reorganize into
    // such a family, so smaller families never need to be visited
    std::vector<double> best(n + 1, -1.0);
    enumerate_families(bases, true,
                       [&](const std::vector<std::uint32_t>&, int sz, double lam,
                           const ComplexMatrix*) {
                           const int k = sz - L + 1;
                           const double value = std::pow(lam / L, L);
                           if (k >= 1 && k <= n) best[k] = std::max(best[k], value);
                       });

    std::vector<double> omega(n);
    double prev = 0.0;
    for (int k = 1; k <= n; ++k) {
        prev = std::min(1.0, std::max(best[k], prev));
        omega[k - 1] = prev;
    }
    return CumulativeBoundProfile(BoundKind::direct_product, L, d, std::move(omega), 1.0);
}

CumulativeBoundProfile normalized_ds_bound(const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() != 2) {
        throw DimensionError("the normalized direct-sum bound is defined for pairs");
    }
    CumulativeBoundProfile full = ds_bound(bases);
    std::vector<double> omega = full.omega;
    for (double& o : omega) o *= 0.5;
    return CumulativeBoundProfile(BoundKind::direct_sum, 2, full.dim, std::move(omega), 1.0);
}

PairwiseBoundReport pairwise_bound_report(const std::vector<OrthonormalBasis>& bases) {
    if (bases.size() < 3) throw DimensionError("pairwise report needs at least 3 measurements");
    PairwiseBoundReport rep;
    for (std::size_t i = 0; i < bases.size(); ++i) {
        for (std::size_t j = i + 1; j < bases.size(); ++j) {
            PairwiseBounds pb;
            pb.first = static_cast<int>(i);
            pb.second = static_cast<int>(j);
            const std::vector<OrthonormalBasis> pair = {bases[i], bases[j]};
            pb.dp = dp_bound(pair);
            pb.ds = ds_bound(pair);
            pb.dp_entropy_bits = pb.dp.entropy_bits();
            pb.ds_entropy_bits = pb.ds.entropy_bits();
            rep.pairs.push_back(std::move(pb));
        }
    }
    rep.full_dp = dp_bound(bases);
    rep.full_ds = ds_bound(bases);
    rep.full_dp_entropy_bits = rep.full_dp.entropy_bits();
    rep.full_ds_entropy_bits = rep.full_ds.entropy_bits();
    return rep;
}

} // namespace mur
