#include "mur/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mur/errors.hpp"

namespace mur {
namespace {

constexpr double kHermTol = 1e-12;
constexpr int kMaxSweeps = 64;

struct JacobiResult {
    std::vector<double> diag;   // eigenvalues, unordered
    ComplexMatrix vectors;      // columns are the matching eigenvectors
};

// Cyclic Jacobi for complex Hermitian matrices. Each rotation first strips
// the phase of the pivot entry, then applies the classical real rotation;
// quadratic convergence makes a handful of sweeps enough at n <= 16.
JacobiResult jacobi_diagonalize(ComplexMatrix h) {
    const int n = h.rows();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double scale = std::max(1.0, h.frobenius_norm());

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(h(p, q));
        off = std::sqrt(2.0 * off);
        if (off <= 1e-14 * scale) break;

        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double beta = std::abs(h(p, q));
                if (beta <= 1e-20 * scale) {
                    h(p, q) = 0.0;
                    h(q, p) = 0.0;
                    continue;
                }
                const cplx phase = h(p, q) / beta; // e^{i theta}
                const double a = h(p, p).real();
                const double d = h(q, q).real();
                const double tau = (d - a) / (2.0 * beta);
                // smaller-magnitude root of t^2 - 2 tau t - 1 = 0
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // rows/columns p and q of h (unitary congruence)
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx hkp = h(k, p);
                    const cplx hkq = h(k, q);
                    h(k, p) = hkp * c + hkq * (s * std::conj(phase));
                    h(k, q) = hkp * (-s * phase) + hkq * c;
                    h(p, k) = std::conj(h(k, p));
                    h(q, k) = std::conj(h(k, q));
                }
                const double app = a * c * c + 2.0 * beta * s * c + d * s * s;
                const double aqq = a * s * s - 2.0 * beta * s * c + d * c * c;
                h(p, p) = app;
                h(q, q) = aqq;
                h(p, q) = 0.0;
                h(q, p) = 0.0;

                // accumulate eigenvectors: V <- V U
                for (int k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * (s * std::conj(phase));
                    v(k, q) = vkp * (-s * phase) + vkq * c;
                }
            }
        }
    }

    JacobiResult out;
    out.diag.resize(n);
    for (int i = 0; i < n; ++i) out.diag[i] = h(i, i).real();
    out.vectors = std::move(v);
    return out;
}

ComplexMatrix checked_hermitian(const ComplexMatrix& m) {
    if (m.rows() != m.cols() || m.rows() < 1) {
        throw InvalidMatrixError("eigenkernel expects a non-empty square matrix");
    }
    if (m.rows() > kMaxKernelDim) {
        throw InvalidMatrixError("eigenkernel supports dimensions up to 16");
    }
    if (!m.is_hermitian(kHermTol)) {
        throw InvalidMatrixError("matrix is not Hermitian within 1e-12");
    }
    return hermitize(m);
}

} // namespace

double hermitian_eigmax(const ComplexMatrix& m) {
    JacobiResult r = jacobi_diagonalize(checked_hermitian(m));
    return *std::max_element(r.diag.begin(), r.diag.end());
}

EigMaxResult hermitian_eigmax_with_vector(const ComplexMatrix& m) {
    JacobiResult r = jacobi_diagonalize(checked_hermitian(m));
    int best = 0;
    for (int i = 1; i < static_cast<int>(r.diag.size()); ++i)
        if (r.diag[i] > r.diag[best]) best = i;
    EigMaxResult out;
    out.value = r.diag[best];
    out.vector.resize(r.diag.size());
    for (int i = 0; i < static_cast<int>(r.diag.size()); ++i) out.vector[i] = r.vectors(i, best);
    return out;
}

double hermitian_eigmin(const ComplexMatrix& m) {
    JacobiResult r = jacobi_diagonalize(checked_hermitian(m));
    return *std::min_element(r.diag.begin(), r.diag.end());
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    JacobiResult r = jacobi_diagonalize(checked_hermitian(m));
    std::sort(r.diag.begin(), r.diag.end(), std::greater<double>());
    return r.diag;
}

double largest_singular_value(const ComplexMatrix& m) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw InvalidMatrixError("singular values of an empty matrix");
    }
    if (m.rows() > kMaxKernelDim || m.cols() > kMaxKernelDim) {
        throw InvalidMatrixError("singular-value kernel supports sides up to 16");
    }
    // Gram matrix on the smaller side
    const ComplexMatrix g =
        (m.rows() >= m.cols()) ? m.adjoint() * m : m * m.adjoint();
    const double lam = hermitian_eigmax(hermitize(g));
    return std::sqrt(std::max(0.0, lam));
}

ComplexMatrix projector_sum(const std::vector<ComplexMatrix>& basis_matrices,
                            const std::vector<std::vector<int>>& selections) {
    if (basis_matrices.empty()) throw DimensionError("projector_sum needs at least one basis");
    if (basis_matrices.size() != selections.size()) {
        throw DimensionError("projector_sum needs one index set per basis");
    }
    const int d = basis_matrices.front().rows();
    for (const ComplexMatrix& b : basis_matrices) {
        if (b.rows() != d || b.cols() != d) {
            throw DimensionError("projector_sum bases must share one dimension");
        }
    }
    ComplexMatrix sum(d, d);
    for (std::size_t l = 0; l < basis_matrices.size(); ++l) {
        const ComplexMatrix& b = basis_matrices[l];
        for (int j : selections[l]) {
            if (j < 0 || j >= d) throw DimensionError("projector index out of range");
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) sum(r, c) += b(r, j) * std::conj(b(c, j));
        }
    }
    return sum;
}

} // namespace mur
