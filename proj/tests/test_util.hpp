// Shared oracle-side helpers for the test suites. Everything here is kept
// independent of the library's construction paths: unitaries come from
// Gram-Schmidt, quadratic forms are evaluated directly.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "mur/complex_matrix.hpp"
#include "mur/rng.hpp"

namespace murtest {

using mur::ComplexMatrix;
using mur::cplx;
using mur::Rng;

inline std::vector<cplx> random_vector(int n, Rng& rng) {
    std::vector<cplx> v(n);
    for (cplx& z : v) z = cplx{rng.normal(), rng.normal()};
    return v;
}

inline std::vector<cplx> random_unit_vector(int n, Rng& rng) {
    std::vector<cplx> v = random_vector(n, rng);
    double norm = 0.0;
    for (const cplx& z : v) norm += std::norm(z);
    norm = std::sqrt(norm);
    for (cplx& z : v) z /= norm;
    return v;
}

// Haar-ish unitary by twice-iterated Gram-Schmidt on a Gaussian matrix;
// plenty orthogonal for n <= 16 test fixtures.
inline ComplexMatrix random_unitary(int n, Rng& rng) {
    std::vector<std::vector<cplx>> cols(n);
    for (auto& c : cols) c = random_vector(n, rng);
    for (int pass = 0; pass < 2; ++pass) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                cplx ip = 0.0;
                for (int r = 0; r < n; ++r) ip += std::conj(cols[k][r]) * cols[j][r];
                for (int r = 0; r < n; ++r) cols[j][r] -= ip * cols[k][r];
            }
            double norm = 0.0;
            for (const cplx& z : cols[j]) norm += std::norm(z);
            norm = std::sqrt(norm);
            for (cplx& z : cols[j]) z /= norm;
        }
    }
    ComplexMatrix u(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) u(i, j) = cols[j][i];
    return u;
}

// Q diag(lambda) Q^dagger with a known spectrum.
inline ComplexMatrix hermitian_with_spectrum(const std::vector<double>& lambda,
                                             const ComplexMatrix& q) {
    const int n = q.rows();
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < n; ++k) s += q(i, k) * lambda[k] * std::conj(q(j, k));
            m(i, j) = s;
        }
    return m;
}

inline ComplexMatrix random_hermitian(int n, Rng& rng, double scale = 1.0) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m(i, i) = scale * rng.normal();
        for (int j = i + 1; j < n; ++j) {
            const cplx z{scale * rng.normal(), scale * rng.normal()};
            m(i, j) = z;
            m(j, i) = std::conj(z);
        }
    }
    return m;
}

inline ComplexMatrix rank1_projector(const std::vector<cplx>& v) {
    const int n = static_cast<int>(v.size());
    ComplexMatrix p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = v[i] * std::conj(v[j]);
    return p;
}

// v^dagger M v for a unit-norm v
inline double quadratic_form(const ComplexMatrix& m, const std::vector<cplx>& v) {
    cplx acc = 0.0;
    for (int i = 0; i < m.rows(); ++i) {
        cplx row = 0.0;
        for (int j = 0; j < m.cols(); ++j) row += m(i, j) * v[j];
        acc += std::conj(v[i]) * row;
    }
    return acc.real();
}

inline cplx inner(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    cplx ip = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) ip += std::conj(a[i]) * b[i];
    return ip;
}

} // namespace murtest
