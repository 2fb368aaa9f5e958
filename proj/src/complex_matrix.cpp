#include "mur/complex_matrix.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "mur/errors.hpp"

namespace mur {

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ <= 0 || cols_ <= 0) {
        throw InvalidMatrixError("matrix dimensions must be positive");
    }
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_) {
        throw InvalidMatrixError("entry count does not match rows*cols");
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    int n = rows_ < cols_ ? rows_ : cols_;
    for (int i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cplx& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

double ComplexMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j) {
            double d = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
            if (d > worst) worst = d;
        }
    return worst;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return rows_ == cols_ && hermiticity_defect() <= tol;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw DimensionError("matrix addition shape mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(double s) {
    for (cplx& z : entries_) z *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) throw DimensionError("matrix product shape mismatch");
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (int i = 0; i < lhs.rows(); ++i)
        for (int k = 0; k < lhs.cols(); ++k) {
            cplx a = lhs(i, k);
            if (a == cplx{}) continue;
            for (int j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

ComplexMatrix operator*(double s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexMatrix hermitize(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) throw InvalidMatrixError("cannot hermitize a non-square matrix");
    ComplexMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
    return out;
}

} // namespace mur
