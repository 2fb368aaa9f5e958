#pragma once

#include <complex>
#include <vector>

namespace mur {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Everything in this library is at most
// 16x16, so no effort is spent on blocking or expression templates.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {}
    ComplexMatrix(int rows, int cols, std::vector<cplx> entries);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<cplx>& entries() const { return entries_; }

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;

    // max_{jk} |M_jk - conj(M_kj)|; zero for exactly Hermitian input
    double hermiticity_defect() const;
    bool is_hermitian(double tol = 1e-12) const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(double s);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(double s, ComplexMatrix m);

// (M + M^dagger) / 2
ComplexMatrix hermitize(const ComplexMatrix& m);

} // namespace mur
