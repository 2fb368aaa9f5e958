#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mur/errors.hpp"
#include "mur/numkernel.hpp"
#include "mur/quantum.hpp"
#include "test_util.hpp"

using namespace mur;
using namespace murtest;

TEST_CASE("eigmax of the identity is 1") {
    CHECK(hermitian_eigmax(ComplexMatrix::identity(4)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two overlapping projectors: |0><0| + |+><+| has eigmax 1 + 1/sqrt(2)") {
    const double r = 1.0 / std::sqrt(2.0);
    const ComplexMatrix p = rank1_projector({1.0, 0.0});
    const ComplexMatrix q = rank1_projector({r, r});
    CHECK(hermitian_eigmax(p + q) == doctest::Approx(1.0 + r).epsilon(1e-10));
}

TEST_CASE("construct-then-recover: known spectrum survives the round trip") {
    Rng rng(11);
    const ComplexMatrix q = random_unitary(3, rng);
    const ComplexMatrix m = hermitian_with_spectrum({3.0, 1.0, -2.0}, q);
    CHECK(std::abs(hermitian_eigmax(m) - 3.0) < 1e-10);
    CHECK(std::abs(hermitian_eigmin(m) + 2.0) < 1e-10);
}

TEST_CASE("construct-then-recover across dimensions 1..16") {
    Rng rng(12);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(16));
        std::vector<double> spectrum(n);
        double top = -1e9;
        for (double& l : spectrum) {
            l = 10.0 * rng.normal();
            top = std::max(top, l);
        }
        const ComplexMatrix q = random_unitary(n, rng);
        const ComplexMatrix m = hermitian_with_spectrum(spectrum, q);
        CHECK(std::abs(hermitian_eigmax(m) - top) < 1e-10);
    }
}

TEST_CASE("eigmax returns a genuine eigenvector") {
    Rng rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(15));
        const ComplexMatrix m = random_hermitian(n, rng, 2.0);
        const EigMaxResult r = hermitian_eigmax_with_vector(m);
        double norm = 0.0;
        for (const cplx& z : r.vector) norm += std::norm(z);
        CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(quadratic_form(m, r.vector) == doctest::Approx(r.value).epsilon(1e-9));
    }
}

TEST_CASE("two-projector law: eigmax(P+Q) = 1 + |<a|b>|") {
    Rng rng(14);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const auto a = random_unit_vector(n, rng);
        const auto b = random_unit_vector(n, rng);
        const double c = std::abs(inner(a, b));
        const double lam = hermitian_eigmax(rank1_projector(a) + rank1_projector(b));
        CHECK(std::abs(lam - (1.0 + c)) < 1e-9);
    }
}

TEST_CASE("eigmax is invariant under unitary conjugation") {
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        const ComplexMatrix m = random_hermitian(n, rng);
        const ComplexMatrix u = random_unitary(n, rng);
        const ComplexMatrix conj = u * m * u.adjoint();
        CHECK(std::abs(hermitian_eigmax(hermitize(conj)) - hermitian_eigmax(m)) < 1e-9);
    }
}

TEST_CASE("Rayleigh quotient never exceeds eigmax") {
    Rng rng(16);
    const ComplexMatrix m = random_hermitian(8, rng, 3.0);
    const double lam = hermitian_eigmax(m);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto v = random_unit_vector(8, rng);
        CHECK(quadratic_form(m, v) <= lam + 1e-9);
    }
}

TEST_CASE("largest singular value basics") {
    CHECK(largest_singular_value(ComplexMatrix(1, 1, {cplx{0.5, 0.0}})) ==
          doctest::Approx(0.5).epsilon(1e-12));
    const ComplexMatrix col(2, 1, {cplx{0.5, 0.0}, cplx{0.0, 0.5}});
    CHECK(largest_singular_value(col) == doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK(largest_singular_value(ComplexMatrix(3, 2)) == doctest::Approx(0.0));
}

TEST_CASE("largest singular value is invariant under permutations and unitaries") {
    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = 2 + static_cast<int>(rng.below(5));
        const int b = 2 + static_cast<int>(rng.below(5));
        ComplexMatrix m(a, b);
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) m(i, j) = cplx{rng.normal(), rng.normal()};
        const double sigma = largest_singular_value(m);

        // swap two rows
        ComplexMatrix swapped = m;
        for (int j = 0; j < b; ++j) std::swap(swapped(0, j), swapped(a - 1, j));
        CHECK(std::abs(largest_singular_value(swapped) - sigma) < 1e-9);

        const ComplexMatrix u = random_unitary(a, rng);
        CHECK(std::abs(largest_singular_value(u * m) - sigma) < 1e-9);
    }
}

TEST_CASE("projector_sum: single selection, completeness, trace") {
    const OrthonormalBasis& A = builtin_basis("A");
    const OrthonormalBasis& B = builtin_basis("B");

    const ComplexMatrix single = projector_sum({A.matrix()}, {{0}});
    CHECK(std::abs(single(0, 0) - cplx{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(single.trace() - cplx{1.0, 0.0}) < 1e-12);

    const ComplexMatrix full = projector_sum({A.matrix()}, {{0, 1, 2, 3}});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const cplx expected = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            CHECK(std::abs(full(i, j) - expected) < 1e-12);
        }

    const ComplexMatrix pair = projector_sum({A.matrix(), B.matrix()}, {{0}, {0}});
    CHECK(std::abs(pair.trace() - cplx{2.0, 0.0}) < 1e-12);
    CHECK(hermitian_eigmax(pair) == doctest::Approx(1.5).epsilon(1e-10));
}

TEST_CASE("error paths: invalid matrices are rejected") {
    CHECK_THROWS_AS(hermitian_eigmax(ComplexMatrix(2, 3)), InvalidMatrixError);

    ComplexMatrix notherm(2, 2);
    notherm(0, 1) = cplx{1.0, 0.0};
    notherm(1, 0) = cplx{0.5, 0.0};
    CHECK_THROWS_AS(hermitian_eigmax(notherm), InvalidMatrixError);

    CHECK_THROWS_AS(hermitian_eigmax(ComplexMatrix(17, 17)), InvalidMatrixError);

    const OrthonormalBasis& A = builtin_basis("A");
    CHECK_THROWS_AS(projector_sum({A.matrix()}, {{4}}), DimensionError);
    CHECK_THROWS_AS(projector_sum({A.matrix()}, {{0}, {1}}), DimensionError);
}
