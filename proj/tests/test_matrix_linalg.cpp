#include "doctest.h"

#include "geninv/linalg.hpp"
#include "geninv/sampler.hpp"
#include "test_support.hpp"

using namespace geninv;
using geninv::testsupport::cplx;
using geninv::testsupport::mat;

TEST_CASE("matrix basics: arithmetic, transpose involution, concatenation") {
    Matrix a = mat({{"1", "2"}, {"3", "4"}});
    Matrix b = mat({{"0", "1"}, {"1", "0"}});
    CHECK(a + b - b == a);
    CHECK(a * Matrix::identity(2) == a);
    CHECK((a * b)(0, 0) == Scalar(2));

    Matrix c(2, 2);
    c(0, 1) = cplx("1", "1");
    c(1, 0) = cplx("0", "-2");
    CHECK(c.conjTranspose().conjTranspose() == c);
    CHECK(c.transpose()(1, 0) == cplx("1", "1"));
    CHECK(c.conjTranspose()(1, 0) == cplx("1", "-1"));
    CHECK_FALSE(c.isHermitian());

    Matrix h(2, 2);
    h(0, 0) = Scalar(2);
    h(0, 1) = cplx("1", "3");
    h(1, 0) = cplx("1", "-3");
    h(1, 1) = Scalar(-1);
    CHECK(h.isHermitian());

    CHECK(a.hcat(b).cols() == 4);
    CHECK(a.vcat(b).rows() == 4);
    CHECK_THROWS_AS(a * Matrix(3, 3), DimensionMismatch);
}

TEST_CASE("vec and kron satisfy the vectorization identity") {
    Matrix a = mat({{"1", "2"}, {"0", "1"}});
    Matrix x = mat({{"1", "-1"}, {"2", "1/2"}});
    Matrix b = mat({{"3", "0"}, {"1", "1"}});
    // vec(A X B) == (B^T kron A) vec(X)
    CHECK(vec(a * x * b) == kron(b.transpose(), a) * vec(x));
}

TEST_CASE("rref on the identity is trivial") {
    RrefResult r = rrefRank(Matrix::identity(2));
    CHECK(r.rank == 2);
    CHECK(r.rref == Matrix::identity(2));
    CHECK(r.transform == Matrix::identity(2));
}

TEST_CASE("rref of a rank-one matrix records the pivot") {
    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    RrefResult r = rrefRank(a);
    CHECK(r.rank == 1);
    REQUIRE(r.pivotCols.size() == 1);
    CHECK(r.pivotCols[0] == 0);
    CHECK(r.transform * a == r.rref);
}

TEST_CASE("rref of the three-by-three fixture has rank two") {
    Matrix a = mat({{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "0"}});
    CHECK(rrefRank(a).rank == 2);
}

TEST_CASE("solveGeneral: unique, underdetermined and inconsistent systems") {
    Matrix id2 = Matrix::identity(2);
    SolveResult unique = solveGeneral(id2, id2);
    CHECK(unique.status == SolveStatus::Unique);
    CHECK(*unique.particular == id2);

    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    SolveResult infinite = solveGeneral(a, a);
    CHECK(infinite.status == SolveStatus::Infinite);
    CHECK(*infinite.particular == mat({{"1", "1"}, {"0", "0"}}));
    CHECK(a * *infinite.particular == a);
    REQUIRE(infinite.nullBasis.size() == 1);
    CHECK((a * infinite.nullBasis[0]).isZero());

    SolveResult none = solveGeneral(a, id2);
    CHECK(none.status == SolveStatus::NoSolution);
}

TEST_CASE("inverse matches hand values and rejects singular input") {
    Matrix d = Matrix::diagonal({Scalar(1), Scalar(2), Scalar(1)});
    Matrix dInv = inverse(d);
    CHECK(dInv == Matrix::diagonal({Scalar(1), Scalar(Rational(1, 2)), Scalar(1)}));

    CHECK(inverse(Matrix::identity(4)) == Matrix::identity(4));

    Matrix q = mat({{"0.5", "0.5"}, {"0.3", "0.7"}});
    CHECK(determinant(q) == Scalar(Rational(1, 5)));
    Matrix qInv = inverse(q);
    CHECK(q * qInv == Matrix::identity(2));
    CHECK(qInv == mat({{"7/2", "-5/2"}, {"-3/2", "5/2"}}));

    CHECK_THROWS_AS(inverse(mat({{"1", "1"}, {"0", "0"}})), SingularMatrix);
    CHECK_THROWS_AS(inverse(mat({{"1", "1", "1"}, {"0", "0", "0"}})), NotSquare);
}

TEST_CASE("full-rank factorization on fixtures") {
    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    auto [f, g] = fullRankFactorize(a);
    CHECK(f == mat({{"1"}, {"0"}}));
    CHECK(g == mat({{"1", "1"}}));
    CHECK(f * g == a);

    Matrix id3 = Matrix::identity(3);
    auto [f3, g3] = fullRankFactorize(id3);
    CHECK(f3 == id3);
    CHECK(g3 == id3);

    Matrix b = mat({{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "0"}});
    auto [fb, gb] = fullRankFactorize(b);
    CHECK(fb == mat({{"1", "0"}, {"0", "1"}, {"0", "0"}}));
    CHECK(gb == mat({{"1", "0", "1"}, {"0", "1", "0"}}));
    CHECK(fb * gb == b);

    CHECK_THROWS_AS(fullRankFactorize(Matrix(2, 2)), ZeroMatrix);
}

TEST_CASE("range and row-space predicates on plain examples") {
    Matrix a = mat({{"1", "0"}, {"0", "0"}});
    Matrix b = Matrix::identity(2);
    CHECK(colSpaceIncluded(a, b));
    CHECK_FALSE(colSpaceIncluded(b, a));
    CHECK(colSpaceEqual(a, a));
    CHECK(rowSpaceIncludedPlain(a, b));
    CHECK(rowSpaceEqualPlain(b, b));
}

TEST_CASE("positive definiteness via exact principal minors") {
    CHECK(isPositiveDefinite(Matrix::identity(3)));
    CHECK_FALSE(isPositiveDefinite(mat({{"-1", "0"}, {"0", "1"}})));
    CHECK_FALSE(isPositiveDefinite(mat({{"1", "2"}, {"0", "1"}}))); // not Hermitian
    Matrix h(2, 2);
    h(0, 0) = Scalar(2);
    h(0, 1) = cplx("0", "1");
    h(1, 0) = cplx("0", "-1");
    h(1, 1) = Scalar(1);
    CHECK(isPositiveDefinite(h)); // det = 2 - 1 = 1 > 0
}

TEST_CASE("property: rref transform and ranks on random matrices") {
    SplitMix64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng.below(6);
        std::size_t cols = 1 + rng.below(6);
        Matrix a = randomMatrix(rng, rows, cols, 3);
        RrefResult r = rrefRank(a);
        CHECK(r.transform * a == r.rref);
        CHECK(r.rank == rankOf(a.conjTranspose()));
        CHECK(rankOf(r.transform) == rows); // transform invertible
        for (std::size_t k = 0; k < r.pivotCols.size(); ++k) {
            CHECK(r.rref(k, r.pivotCols[k]) == Scalar(1));
        }
    }
}

TEST_CASE("property: factorization ranks and Gram invertibility") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.below(5);
        std::size_t cols = 1 + rng.below(5);
        Matrix a = randomMatrix(rng, rows, cols, 3);
        if (a.isZero()) continue;
        auto [f, g] = fullRankFactorize(a);
        CHECK(f * g == a);
        std::size_t r = rankOf(a);
        CHECK(rankOf(f) == r);
        CHECK(rankOf(g) == r);
        CHECK_NOTHROW(inverse(g * g.conjTranspose()));
        CHECK_NOTHROW(inverse(f.conjTranspose() * f));
    }
}

TEST_CASE("property: solveGeneral round trips and null-space closure") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.below(5);
        std::size_t cols = 1 + rng.below(5);
        Matrix a = randomMatrix(rng, rows, cols, 3);
        Matrix xTrue = randomMatrix(rng, cols, 2, 3);
        Matrix b = a * xTrue;
        SolveResult sol = solveGeneral(a, b);
        REQUIRE(sol.status != SolveStatus::NoSolution);
        CHECK(a * *sol.particular == b);
        Matrix shifted = *sol.particular;
        for (const auto& v : sol.nullBasis) {
            CHECK((a * v).isZero());
            for (std::size_t i = 0; i < shifted.rows(); ++i) shifted(i, 0) += v(i, 0);
        }
        CHECK(a * shifted == b);
    }
}

TEST_CASE("property: inverse of elementary products") {
    SplitMix64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng.below(5);
        Matrix a = randomInvertible(rng, n, 3);
        Matrix inv = inverse(a);
        CHECK(a * inv == Matrix::identity(n));
        CHECK(inv * a == Matrix::identity(n));
    }
}
