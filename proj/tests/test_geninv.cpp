#include "doctest.h"

#include "geninv/equations.hpp"
#include "geninv/geninv.hpp"
#include "geninv/sampler.hpp"
#include "geninv/weighted.hpp"
#include "test_support.hpp"

using namespace geninv;
using geninv::testsupport::mat;

namespace {

const std::set<EquationTag> kPenrose{EquationTag::P1, EquationTag::P2, EquationTag::P3,
                                     EquationTag::P4};

} // namespace

TEST_CASE("index: identity, rank-one idempotent-like, nilpotent") {
    CHECK(index(Matrix::identity(3)).k == 0);

    IndexResult r1 = index(mat({{"1", "1"}, {"0", "0"}}));
    CHECK(r1.k == 1);
    CHECK(r1.rankChain == std::vector<std::size_t>{2, 1, 1});

    IndexResult r2 = index(mat({{"0", "1"}, {"0", "0"}}));
    CHECK(r2.k == 2);
    CHECK(r2.rankChain == std::vector<std::size_t>{2, 1, 0, 0});

    CHECK(index(Matrix(3, 3)).k == 1); // zero matrix

    CHECK_THROWS_AS(index(Matrix(2, 3)), NotSquare);
}

TEST_CASE("Moore-Penrose inverse on fixtures") {
    Matrix a = mat({{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "0"}});
    CHECK(mpInverse(a) == mat({{"1/2", "0", "0"}, {"0", "1", "0"}, {"1/2", "0", "0"}}));

    Matrix zero(2, 3);
    Matrix z = mpInverse(zero);
    CHECK(z.rows() == 3);
    CHECK(z.cols() == 2);
    CHECK(z.isZero());

    CHECK(mpInverse(Matrix::identity(2)) == Matrix::identity(2));
    CHECK(mpInverse(mat({{"2"}})) == mat({{"1/2"}}));
}

TEST_CASE("canonical inner inverse is the Moore-Penrose inverse") {
    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    Matrix x = oneInverse(a);
    CHECK(x == mat({{"1/2", "0"}, {"1/2", "0"}}));
    CHECK(a * x * a == a);
    CHECK(oneInverse(Matrix::identity(3)) == Matrix::identity(3));
}

TEST_CASE("group inverse existence tracks the index") {
    Matrix a = mat({{"1", "0", "1"}, {"0", "1", "0"}, {"0", "0", "0"}});
    auto g = groupInverse(a);
    REQUIRE(g.has_value());
    CHECK(*g == a);

    CHECK_FALSE(groupInverse(mat({{"0", "1"}, {"0", "0"}})).has_value());
    CHECK(*groupInverse(Matrix::identity(2)) == Matrix::identity(2));
    CHECK(groupInverse(Matrix(2, 2))->isZero());
}

TEST_CASE("Drazin inverse on nilpotent, identity and idempotent inputs") {
    CHECK(drazinInverse(mat({{"0", "1"}, {"0", "0"}})).isZero());
    CHECK(drazinInverse(Matrix::identity(3)) == Matrix::identity(3));
    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    CHECK(drazinInverse(a) == a);
}

TEST_CASE("core inverse: fixtures and nonexistence") {
    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    auto c = coreInverse(a);
    REQUIRE(c.has_value());
    CHECK(*c == mat({{"1", "0"}, {"0", "0"}}));
    CHECK(checkMembership(a, *c, {EquationTag::P6, EquationTag::P7, EquationTag::P3}));

    CHECK(*coreInverse(Matrix::identity(2)) == Matrix::identity(2));
    CHECK_FALSE(coreInverse(mat({{"0", "1"}, {"0", "0"}})).has_value());
}

TEST_CASE("core-EP inverse extends the core inverse") {
    Matrix nilpotent = mat({{"0", "1"}, {"0", "0"}});
    CHECK(coreEpInverse(nilpotent).isZero());
    CHECK(coreEpInverse(Matrix::identity(3)) == Matrix::identity(3));

    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    CHECK(coreEpInverse(a) == *coreInverse(a));
}

TEST_CASE("weighted core-EP inverse specializes to the core inverse at W = I") {
    Matrix a = mat({{"1", "1"}, {"0", "0"}});
    CHECK(wWeightedCoreEp(a, Matrix::identity(2)) == *coreInverse(a));
    CHECK(wWeightedCoreEp(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(2));
    CHECK_THROWS_AS(wWeightedCoreEp(Matrix(2, 3), Matrix(2, 3)), DimensionMismatch);
}

TEST_CASE("weighted core-EP inverse on rectangular inputs") {
    SplitMix64 rng(5150);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t m = 1 + rng.below(3);
        std::size_t n = 1 + rng.below(3);
        Matrix a = randomMatrix(rng, m, n, 2);
        Matrix w = randomMatrix(rng, n, m, 2);
        Matrix x = wWeightedCoreEp(a, w); // defining equations rechecked inside
        CHECK(x.rows() == m);
        CHECK(x.cols() == n);
    }
}

TEST_CASE("property: Penrose equations and involution of the MP inverse") {
    SplitMix64 rng(31415);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t rows = 1 + rng.below(5);
        std::size_t cols = 1 + rng.below(5);
        Matrix a = randomMatrix(rng, rows, cols, 3);
        Matrix x = mpInverse(a);
        CHECK(checkMembership(a, x, kPenrose));
        CHECK(mpInverse(x) == a);
    }
}

TEST_CASE("property: group inverse exists iff index at most one, with feasibility oracle") {
    SplitMix64 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng.below(4);
        Matrix a;
        switch (rng.below(3)) {
        case 0: a = randomIndexOne(rng, n, rng.below(n + 1), 3); break;
        case 1: a = randomNilpotent(rng, n, 3); break;
        default: a = randomMatrix(rng, n, n, 3); break;
        }
        bool closedForm = groupInverse(a).has_value();
        bool viaIndex = index(a).k <= 1;
        Matrix a2 = a.pow(2);
        bool viaX = solveGeneral(a2, a).status != SolveStatus::NoSolution;
        bool viaY = solveGeneral(a2.transpose(), a.transpose()).status != SolveStatus::NoSolution;
        CHECK(closedForm == viaIndex);
        CHECK(closedForm == (viaX && viaY));
    }
}

TEST_CASE("property: feasibility solutions reproduce the group inverse") {
    SplitMix64 rng(424242);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng.below(4);
        Matrix a = randomIndexOne(rng, n, rng.below(n + 1), 3);
        Matrix g = *groupInverse(a);
        Matrix a2 = a.pow(2);
        SolveResult sx = solveGeneral(a2, a);
        SolveResult sy = solveGeneral(a2.transpose(), a.transpose());
        REQUIRE(sx.status != SolveStatus::NoSolution);
        REQUIRE(sy.status != SolveStatus::NoSolution);
        Matrix x = *sx.particular;
        Matrix y = sy.particular->transpose();
        CHECK(a * x * x == g);
        CHECK(y * a * x == g);
        CHECK(y * y * a == g);
    }
}

TEST_CASE("property: Drazin and core-EP specialize at index <= 1") {
    SplitMix64 rng(8888);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 1 + rng.below(4);
        Matrix a = randomIndexOne(rng, n, rng.below(n + 1), 3);
        auto g = groupInverse(a);
        REQUIRE(g.has_value());
        CHECK(drazinInverse(a) == *g);
        auto c = coreInverse(a);
        REQUIRE(c.has_value());
        CHECK(coreEpInverse(a) == *c);
    }
}

TEST_CASE("property: core-EP equations hold for arbitrary index") {
    SplitMix64 rng(3333);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng.below(4);
        Matrix a = rng.chance(1, 2) ? randomNilpotent(rng, n, 3) : randomMatrix(rng, n, n, 3);
        std::size_t k = index(a).k;
        Matrix x = coreEpInverse(a);
        EquationContext ctx{std::nullopt, std::nullopt, std::max<std::size_t>(k, 1)};
        CHECK(checkMembership(a, x, {EquationTag::P6k, EquationTag::P7, EquationTag::P3}, ctx));
        Matrix d = drazinInverse(a);
        EquationContext ctxK{std::nullopt, std::nullopt, k};
        CHECK(checkMembership(a, d, {EquationTag::P1k, EquationTag::P2, EquationTag::P5}, ctxK));
    }
}

TEST_CASE("uniqueness oracle: the core inverse solution set is a single point") {
    SplitMix64 rng(220);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 1 + rng.below(3); // n <= 3
        Matrix a = rng.chance(1, 4) ? randomNilpotent(rng, n, 2)
                                    : randomIndexOne(rng, n, rng.below(n + 1), 2);
        UniquenessOracle oracle = uniqueCoreSolutions(a, std::nullopt);
        REQUIRE(oracle.applicable);
        auto closed = coreInverse(a);
        if (closed.has_value()) {
            REQUIRE(oracle.solutions.feasible);
            CHECK(oracle.solutions.unique());
            CHECK(*oracle.solutions.particular == *closed);
        } else {
            CHECK_FALSE(oracle.solutions.feasible);
        }
    }
}
