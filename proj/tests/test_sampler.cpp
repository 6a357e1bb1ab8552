#include "doctest.h"

#include "geninv/geninv.hpp"
#include "geninv/matrix_io.hpp"
#include "geninv/sampler.hpp"

using namespace geninv;

TEST_CASE("splitmix64 matches the pinned reference stream") {
    // Reference values for seed 1234567 under the standard splitmix64.
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ULL);
    CHECK(rng.next() == 3203168211198807973ULL);
    CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("identical specs produce bitwise-identical samples") {
    for (SampleKind kind : {SampleKind::IndexOne, SampleKind::HermitianInvertible,
                            SampleKind::PositiveDefinite, SampleKind::RationalUnitary,
                            SampleKind::Invertible}) {
        SampleSpec spec;
        spec.n = 4;
        spec.r = 2;
        spec.seed = 99;
        spec.kind = kind;
        Matrix first = sample(spec);
        Matrix second = sample(spec);
        CHECK(canonicalMatrixString(first) == canonicalMatrixString(second));
    }
}

TEST_CASE("index-one sampler hits every requested rank") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t r = 0; r <= n; ++r) {
            SampleSpec spec;
            spec.n = n;
            spec.r = r;
            spec.seed = 31 * n + r;
            spec.kind = SampleKind::IndexOne;
            Matrix a = sample(spec);
            CHECK(rankOf(a) == r);
            CHECK(index(a).k <= 1);
            if (r > 0 && r < n) {
                IndexResult idx = index(a);
                CHECK(idx.rankChain[0] == n);
                CHECK(idx.rankChain[1] == r);
            }
        }
    }
}

TEST_CASE("invertible samples are invertible at rank 2 as well") {
    SampleSpec spec;
    spec.n = 2;
    spec.r = 2;
    spec.kind = SampleKind::IndexOne;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        spec.seed = seed;
        CHECK(index(sample(spec)).k == 0);
    }
}

TEST_CASE("hermitian, positive definite and unitary samples satisfy their contracts") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        SampleSpec spec;
        spec.n = 3;
        spec.seed = seed;

        spec.kind = SampleKind::HermitianInvertible;
        Matrix h = sample(spec);
        CHECK(h.isHermitian());
        CHECK(rankOf(h) == 3);

        spec.kind = SampleKind::PositiveDefinite;
        CHECK(isPositiveDefinite(sample(spec)));

        spec.kind = SampleKind::RationalUnitary;
        Matrix u = sample(spec);
        CHECK((u.conjTranspose() * u).isIdentity());
        CHECK((u * u.conjTranspose()).isIdentity());
    }
}

TEST_CASE("indefinite Hermitian weights do occur in the stream") {
    int indefinite = 0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SampleSpec spec;
        spec.n = 3;
        spec.seed = seed;
        spec.kind = SampleKind::HermitianInvertible;
        if (!isPositiveDefinite(sample(spec))) ++indefinite;
    }
    CHECK(indefinite > 0);
}

TEST_CASE("sampler rejects invalid specs") {
    SampleSpec spec;
    spec.n = 2;
    spec.r = 5;
    spec.kind = SampleKind::IndexOne;
    CHECK_THROWS_AS(sample(spec), InvalidSpec);
    spec.n = 0;
    CHECK_THROWS_AS(sample(spec), InvalidSpec);
}

TEST_CASE("reverse-order-law pairs hit their hypotheses") {
    SUBCASE("constructive product conditions always hold") {
        for (std::uint64_t seed = 0; seed < 12; ++seed) {
            RolSample s44 = sampleRolPair(TheoremId::ROL4_4, 3, seed);
            REQUIRE_FALSE(s44.exhausted);
            CHECK(s44.a.pow(2) == s44.b * s44.a);
            CHECK(rolHypothesisHolds(TheoremId::ROL4_4, s44.a, s44.b, s44.weight));

            RolSample s45 = sampleRolPair(TheoremId::ROL4_5, 3, seed);
            REQUIRE_FALSE(s45.exhausted);
            CHECK(s45.b.pow(2) == s45.b * s45.a);
            CHECK(rolHypothesisHolds(TheoremId::ROL4_5, s45.a, s45.b, s45.weight));
        }
    }

    SUBCASE("rejection-based samplers release validated instances") {
        for (TheoremId id : {TheoremId::ROL4_1, TheoremId::ROL4_2, TheoremId::ROL4_3,
                             TheoremId::ROL4_6, TheoremId::ROL4_7}) {
            for (std::uint64_t seed = 0; seed < 6; ++seed) {
                RolSample s = sampleRolPair(id, 2, seed);
                if (!s.exhausted) CHECK(rolHypothesisHolds(id, s.a, s.b, s.weight));
                CHECK(s.attempts >= 1);
            }
        }
    }

    SUBCASE("pair sampling is reproducible") {
        RolSample first = sampleRolPair(TheoremId::ROL4_4, 3, 2718);
        RolSample second = sampleRolPair(TheoremId::ROL4_4, 3, 2718);
        CHECK(canonicalMatrixString(first.a) == canonicalMatrixString(second.a));
        CHECK(canonicalMatrixString(first.b) == canonicalMatrixString(second.b));
        CHECK(canonicalMatrixString(first.weight) == canonicalMatrixString(second.weight));
    }
}
