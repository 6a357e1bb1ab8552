#pragma once

#include "geninv/matrix.hpp"
#include "geninv/theorems.hpp"

#include <cstdint>
#include <optional>

namespace geninv {

// The project-wide random word generator. The algorithm is pinned so that
// corpora are reproducible everywhere: splitmix64 with the usual constants,
// state += 0x9E3779B97F4A7C15, z = state, z = (z ^ z>>30) * 0xBF58476D1CE4E5B9,
// z = (z ^ z>>27) * 0x94D049BB133111EB, output z ^ z>>31. Bounded draws use
// plain modulo; child streams are seeded with next() ^ (salt * golden ratio).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound); modulo bias is irrelevant here and the
    // simple rule keeps the stream portable.
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    long rangeInt(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

    SplitMix64 split(std::uint64_t salt) {
        return SplitMix64(next() ^ (salt * 0x9E3779B97F4A7C15ULL));
    }

private:
    std::uint64_t state_;
};

enum class SampleKind { IndexOne, HermitianInvertible, PositiveDefinite, RationalUnitary, Invertible };

struct SampleSpec {
    std::size_t n = 2;
    std::size_t r = 0; // target rank, used by IndexOne
    std::uint64_t seed = 0;
    long entryBound = 3;
    SampleKind kind = SampleKind::IndexOne;
};

// Deterministic structured generator; identical specs produce identical
// matrices. Every generator revalidates its own postcondition before
// returning (rank, Hermitian-ness, unitarity or index as appropriate).
Matrix sample(const SampleSpec& spec);

// Random scalar / matrix primitives for callers that keep their own stream.
Scalar randomScalar(SplitMix64& rng, long entryBound, bool allowComplex = true);
Matrix randomMatrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long entryBound,
                    bool allowComplex = true);
Matrix randomInvertible(SplitMix64& rng, std::size_t n, long entryBound);
Matrix randomIndexOne(SplitMix64& rng, std::size_t n, std::size_t r, long entryBound);
Matrix randomHermitianInvertible(SplitMix64& rng, std::size_t n, long entryBound);
Matrix randomPositiveDefinite(SplitMix64& rng, std::size_t n, long entryBound);
Matrix randomRationalUnitary(SplitMix64& rng, std::size_t n);
// Strictly upper triangular, hence nilpotent.
Matrix randomNilpotent(SplitMix64& rng, std::size_t n, long entryBound);

// A hypothesis-satisfying instance for one reverse-order-law theorem.
// Constructive where algebra permits (the product conditions of 4.4/4.5 are
// built to hold identically), bounded rejection elsewhere; the instance is
// validated against the verifier's own hypothesis predicates before release.
struct RolSample {
    Matrix a;
    Matrix b;
    Matrix weight;
    bool exhausted = false; // attempt cap hit; instance is the last candidate
    int attempts = 0;
};

RolSample sampleRolPair(TheoremId id, std::size_t n, std::uint64_t seed, long entryBound = 3,
                        int attemptCap = 500);

} // namespace geninv
