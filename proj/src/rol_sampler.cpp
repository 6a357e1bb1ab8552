#include "geninv/sampler.hpp"

#include "geninv/errors.hpp"
#include "geninv/weighted.hpp"

namespace geninv {

namespace {

// B differing from A only on the complement of R(A): keeps (B-A) A^{#}-side
// products zero, which is what the 4.1 and 4.4 hypotheses need.
Matrix perturbOffRange(SplitMix64& rng, const Matrix& a, long entryBound) {
    auto g = groupInverse(a);
    if (!g) return a;
    Matrix z = randomMatrix(rng, a.rows(), a.cols(), entryBound);
    return a + z * (Matrix::identity(a.rows()) - a * *g);
}

// A differing from B only off the row space of B: B(A - B) = 0 identically.
Matrix perturbOffRowSpace(SplitMix64& rng, const Matrix& b, long entryBound) {
    auto g = groupInverse(b);
    if (!g) return b;
    Matrix z = randomMatrix(rng, b.rows(), b.cols(), entryBound);
    return b + (Matrix::identity(b.rows()) - b * *g) * z;
}

Matrix hermitianAny(SplitMix64& rng, std::size_t n, long entryBound) {
    Matrix b = randomMatrix(rng, n, n, entryBound);
    return b + b.conjTranspose();
}

} // namespace

RolSample sampleRolPair(TheoremId id, std::size_t n, std::uint64_t seed, long entryBound,
                        int attemptCap) {
    if (!isReverseOrderLaw(id)) throw InvalidSpec("sampleRolPair requires a reverse-order-law id");
    if (n == 0) throw InvalidSpec("dimension must be positive");
    SplitMix64 rng(seed);

    RolSample out;
    for (int attempt = 0; attempt < attemptCap; ++attempt) {
        ++out.attempts;
        Matrix weight = randomPositiveDefinite(rng, n, entryBound);
        std::size_t r = static_cast<std::size_t>(rng.below(n + 1));

        Matrix a = Matrix::identity(n);
        Matrix b = Matrix::identity(n);
        switch (id) {
        case TheoremId::ROL4_1: {
            a = randomIndexOne(rng, n, r, entryBound);
            b = rng.chance(2, 5) || attempt > attemptCap / 2 ? a
                                                             : perturbOffRange(rng, a, entryBound);
            break;
        }
        case TheoremId::ROL4_2: {
            b = randomIndexOne(rng, n, r, entryBound);
            a = rng.chance(2, 5) || attempt > attemptCap / 2
                    ? b
                    : perturbOffRowSpace(rng, b, entryBound);
            break;
        }
        case TheoremId::ROL4_3: {
            a = randomIndexOne(rng, n, r, entryBound);
            b = rng.chance(1, 2) || attempt > attemptCap / 2 ? a
                                                             : perturbOffRange(rng, a, entryBound);
            break;
        }
        case TheoremId::ROL4_4: {
            a = randomIndexOne(rng, n, r, entryBound);
            b = attempt > attemptCap / 2 ? a : perturbOffRange(rng, a, entryBound);
            break;
        }
        case TheoremId::ROL4_5: {
            b = randomIndexOne(rng, n, r, entryBound);
            a = attempt > attemptCap / 2 ? b : perturbOffRowSpace(rng, b, entryBound);
            break;
        }
        case TheoremId::ROL4_6: {
            if (rng.chance(1, 2)) {
                b = randomRationalUnitary(rng, n);
                bool forceInvertible = rng.chance(1, 2) || attempt > 4;
                a = forceInvertible ? randomInvertible(rng, n, entryBound)
                                    : randomIndexOne(rng, n, r == n && n > 1 ? n - 1 : r,
                                                     entryBound);
            } else {
                a = randomRationalUnitary(rng, n);
                b = randomInvertible(rng, n, entryBound);
            }
            break;
        }
        case TheoremId::ROL4_7: {
            if (rng.chance(1, 2) || attempt > 4) {
                // Hermitian A with a polynomial second factor and identity
                // weight hits the range condition identically.
                weight = Matrix::identity(n);
                a = hermitianAny(rng, n, entryBound);
                switch (rng.below(3)) {
                case 0: b = a; break;
                case 1: b = a.pow(2); break;
                default: b = a.pow(2) + a; break;
                }
            } else {
                a = randomIndexOne(rng, n, r, entryBound);
                b = perturbOffRange(rng, a, entryBound);
            }
            break;
        }
        default:
            throw InvalidSpec("unhandled reverse-order-law id");
        }

        if (rolHypothesisHolds(id, a, b, weight)) {
            out.a = std::move(a);
            out.b = std::move(b);
            out.weight = std::move(weight);
            return out;
        }
        out.a = std::move(a);
        out.b = std::move(b);
        out.weight = std::move(weight);
    }
    out.exhausted = true;
    return out;
}

} // namespace geninv
