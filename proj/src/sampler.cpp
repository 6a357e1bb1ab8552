#include "geninv/sampler.hpp"

#include "geninv/errors.hpp"
#include "geninv/geninv.hpp"
#include "geninv/linalg.hpp"

namespace geninv {

namespace {

Rational randomRational(SplitMix64& rng, long bound) {
    long num = rng.rangeInt(-bound, bound);
    long den = rng.rangeInt(1, bound);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

} // namespace

Scalar randomScalar(SplitMix64& rng, long entryBound, bool allowComplex) {
    Rational re = randomRational(rng, entryBound);
    if (allowComplex && rng.chance(1, 4)) return Scalar(re, randomRational(rng, entryBound));
    return Scalar(re);
}

Matrix randomMatrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long entryBound,
                    bool allowComplex) {
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = randomScalar(rng, entryBound, allowComplex);
    return out;
}

Matrix randomInvertible(SplitMix64& rng, std::size_t n, long entryBound) {
    if (n == 1) {
        Scalar v = randomScalar(rng, entryBound);
        while (v.isZero()) v = randomScalar(rng, entryBound);
        Matrix out(1, 1);
        out(0, 0) = v;
        return out;
    }
    // Product of elementary row operations applied to the identity; the
    // operation count is kept small so entries stay desk-sized.
    Matrix out = Matrix::identity(n);
    const std::size_t ops = 2 * n + 2;
    for (std::size_t t = 0; t < ops; ++t) {
        switch (rng.below(3)) {
        case 0: { // add lambda * row j to row i
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n);
            if (i == j) j = (j + 1) % n;
            Scalar lambda = randomScalar(rng, entryBound);
            for (std::size_t c = 0; c < n; ++c) out(i, c) += lambda * out(j, c);
            break;
        }
        case 1: { // swap rows
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n);
            if (i != j)
                for (std::size_t c = 0; c < n; ++c) std::swap(out(i, c), out(j, c));
            break;
        }
        default: { // scale a row by a nonzero rational
            std::size_t i = rng.below(n);
            Rational f = randomRational(rng, entryBound);
            while (f == 0) f = randomRational(rng, entryBound);
            Scalar factor{f};
            for (std::size_t c = 0; c < n; ++c) out(i, c) *= factor;
            break;
        }
        }
    }
    return out;
}

Matrix randomIndexOne(SplitMix64& rng, std::size_t n, std::size_t r, long entryBound) {
    if (r > n) throw InvalidSpec("target rank exceeds dimension");
    if (r == 0) return Matrix::zero(n, n);
    if (r == n) return randomInvertible(rng, n, entryBound);
    Matrix core = randomInvertible(rng, r, entryBound);
    Matrix s = randomInvertible(rng, n, entryBound);
    Matrix block(n, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) block(i, j) = core(i, j);
    return s * block * inverse(s);
}

Matrix randomHermitianInvertible(SplitMix64& rng, std::size_t n, long entryBound) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        Matrix b = randomMatrix(rng, n, n, entryBound);
        Matrix h = b + b.conjTranspose();
        if (rng.chance(1, 3)) {
            Rational shift = randomRational(rng, entryBound);
            Matrix scaledId = Matrix::identity(n).scaled(Scalar(shift));
            h = h - scaledId;
        }
        if (rankOf(h) == n) return h;
    }
    throw InvalidSpec("failed to sample an invertible Hermitian matrix");
}

Matrix randomPositiveDefinite(SplitMix64& rng, std::size_t n, long entryBound) {
    Matrix b = randomMatrix(rng, n, n, entryBound);
    return b.conjTranspose() * b + Matrix::identity(n);
}

Matrix randomRationalUnitary(SplitMix64& rng, std::size_t n) {
    // Signed permutation times embedded 2x2 rotations with the exact
    // Pythagorean entries 3/5 and 4/5.
    Matrix u(n, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i) u(i, perm[i]) = Scalar(rng.chance(1, 2) ? 1 : -1);

    if (n >= 2) {
        const Scalar c(Rational(3, 5)), s(Rational(4, 5));
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t i = rng.below(n);
            std::size_t j = rng.below(n);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            Matrix g = Matrix::identity(n);
            g(i, i) = c;
            g(i, j) = -s;
            g(j, i) = s;
            g(j, j) = c;
            u = u * g;
        }
    }
    return u;
}

Matrix randomNilpotent(SplitMix64& rng, std::size_t n, long entryBound) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) out(i, j) = randomScalar(rng, entryBound);
    return out;
}

Matrix sample(const SampleSpec& spec) {
    if (spec.n == 0 || spec.entryBound < 1) throw InvalidSpec("bad sample spec");
    SplitMix64 rng(spec.seed);
    switch (spec.kind) {
    case SampleKind::IndexOne: {
        Matrix a = randomIndexOne(rng, spec.n, spec.r, spec.entryBound);
        if (index(a).k > 1 || rankOf(a) != spec.r)
            throw InternalCheckFailure("index-one sampler postcondition");
        return a;
    }
    case SampleKind::HermitianInvertible: {
        Matrix h = randomHermitianInvertible(rng, spec.n, spec.entryBound);
        if (!h.isHermitian() || rankOf(h) != spec.n)
            throw InternalCheckFailure("hermitian sampler postcondition");
        return h;
    }
    case SampleKind::PositiveDefinite: {
        Matrix p = randomPositiveDefinite(rng, spec.n, spec.entryBound);
        if (!isPositiveDefinite(p)) throw InternalCheckFailure("pd sampler postcondition");
        return p;
    }
    case SampleKind::RationalUnitary: {
        Matrix u = randomRationalUnitary(rng, spec.n);
        if (!(u.conjTranspose() * u).isIdentity())
            throw InternalCheckFailure("unitary sampler postcondition");
        return u;
    }
    case SampleKind::Invertible: {
        Matrix a = randomInvertible(rng, spec.n, spec.entryBound);
        if (rankOf(a) != spec.n) throw InternalCheckFailure("invertible sampler postcondition");
        return a;
    }
    }
    throw InvalidSpec("unknown sample kind");
}

} // namespace geninv
