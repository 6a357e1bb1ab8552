#include "geninv/geninv.hpp"

namespace geninv {

namespace {

void requireExact(bool ok, const char* what) {
    if (!ok) throw InternalCheckFailure(std::string("defining-equation recheck failed: ") + what);
}

} // namespace

IndexResult index(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("index: matrix must be square");
    const std::size_t n = a.rows();
    IndexResult result;
    Matrix power = Matrix::identity(n);
    result.rankChain.push_back(n);
    std::size_t prev = n;
    for (std::size_t k = 1; k <= n + 1; ++k) {
        power = power * a;
        std::size_t r = rankOf(power);
        result.rankChain.push_back(r);
        if (r == prev) {
            result.k = k - 1;
            return result;
        }
        prev = r;
    }
    // Unreachable: ranks strictly decrease at most n times.
    throw InternalCheckFailure("index: rank chain failed to stabilize");
}

Matrix mpInverse(const Matrix& a) {
    if (a.isZero()) return Matrix::zero(a.cols(), a.rows());
    auto [f, g] = fullRankFactorize(a);
    Matrix x = g.conjTranspose() * inverse(g * g.conjTranspose()) *
               inverse(f.conjTranspose() * f) * f.conjTranspose();
    requireExact(a * x * a == a, "mp (1)");
    requireExact(x * a * x == x, "mp (2)");
    requireExact((a * x).isHermitian(), "mp (3)");
    requireExact((x * a).isHermitian(), "mp (4)");
    return x;
}

Matrix oneInverse(const Matrix& a) { return mpInverse(a); }

std::optional<Matrix> groupInverse(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("groupInverse: matrix must be square");
    if (a.isZero()) return Matrix::zero(a.rows(), a.cols());
    auto [f, g] = fullRankFactorize(a);
    Matrix gf = g * f;
    if (rankOf(gf) != gf.rows()) return std::nullopt; // index >= 2
    Matrix gfInv = inverse(gf);
    Matrix x = f * gfInv * gfInv * g;
    requireExact(a * x * a == a, "group (1)");
    requireExact(x * a * x == x, "group (2)");
    requireExact(a * x == x * a, "group (5)");
    return x;
}

Matrix drazinInverse(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("drazinInverse: matrix must be square");
    const std::size_t k = index(a).k;
    const std::size_t l = std::max<std::size_t>(k, 1);
    Matrix al = a.pow(static_cast<unsigned>(l));
    Matrix mid = oneInverse(a.pow(static_cast<unsigned>(2 * l + 1)));
    Matrix x = al * mid * al;
    requireExact(x * a.pow(static_cast<unsigned>(k + 1)) == a.pow(static_cast<unsigned>(k)),
                 "drazin (1^k)");
    requireExact(x * a * x == x, "drazin (2)");
    requireExact(a * x == x * a, "drazin (5)");
    return x;
}

std::optional<Matrix> coreInverse(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("coreInverse: matrix must be square");
    auto g = groupInverse(a);
    if (!g) return std::nullopt;
    Matrix x = (*g) * a * mpInverse(a);
    requireExact(x * a * a == a, "core (6)");
    requireExact(a * x * x == x, "core (7)");
    requireExact((a * x).isHermitian(), "core (3)");
    return x;
}

Matrix coreEpInverse(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("coreEpInverse: matrix must be square");
    const std::size_t l = std::max<std::size_t>(index(a).k, 1);
    Matrix ak = a.pow(static_cast<unsigned>(l));
    Matrix x = drazinInverse(a) * ak * mpInverse(ak);
    requireExact(x * a.pow(static_cast<unsigned>(l + 1)) == ak, "core-EP (6^k)");
    requireExact(a * x * x == x, "core-EP (7)");
    requireExact((a * x).isHermitian(), "core-EP (3)");
    return x;
}

Matrix wWeightedCoreEp(const Matrix& a, const Matrix& w) {
    if (w.rows() != a.cols() || w.cols() != a.rows())
        throw DimensionMismatch("wWeightedCoreEp: weight must be cols(A) x rows(A)");
    Matrix wa = w * a;
    Matrix aw = a * w;
    Matrix inner = coreEpInverse(wa);
    Matrix x = a * inner * inner;
    const std::size_t k = std::max(index(aw).k, index(wa).k);
    const std::size_t kk = std::max<std::size_t>(k, 1);
    requireExact(x * w * aw.pow(static_cast<unsigned>(kk + 1)) == aw.pow(static_cast<unsigned>(kk)),
                 "weighted core-EP (6^k)");
    Matrix wx = w * x;
    requireExact(a * wx * wx == x, "weighted core-EP (7)");
    requireExact((w * a * w * x).isHermitian(), "weighted core-EP (3)");
    return x;
}

} // namespace geninv
