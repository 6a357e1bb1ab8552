#pragma once

#include "geninv/equations.hpp"
#include "geninv/geninv.hpp"
#include "geninv/linear_system.hpp"
#include "geninv/matrix.hpp"

#include <complex>
#include <optional>
#include <set>
#include <vector>

namespace geninv {

// Every theorem hypothesizes Hermitian weights; AllowNonHermitian exists to
// reproduce definition-level examples with non-Hermitian weights, where only
// the raw equations are checked and uniqueness cross-checks are suppressed.
enum class WeightPolicy { RequireHermitian, AllowNonHermitian };

class WeightedProblem {
public:
    static WeightedProblem make(Matrix a, std::optional<Matrix> m, std::optional<Matrix> n,
                                WeightPolicy policy = WeightPolicy::RequireHermitian);

    const Matrix& a() const { return a_; }
    const Matrix& m() const;
    const Matrix& n() const;
    bool hasM() const { return m_.has_value(); }
    bool hasN() const { return n_.has_value(); }
    WeightPolicy policy() const { return policy_; }

private:
    WeightedProblem(Matrix a, std::optional<Matrix> m, std::optional<Matrix> n, WeightPolicy policy)
        : a_(std::move(a)), m_(std::move(m)), n_(std::move(n)), policy_(policy) {}

    Matrix a_;
    std::optional<Matrix> m_;
    std::optional<Matrix> n_;
    WeightPolicy policy_;
};

enum class NotExistsReason { IndexTooHigh, FeasibilityEmpty, IdempotentTestFailed };

const char* notExistsReasonName(NotExistsReason reason);

struct ExistenceOutcome {
    std::optional<Matrix> witness;
    std::optional<NotExistsReason> reason;

    bool exists() const { return witness.has_value(); }

    static ExistenceOutcome found(Matrix w) { return {std::move(w), std::nullopt}; }
    static ExistenceOutcome missing(NotExistsReason r) { return {std::nullopt, r}; }
};

// Affine solution set of the conjunction of linear defining equations for an
// n x m candidate X. Allowed tags: 1, 3M, 4N, 6, 8 (the ones linear in X).
AffineSolution solveLinearPenrose(const Matrix& a, const std::set<EquationTag>& linearTags,
                                  const std::optional<Matrix>& m = std::nullopt,
                                  const std::optional<Matrix>& n = std::nullopt);

// M-weighted core inverse: the unique X with (MAX)^* = MAX, X A^2 = A,
// A X^2 = X. Requires index(A) <= 1 and a nonempty {1,3M} class.
ExistenceOutcome mWeightedCore(const WeightedProblem& problem);

// N-weighted dual core inverse: (NXA)^* = NXA, A^2 X = A, X^2 A = X.
ExistenceOutcome nWeightedDualCore(const WeightedProblem& problem);

// Generalized weighted Moore-Penrose inverse: equations 1, 2, 3M, 4N.
// May not exist for merely Hermitian invertible weights; always exists for
// positive definite ones.
ExistenceOutcome weightedMp(const WeightedProblem& problem);

// Similarity transform pairing the weighted core inverse of A with the
// weighted dual core inverse of b() = M^-1 A^* M, and back.
struct DualityTransform {
    Matrix b;
    Matrix m;
    Matrix mInv;

    Matrix pullback(const Matrix& y) const { return mInv * y.conjTranspose() * m; }
};

DualityTransform dualityTransform(const Matrix& a, const Matrix& m);

enum class PairFlavor { CoreFlavor, DualFlavor, MpFlavor };

struct IdempotentPair {
    Matrix p;
    Matrix q;
};

// The projector pair attached to each weighted inverse; idempotency, the
// Hermitian products and the range identities are rechecked exactly.
IdempotentPair idempotentPair(const WeightedProblem& problem, PairFlavor flavor);

struct ClauseValue {
    std::string name;
    bool value = false;
};

struct WeightedEpReport {
    bool weightedEp = false; // A^+_{M,M} exists and equals the group inverse
    std::vector<ClauseValue> clauses;
};

// Weighted-EP test with respect to (M, M), plus the independent range and
// existence predicates the equivalence theorems relate to it.
WeightedEpReport isWeightedEp(const WeightedProblem& problem);

// Uniqueness oracle: solve the linear part of the defining equations over an
// affine parametrization, intersect with the quadratic equation by exact
// linearization, and certify the result is a single point. Returns the
// solution set together with the certificate outcome.
struct UniquenessOracle {
    bool applicable = false; // quadratic remainder vanished on the final set
    AffineSolution solutions;
};

UniquenessOracle uniqueCoreSolutions(const Matrix& a, const std::optional<Matrix>& m);
UniquenessOracle uniqueDualCoreSolutions(const Matrix& a, const std::optional<Matrix>& n);

// Floating fast path for a {1,3M} member when M is positive definite:
// X = (R A)^+ R with M = R^* R via binary64 Cholesky. Never used by the
// exact computations; provided for the floating verifier only.
struct FloatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::complex<double>> entries;
};

std::optional<FloatMatrix> floatOneThreeM(const Matrix& a, const Matrix& m);

// Exact rationalization of a binary64 matrix (doubles are dyadic rationals).
Matrix rationalize(const FloatMatrix& x);

} // namespace geninv
