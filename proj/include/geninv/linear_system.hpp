#pragma once

#include "geninv/linalg.hpp"
#include "geninv/matrix.hpp"

#include <optional>
#include <vector>

namespace geninv {

// One summand of a matrix expression that is real-linear in an unknown X:
// either left * X * right or left * X^* * right (^* = conjugate transpose).
struct LinearTerm {
    Matrix left;
    Matrix right;
    bool conjTransposed = false;
};

// residual(X) = sum of terms + constant; a constraint is residual(X) == 0.
struct MatrixEquation {
    std::vector<LinearTerm> terms;
    Matrix constant;
};

// Affine family X(Z) = base + sum of terms applied to a parameter Z.
struct LinearFamily {
    Matrix base;
    std::vector<LinearTerm> terms;
    std::size_t zRows = 0;
    std::size_t zCols = 0;
};

// Affine solution set over the real rationals: every solution is
// particular + a real-linear combination of the basis directions.
struct AffineSolution {
    bool feasible = false;
    std::optional<Matrix> particular;
    std::vector<Matrix> basis;

    bool unique() const { return feasible && basis.empty(); }
    // particular + sum of all basis directions; a deterministic second
    // representative for cross-checks.
    Matrix secondRepresentative() const;
};

Matrix evalEquation(const MatrixEquation& eq, const Matrix& x);
Matrix evalFamily(const LinearFamily& family, const Matrix& z);

// Solves the conjunction of the constraints for an xRows x xCols unknown by
// splitting into a real-rational linear system over the entry parts.
AffineSolution solveMatrixEquations(const std::vector<MatrixEquation>& equations,
                                    std::size_t xRows, std::size_t xCols);

// Rewrites a constraint on X as a constraint on the parameter Z of a family.
MatrixEquation substitute(const MatrixEquation& eqInX, const LinearFamily& family);

// True when every basis direction of `solution` maps to the zero matrix
// through the family, i.e. the constrained family describes a single X.
bool familyImageIsPoint(const LinearFamily& family, const AffineSolution& solution);

// --- constraint builders -------------------------------------------------

// A * X * A - A == 0
MatrixEquation eqInner(const Matrix& a);
// X * A^2 - A == 0
MatrixEquation eqLeftCore(const Matrix& a);
// A^2 * X - A == 0
MatrixEquation eqRightCore(const Matrix& a);
// (W * A * X)^* - W * A * X == 0
MatrixEquation eqHermitianWAX(const Matrix& w, const Matrix& a);
// (W * X * A)^* - W * X * A == 0
MatrixEquation eqHermitianWXA(const Matrix& w, const Matrix& a);
// C * X * D - E == 0
MatrixEquation eqProduct(Matrix c, Matrix d, Matrix e);
// C * X == 0 with C = coeff
MatrixEquation eqLeftAnnihilate(Matrix coeff, std::size_t xRows, std::size_t xCols);
// X * C == 0
MatrixEquation eqRightAnnihilate(Matrix coeff, std::size_t xRows, std::size_t xCols);

// --- families ------------------------------------------------------------

// All members of A{6,7} for an index <= 1 matrix with group inverse g:
// X = g + (g*A) Z (I - A*g).
LinearFamily coreCandidateFamily(const Matrix& a, const Matrix& groupInv);
// All members of A{8,9}: X = g + (I - A*g) Z (A*g).
LinearFamily dualCoreCandidateFamily(const Matrix& a, const Matrix& groupInv);
// All idempotents P with R(P) = R(base projector): P = P0 + P0 Z (I - P0).
LinearFamily projectorFamilySameRange(const Matrix& p0);
// All idempotents Q with the row space of q0: Q = Q0 + (I - Q0) Z Q0.
LinearFamily projectorFamilySameRowSpace(const Matrix& q0);
// All inner inverses of A: X = pinv + V - (pinv*A) V (A*pinv).
LinearFamily innerInverseFamily(const Matrix& a, const Matrix& pinv);

} // namespace geninv
