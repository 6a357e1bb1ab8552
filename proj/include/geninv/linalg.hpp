#pragma once

#include "geninv/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace geninv {

// Reduced row echelon form together with the invertible row transform that
// produced it: transform * input == rref, exactly.
struct RrefResult {
    Matrix rref;
    std::vector<std::size_t> pivotCols;
    std::size_t rank = 0;
    Matrix transform;
};

// Deterministic Gauss-Jordan: leftmost pivot column, topmost nonzero row,
// exact division with immediate normalization.
RrefResult rrefRank(const Matrix& a);

std::size_t rankOf(const Matrix& a);

enum class SolveStatus { Unique, Infinite, NoSolution };

// Full solution set of A*X = B, column by column. The particular solution
// sets every free variable to zero; nullBasis spans the homogeneous
// solutions of A*x = 0 (each element is a column vector).
struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    std::optional<Matrix> particular;
    std::vector<Matrix> nullBasis;
};

SolveResult solveGeneral(const Matrix& a, const Matrix& b);

// Exact inverse; throws SingularMatrix when rank < n.
Matrix inverse(const Matrix& a);

// A = F*G with F the pivot columns of A (full column rank) and G the
// nonzero rows of rref(A) (full row rank). Throws ZeroMatrix for A == 0.
std::pair<Matrix, Matrix> fullRankFactorize(const Matrix& a);

// Column-space inclusion R(u) <= R(v), decided exactly via ranks.
bool colSpaceIncluded(const Matrix& u, const Matrix& v);
bool colSpaceEqual(const Matrix& u, const Matrix& v);

// Row-space inclusion with plain (unconjugated) transpose:
// R(u^T) <= R(v^T), i.e. every row of u lies in the row span of v.
bool rowSpaceIncludedPlain(const Matrix& u, const Matrix& v);
bool rowSpaceEqualPlain(const Matrix& u, const Matrix& v);

// Basis of the right null space {x : A*x = 0} as columns; empty when A has
// full column rank.
std::vector<Matrix> nullSpaceBasis(const Matrix& a);

// Hermitian positive definiteness via leading principal minors, exact.
bool isPositiveDefinite(const Matrix& a);

// Exact determinant (Gaussian elimination with rational division).
Scalar determinant(const Matrix& a);

} // namespace geninv
