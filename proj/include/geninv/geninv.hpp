#pragma once

#include "geninv/linalg.hpp"
#include "geninv/matrix.hpp"

#include <optional>
#include <vector>

namespace geninv {

// Index of a square matrix: the smallest k with rank(A^k) == rank(A^{k+1}).
// rankChain holds [rank(A^0), rank(A^1), ..., rank(A^{k+1})].
struct IndexResult {
    std::size_t k = 0;
    std::vector<std::size_t> rankChain;
};

IndexResult index(const Matrix& a);

// Moore-Penrose inverse via full-rank factorization; total (zero matrices
// map to the zero matrix of transposed shape). The four defining equations
// are rechecked exactly before returning.
Matrix mpInverse(const Matrix& a);

// Canonical inner inverse (A*X*A == A). Returns the Moore-Penrose inverse.
Matrix oneInverse(const Matrix& a);

// Group inverse; exists exactly when index(a).k <= 1.
std::optional<Matrix> groupInverse(const Matrix& a);

// Drazin inverse, total on square matrices.
Matrix drazinInverse(const Matrix& a);

// Core inverse of an index <= 1 matrix.
std::optional<Matrix> coreInverse(const Matrix& a);

// Core-EP inverse, total on square matrices; agrees with the core inverse
// whenever the index is <= 1.
Matrix coreEpInverse(const Matrix& a);

// Weighted core-EP inverse of a rectangular A (m x n) with weight W (n x m).
Matrix wWeightedCoreEp(const Matrix& a, const Matrix& w);

} // namespace geninv
