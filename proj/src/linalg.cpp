#include "geninv/linalg.hpp"

namespace geninv {

RrefResult rrefRank(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Matrix work = a;
    Matrix transform = Matrix::identity(m);
    std::vector<std::size_t> pivots;

    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        // Topmost nonzero entry at or below `row`.
        std::size_t pivotRow = row;
        while (pivotRow < m && work(pivotRow, col).isZero()) ++pivotRow;
        if (pivotRow == m) continue;

        if (pivotRow != row) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work(row, j), work(pivotRow, j));
            for (std::size_t j = 0; j < m; ++j) std::swap(transform(row, j), transform(pivotRow, j));
        }

        Scalar pivot = work(row, col);
        if (!pivot.isOne()) {
            Scalar inv = Scalar(1) / pivot;
            for (std::size_t j = 0; j < n; ++j) work(row, j) *= inv;
            for (std::size_t j = 0; j < m; ++j) transform(row, j) *= inv;
        }

        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || work(i, col).isZero()) continue;
            Scalar factor = work(i, col);
            for (std::size_t j = 0; j < n; ++j) work(i, j) -= factor * work(row, j);
            for (std::size_t j = 0; j < m; ++j) transform(i, j) -= factor * transform(row, j);
        }

        pivots.push_back(col);
        ++row;
    }

    RrefResult result{std::move(work), std::move(pivots), 0, std::move(transform)};
    result.rank = result.pivotCols.size();
    return result;
}

std::size_t rankOf(const Matrix& a) { return rrefRank(a).rank; }

SolveResult solveGeneral(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solveGeneral: row mismatch");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    RrefResult red = rrefRank(a);
    Matrix rhs = red.transform * b;

    // Consistency: zero rows of the rref must meet zero rhs entries.
    for (std::size_t i = red.rank; i < m; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (!rhs(i, j).isZero()) return SolveResult{SolveStatus::NoSolution, std::nullopt, {}};

    std::vector<bool> isPivot(n, false);
    for (std::size_t p : red.pivotCols) isPivot[p] = true;

    Matrix particular(n, b.cols());
    for (std::size_t r = 0; r < red.rank; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) particular(red.pivotCols[r], j) = rhs(r, j);

    std::vector<Matrix> nullBasis;
    for (std::size_t f = 0; f < n; ++f) {
        if (isPivot[f]) continue;
        Matrix v(n, 1);
        v(f, 0) = Scalar(1);
        for (std::size_t r = 0; r < red.rank; ++r) v(red.pivotCols[r], 0) = -red.rref(r, f);
        nullBasis.push_back(std::move(v));
    }

    SolveStatus status = nullBasis.empty() ? SolveStatus::Unique : SolveStatus::Infinite;
    return SolveResult{status, std::move(particular), std::move(nullBasis)};
}

Matrix inverse(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("inverse: matrix must be square");
    RrefResult red = rrefRank(a);
    if (red.rank != a.rows()) throw SingularMatrix("inverse: singular matrix");
    return red.transform;
}

std::pair<Matrix, Matrix> fullRankFactorize(const Matrix& a) {
    if (a.isZero()) throw ZeroMatrix("fullRankFactorize: zero matrix");
    RrefResult red = rrefRank(a);
    const std::size_t r = red.rank;
    Matrix f(a.rows(), r);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < a.rows(); ++i) f(i, k) = a(i, red.pivotCols[k]);
    Matrix g(r, a.cols());
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t j = 0; j < a.cols(); ++j) g(k, j) = red.rref(k, j);
    return {std::move(f), std::move(g)};
}

bool colSpaceIncluded(const Matrix& u, const Matrix& v) {
    if (u.rows() != v.rows()) throw DimensionMismatch("colSpaceIncluded: row mismatch");
    return rankOf(v.hcat(u)) == rankOf(v);
}

bool colSpaceEqual(const Matrix& u, const Matrix& v) {
    return colSpaceIncluded(u, v) && colSpaceIncluded(v, u);
}

bool rowSpaceIncludedPlain(const Matrix& u, const Matrix& v) {
    if (u.cols() != v.cols()) throw DimensionMismatch("rowSpaceIncludedPlain: column mismatch");
    return rankOf(v.vcat(u)) == rankOf(v);
}

bool rowSpaceEqualPlain(const Matrix& u, const Matrix& v) {
    return rowSpaceIncludedPlain(u, v) && rowSpaceIncludedPlain(v, u);
}

std::vector<Matrix> nullSpaceBasis(const Matrix& a) {
    Matrix zero(a.rows(), 1);
    return solveGeneral(a, zero).nullBasis;
}

bool isPositiveDefinite(const Matrix& a) {
    if (!a.isSquare() || !a.isHermitian()) return false;
    // Sylvester's criterion on leading principal minors. Hermitian minors
    // have real determinants.
    for (std::size_t k = 1; k <= a.rows(); ++k) {
        Matrix lead(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead(i, j) = a(i, j);
        Scalar det = determinant(lead);
        if (!(det.im == 0 && det.re > 0)) return false;
    }
    return true;
}

Scalar determinant(const Matrix& a) {
    if (!a.isSquare()) throw NotSquare("determinant: matrix must be square");
    const std::size_t n = a.rows();
    Matrix work = a;
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivotRow = col;
        while (pivotRow < n && work(pivotRow, col).isZero()) ++pivotRow;
        if (pivotRow == n) return Scalar(0);
        if (pivotRow != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(work(col, j), work(pivotRow, j));
            det = -det;
        }
        det *= work(col, col);
        Scalar inv = Scalar(1) / work(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (work(i, col).isZero()) continue;
            Scalar factor = work(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) work(i, j) -= factor * work(col, j);
        }
    }
    return det;
}

} // namespace geninv
