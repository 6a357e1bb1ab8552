#pragma once

#include "geninv/errors.hpp"
#include "geninv/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace geninv {

// Dense matrix over exact complex rationals, row-major storage.
// All operations are pure; a Matrix is never mutated after construction
// except through operator() on a freshly built value.
class Matrix {
public:
    // Default is a 1x1 zero; dimensions are always positive.
    Matrix() : Matrix(1, 1) {}
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix identity(std::size_t n);
    // Row-major nested list, mostly for tests and fixtures.
    static Matrix fromRows(std::initializer_list<std::initializer_list<Scalar>> rows);
    static Matrix diagonal(std::initializer_list<Scalar> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& factor) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix conjTranspose() const;
    Matrix transpose() const;
    Matrix conj() const;

    // A^k for square A; pow(0) is the identity.
    Matrix pow(unsigned exponent) const;

    bool isZero() const;
    bool isIdentity() const;
    bool isHermitian() const { return isSquare() && *this == conjTranspose(); }

    Matrix hcat(const Matrix& right) const;
    Matrix vcat(const Matrix& below) const;
    Matrix column(std::size_t j) const;

    // max |entry| as a double; used only by the floating verifier tolerance.
    double maxAbsDouble() const;

    const std::vector<Scalar>& entries() const { return data_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

// Kronecker product A (x) B.
Matrix kron(const Matrix& a, const Matrix& b);

// Column-stacking vectorization: vec(A) is rows*cols x 1.
Matrix vec(const Matrix& a);

} // namespace geninv
