#include "geninv/matrix.hpp"

#include <cmath>
#include <cstdlib>

namespace geninv {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw DimensionMismatch("matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::fromRows(std::initializer_list<std::initializer_list<Scalar>> rows) {
    std::size_t r = rows.size();
    if (r == 0) throw DimensionMismatch("empty row list");
    std::size_t c = rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw DimensionMismatch("ragged row list");
        std::size_t j = 0;
        for (const auto& v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::diagonal(std::initializer_list<Scalar> entries) {
    Matrix m(entries.size(), entries.size());
    std::size_t i = 0;
    for (const auto& v : entries) {
        m(i, i) = v;
        ++i;
    }
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add: shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + o.data_[k];
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sub: shape mismatch");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - o.data_[k];
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("mul: inner dimension mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = (*this)(i, k);
            if (aik.isZero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o(k, j);
                if (bkj.isZero()) continue;
                out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
    return out;
}

Matrix Matrix::scaled(const Scalar& factor) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * factor;
    return out;
}

Matrix Matrix::conjTranspose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j).conj();
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

Matrix Matrix::conj() const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k].conj();
    return out;
}

Matrix Matrix::pow(unsigned exponent) const {
    if (!isSquare()) throw NotSquare("pow: matrix must be square");
    Matrix result = identity(rows_);
    for (unsigned e = 0; e < exponent; ++e) result = result * (*this);
    return result;
}

bool Matrix::isZero() const {
    for (const auto& v : data_)
        if (!v.isZero()) return false;
    return true;
}

bool Matrix::isIdentity() const {
    if (!isSquare()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (i == j ? !(*this)(i, j).isOne() : !(*this)(i, j).isZero()) return false;
        }
    return true;
}

Matrix Matrix::hcat(const Matrix& right) const {
    if (rows_ != right.rows_) throw DimensionMismatch("hcat: row mismatch");
    Matrix out(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
    }
    return out;
}

Matrix Matrix::vcat(const Matrix& below) const {
    if (cols_ != below.cols_) throw DimensionMismatch("vcat: column mismatch");
    Matrix out(rows_ + below.rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) {
        for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < below.rows_; ++i) out(rows_ + i, j) = below(i, j);
    }
    return out;
}

Matrix Matrix::column(std::size_t j) const {
    Matrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out(i, 0) = (*this)(i, j);
    return out;
}

double Matrix::maxAbsDouble() const {
    double m = 0.0;
    for (const auto& v : data_) {
        m = std::max(m, std::abs(v.reDouble()));
        m = std::max(m, std::abs(v.imDouble()));
    }
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a(i, j);
            if (aij.isZero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

Matrix vec(const Matrix& a) {
    Matrix out(a.rows() * a.cols(), 1);
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) out(j * a.rows() + i, 0) = a(i, j);
    return out;
}

} // namespace geninv
