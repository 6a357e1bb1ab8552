#include "geninv/weighted.hpp"

#include <Eigen/Dense>

namespace geninv {

namespace {

Eigen::MatrixXcd toEigen(const Matrix& a) {
    Eigen::MatrixXcd out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                std::complex<double>(a(i, j).reDouble(), a(i, j).imDouble());
    return out;
}

} // namespace

std::optional<FloatMatrix> floatOneThreeM(const Matrix& a, const Matrix& m) {
    if (!m.isSquare() || m.rows() != a.rows()) return std::nullopt;
    Eigen::MatrixXcd mw = toEigen(m);
    Eigen::LLT<Eigen::MatrixXcd> llt(mw);
    if (llt.info() != Eigen::Success) return std::nullopt; // not positive definite
    Eigen::MatrixXcd r = llt.matrixL().adjoint(); // M = R^* R
    Eigen::MatrixXcd ra = r * toEigen(a);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(ra);
    Eigen::MatrixXcd x = cod.pseudoInverse() * r;

    FloatMatrix out;
    out.rows = static_cast<std::size_t>(x.rows());
    out.cols = static_cast<std::size_t>(x.cols());
    out.entries.resize(out.rows * out.cols);
    for (std::size_t i = 0; i < out.rows; ++i)
        for (std::size_t j = 0; j < out.cols; ++j)
            out.entries[i * out.cols + j] =
                x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    return out;
}

} // namespace geninv
