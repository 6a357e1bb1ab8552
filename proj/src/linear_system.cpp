#include "geninv/linear_system.hpp"

namespace geninv {

namespace {

void checkTermShapes(const LinearTerm& term, std::size_t xRows, std::size_t xCols,
                     std::size_t eqRows, std::size_t eqCols) {
    std::size_t innerLeft = term.conjTransposed ? xCols : xRows;
    std::size_t innerRight = term.conjTransposed ? xRows : xCols;
    if (term.left.rows() != eqRows || term.left.cols() != innerLeft ||
        term.right.rows() != innerRight || term.right.cols() != eqCols)
        throw DimensionMismatch("linear term shape mismatch");
}

} // namespace

Matrix evalEquation(const MatrixEquation& eq, const Matrix& x) {
    Matrix acc = eq.constant;
    for (const auto& term : eq.terms) {
        acc = acc + term.left * (term.conjTransposed ? x.conjTranspose() : x) * term.right;
    }
    return acc;
}

Matrix evalFamily(const LinearFamily& family, const Matrix& z) {
    Matrix acc = family.base;
    for (const auto& term : family.terms) {
        acc = acc + term.left * (term.conjTransposed ? z.conjTranspose() : z) * term.right;
    }
    return acc;
}

Matrix AffineSolution::secondRepresentative() const {
    Matrix result = *particular;
    for (const auto& dir : basis) result = result + dir;
    return result;
}

AffineSolution solveMatrixEquations(const std::vector<MatrixEquation>& equations,
                                    std::size_t xRows, std::size_t xCols) {
    std::size_t totalRows = 0;
    for (const auto& eq : equations) {
        for (const auto& term : eq.terms)
            checkTermShapes(term, xRows, xCols, eq.constant.rows(), eq.constant.cols());
        totalRows += 2 * eq.constant.rows() * eq.constant.cols();
    }
    const std::size_t unknowns = 2 * xRows * xCols;

    Matrix system(std::max<std::size_t>(totalRows, 1), unknowns);
    Matrix rhs(std::max<std::size_t>(totalRows, 1), 1);

    std::size_t rowBase = 0;
    for (const auto& eq : equations) {
        const std::size_t p = eq.constant.rows();
        const std::size_t q = eq.constant.cols();
        auto addLinearCoeff = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                                  const Scalar& c) {
            std::size_t reRow = rowBase + 2 * (i * q + j);
            std::size_t imRow = reRow + 1;
            std::size_t reCol = 2 * (k * xCols + l);
            std::size_t imCol = reCol + 1;
            system(reRow, reCol) += Scalar(c.re);
            system(reRow, imCol) += Scalar(-c.im);
            system(imRow, reCol) += Scalar(c.im);
            system(imRow, imCol) += Scalar(c.re);
        };
        auto addConjCoeff = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                                const Scalar& d) {
            std::size_t reRow = rowBase + 2 * (i * q + j);
            std::size_t imRow = reRow + 1;
            std::size_t reCol = 2 * (k * xCols + l);
            std::size_t imCol = reCol + 1;
            system(reRow, reCol) += Scalar(d.re);
            system(reRow, imCol) += Scalar(d.im);
            system(imRow, reCol) += Scalar(d.im);
            system(imRow, imCol) += Scalar(-d.re);
        };

        for (const auto& term : eq.terms) {
            if (!term.conjTransposed) {
                // (C X D)(i,j) collects C(i,k) D(l,j) X(k,l).
                for (std::size_t i = 0; i < p; ++i)
                    for (std::size_t k = 0; k < xRows; ++k) {
                        const Scalar& cik = term.left(i, k);
                        if (cik.isZero()) continue;
                        for (std::size_t l = 0; l < xCols; ++l)
                            for (std::size_t j = 0; j < q; ++j) {
                                const Scalar& dlj = term.right(l, j);
                                if (dlj.isZero()) continue;
                                addLinearCoeff(i, j, k, l, cik * dlj);
                            }
                    }
            } else {
                // (C X^* D)(i,j) collects C(i,a) D(b,j) conj(X(b,a)).
                for (std::size_t i = 0; i < p; ++i)
                    for (std::size_t a = 0; a < xCols; ++a) {
                        const Scalar& cia = term.left(i, a);
                        if (cia.isZero()) continue;
                        for (std::size_t b = 0; b < xRows; ++b)
                            for (std::size_t j = 0; j < q; ++j) {
                                const Scalar& dbj = term.right(b, j);
                                if (dbj.isZero()) continue;
                                addConjCoeff(i, j, b, a, cia * dbj);
                            }
                    }
            }
        }

        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = 0; j < q; ++j) {
                const Scalar& c = eq.constant(i, j);
                rhs(rowBase + 2 * (i * q + j), 0) = Scalar(-c.re);
                rhs(rowBase + 2 * (i * q + j) + 1, 0) = Scalar(-c.im);
            }
        rowBase += 2 * p * q;
    }

    SolveResult solved = solveGeneral(system, rhs);
    AffineSolution out;
    if (solved.status == SolveStatus::NoSolution) return out;
    out.feasible = true;

    auto toMatrix = [&](const Matrix& v) {
        Matrix x(xRows, xCols);
        for (std::size_t k = 0; k < xRows; ++k)
            for (std::size_t l = 0; l < xCols; ++l) {
                x(k, l) = Scalar(v(2 * (k * xCols + l), 0).re, v(2 * (k * xCols + l) + 1, 0).re);
            }
        return x;
    };
    out.particular = toMatrix(*solved.particular);
    out.basis.reserve(solved.nullBasis.size());
    for (const auto& v : solved.nullBasis) out.basis.push_back(toMatrix(v));
    return out;
}

MatrixEquation substitute(const MatrixEquation& eqInX, const LinearFamily& family) {
    MatrixEquation out;
    out.constant = eqInX.constant;
    for (const auto& outer : eqInX.terms) {
        if (!outer.conjTransposed) {
            out.constant = out.constant + outer.left * family.base * outer.right;
            for (const auto& inner : family.terms) {
                out.terms.push_back(LinearTerm{outer.left * inner.left,
                                               inner.right * outer.right,
                                               inner.conjTransposed});
            }
        } else {
            out.constant = out.constant + outer.left * family.base.conjTranspose() * outer.right;
            for (const auto& inner : family.terms) {
                // (L Z R)^* = R^* Z^* L^*; (L Z^* R)^* = R^* Z L^*.
                out.terms.push_back(LinearTerm{outer.left * inner.right.conjTranspose(),
                                               inner.left.conjTranspose() * outer.right,
                                               !inner.conjTransposed});
            }
        }
    }
    return out;
}

bool familyImageIsPoint(const LinearFamily& family, const AffineSolution& solution) {
    if (!solution.feasible) return false;
    for (const auto& dir : solution.basis) {
        Matrix image = evalFamily(family, dir) - family.base;
        if (!image.isZero()) return false;
    }
    return true;
}

MatrixEquation eqInner(const Matrix& a) {
    return MatrixEquation{{LinearTerm{a, a, false}}, -a};
}

MatrixEquation eqLeftCore(const Matrix& a) {
    return MatrixEquation{{LinearTerm{Matrix::identity(a.cols()), a * a, false}}, -a};
}

MatrixEquation eqRightCore(const Matrix& a) {
    return MatrixEquation{{LinearTerm{a * a, Matrix::identity(a.rows()), false}}, -a};
}

MatrixEquation eqHermitianWAX(const Matrix& w, const Matrix& a) {
    Matrix wa = w * a;
    // X^* (WA)^* - (WA) X == 0
    return MatrixEquation{{LinearTerm{Matrix::identity(w.rows()), wa.conjTranspose(), true},
                           LinearTerm{-wa, Matrix::identity(w.rows()), false}},
                          Matrix::zero(w.rows(), w.rows())};
}

MatrixEquation eqHermitianWXA(const Matrix& w, const Matrix& a) {
    // (W X A)^* - W X A = A^* X^* W^* - W X A == 0
    return MatrixEquation{{LinearTerm{a.conjTranspose(), w.conjTranspose(), true},
                           LinearTerm{-w, a, false}},
                          Matrix::zero(w.rows(), w.rows())};
}

MatrixEquation eqProduct(Matrix c, Matrix d, Matrix e) {
    return MatrixEquation{{LinearTerm{std::move(c), std::move(d), false}}, -e};
}

MatrixEquation eqLeftAnnihilate(Matrix coeff, std::size_t xRows, std::size_t xCols) {
    Matrix zero(coeff.rows(), xCols);
    (void)xRows;
    return MatrixEquation{{LinearTerm{std::move(coeff), Matrix::identity(xCols), false}}, zero};
}

MatrixEquation eqRightAnnihilate(Matrix coeff, std::size_t xRows, std::size_t xCols) {
    (void)xCols;
    Matrix zero(xRows, coeff.cols());
    return MatrixEquation{{LinearTerm{Matrix::identity(xRows), std::move(coeff), false}}, zero};
}

LinearFamily coreCandidateFamily(const Matrix& a, const Matrix& groupInv) {
    std::size_t n = a.rows();
    Matrix e = a * groupInv;
    return LinearFamily{groupInv,
                        {LinearTerm{groupInv * a, Matrix::identity(n) - e, false}},
                        n, n};
}

LinearFamily dualCoreCandidateFamily(const Matrix& a, const Matrix& groupInv) {
    std::size_t n = a.rows();
    Matrix e = a * groupInv;
    return LinearFamily{groupInv,
                        {LinearTerm{Matrix::identity(n) - e, a * groupInv, false}},
                        n, n};
}

LinearFamily projectorFamilySameRange(const Matrix& p0) {
    std::size_t n = p0.rows();
    return LinearFamily{p0, {LinearTerm{p0, Matrix::identity(n) - p0, false}}, n, n};
}

LinearFamily projectorFamilySameRowSpace(const Matrix& q0) {
    std::size_t n = q0.rows();
    return LinearFamily{q0, {LinearTerm{Matrix::identity(n) - q0, q0, false}}, n, n};
}

LinearFamily innerInverseFamily(const Matrix& a, const Matrix& pinv) {
    std::size_t n = a.cols();
    std::size_t m = a.rows();
    LinearFamily fam;
    fam.base = pinv;
    fam.zRows = n;
    fam.zCols = m;
    fam.terms.push_back(LinearTerm{Matrix::identity(n), Matrix::identity(m), false});
    fam.terms.push_back(LinearTerm{-(pinv * a), a * pinv, false});
    return fam;
}

} // namespace geninv
