#include "geninv/equations.hpp"

#include "geninv/errors.hpp"
#include "geninv/geninv.hpp"

#include <cmath>

namespace geninv {

namespace {

const Matrix& weightM(const EquationContext& ctx) {
    if (!ctx.m) throw MissingContext("equation requires weight M");
    return *ctx.m;
}

const Matrix& weightN(const EquationContext& ctx) {
    if (!ctx.n) throw MissingContext("equation requires weight N");
    return *ctx.n;
}

std::size_t contextK(const EquationContext& ctx, const Matrix& a) {
    if (ctx.k) return *ctx.k;
    return index(a).k;
}

Matrix hermitianDefect(const Matrix& product) {
    return product.conjTranspose() - product;
}

Matrix residualOf(EquationTag tag, const Matrix& a, const Matrix& x, const EquationContext& ctx) {
    switch (tag) {
    case EquationTag::P1:
        return a * x * a - a;
    case EquationTag::P2:
        return x * a * x - x;
    case EquationTag::P3:
        return hermitianDefect(a * x);
    case EquationTag::P4:
        return hermitianDefect(x * a);
    case EquationTag::P5:
        return a * x - x * a;
    case EquationTag::P1k:
    case EquationTag::P6k: {
        std::size_t k = contextK(ctx, a);
        return x * a.pow(static_cast<unsigned>(k + 1)) - a.pow(static_cast<unsigned>(k));
    }
    case EquationTag::P3M:
        return hermitianDefect(weightM(ctx) * a * x);
    case EquationTag::P4N:
        return hermitianDefect(weightN(ctx) * x * a);
    case EquationTag::P6:
        return x * a * a - a;
    case EquationTag::P7:
        return a * x * x - x;
    case EquationTag::P8:
        return a * a * x - a;
    case EquationTag::P9:
        return x * x * a - x;
    }
    throw UnsupportedTag("unknown equation tag");
}

} // namespace

EquationCheck checkEquation(EquationTag tag, const Matrix& a, const Matrix& x,
                            const EquationContext& ctx, CheckMode mode,
                            std::optional<double> tolerance) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw DimensionMismatch("checkEquation: candidate must be cols(A) x rows(A)");
    Matrix residual = residualOf(tag, a, x, ctx);
    EquationCheck check;
    check.residualMax = residual.maxAbsDouble();
    check.residual = std::move(residual);
    if (mode == CheckMode::Exact) {
        check.ok = check.residual.isZero();
    } else {
        double inputMax = std::max(a.maxAbsDouble(), x.maxAbsDouble());
        if (ctx.m) inputMax = std::max(inputMax, ctx.m->maxAbsDouble());
        if (ctx.n) inputMax = std::max(inputMax, ctx.n->maxAbsDouble());
        double tau = tolerance ? *tolerance : std::ldexp(1.0 + inputMax, -30);
        check.ok = check.residualMax <= tau;
    }
    return check;
}

bool checkMembership(const Matrix& a, const Matrix& x, const std::set<EquationTag>& tags,
                     const EquationContext& ctx, CheckMode mode, std::optional<double> tolerance) {
    for (EquationTag tag : tags) {
        if (!checkEquation(tag, a, x, ctx, mode, tolerance).ok) return false;
    }
    return true;
}

std::string tagName(EquationTag tag) {
    switch (tag) {
    case EquationTag::P1: return "1";
    case EquationTag::P2: return "2";
    case EquationTag::P3: return "3";
    case EquationTag::P4: return "4";
    case EquationTag::P5: return "5";
    case EquationTag::P1k: return "1k";
    case EquationTag::P3M: return "3M";
    case EquationTag::P4N: return "4N";
    case EquationTag::P6: return "6";
    case EquationTag::P6k: return "6k";
    case EquationTag::P7: return "7";
    case EquationTag::P8: return "8";
    case EquationTag::P9: return "9";
    }
    return "?";
}

std::optional<EquationTag> parseTag(std::string_view text) {
    if (text == "1") return EquationTag::P1;
    if (text == "2") return EquationTag::P2;
    if (text == "3") return EquationTag::P3;
    if (text == "4") return EquationTag::P4;
    if (text == "5") return EquationTag::P5;
    if (text == "1k" || text == "1K") return EquationTag::P1k;
    if (text == "3M" || text == "3m") return EquationTag::P3M;
    if (text == "4N" || text == "4n") return EquationTag::P4N;
    if (text == "6") return EquationTag::P6;
    if (text == "6k" || text == "6K") return EquationTag::P6k;
    if (text == "7") return EquationTag::P7;
    if (text == "8") return EquationTag::P8;
    if (text == "9") return EquationTag::P9;
    return std::nullopt;
}

} // namespace geninv
