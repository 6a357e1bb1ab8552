#pragma once

#include "geninv/matrix.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace geninv {

// Numbered defining equations for the inverse families. The names follow
// the usual generalized-inverse numbering: P1 is A*X*A = A, P2 is
// X*A*X = X, P3/P4 are the Hermitian-product conditions, P5 commutation,
// and so on. Weighted variants P3M/P4N insert a weight, P1k/P6k involve
// the matrix index k.
enum class EquationTag { P1, P2, P3, P4, P5, P1k, P3M, P4N, P6, P6k, P7, P8, P9 };

struct EquationContext {
    std::optional<Matrix> m;
    std::optional<Matrix> n;
    std::optional<std::size_t> k;
};

enum class CheckMode { Exact, Float };

struct EquationCheck {
    bool ok = false;
    Matrix residual;
    double residualMax = 0.0; // max |entry| of the residual, as double
};

// Residual of one defining equation; ok means residual == 0 in exact mode,
// or max-norm residual <= tolerance in float mode. The default float
// tolerance is 2^-30 * (1 + max input magnitude).
EquationCheck checkEquation(EquationTag tag, const Matrix& a, const Matrix& x,
                            const EquationContext& ctx = {}, CheckMode mode = CheckMode::Exact,
                            std::optional<double> tolerance = std::nullopt);

bool checkMembership(const Matrix& a, const Matrix& x, const std::set<EquationTag>& tags,
                     const EquationContext& ctx = {}, CheckMode mode = CheckMode::Exact,
                     std::optional<double> tolerance = std::nullopt);

std::string tagName(EquationTag tag);
std::optional<EquationTag> parseTag(std::string_view text);

} // namespace geninv
