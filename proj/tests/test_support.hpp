#pragma once

#include "geninv/matrix.hpp"

#include <string>
#include <vector>

namespace geninv::testsupport {

// Builds a matrix from rows of rational strings ("1", "-1/2", "0.3").
inline Matrix mat(const std::vector<std::vector<std::string>>& rows) {
    Matrix out(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            out(i, j) = Scalar(parseRational(rows[i][j]));
    return out;
}

inline Scalar cplx(const std::string& re, const std::string& im) {
    return Scalar(parseRational(re), parseRational(im));
}

} // namespace geninv::testsupport
