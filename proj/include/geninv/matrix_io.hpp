#pragma once

#include "geninv/matrix.hpp"

#include "json.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace geninv {

// Matrix file layout: {"rows": r, "cols": c, "entries": [[[re, im], ...], ...]}
// with re/im exact rational strings ("p", "p/q" or a decimal like "0.5");
// integer JSON numbers are also accepted. Binary floats are rejected so that
// exactness survives I/O.
Matrix matrixFromJson(const nlohmann::json& j);
nlohmann::ordered_json matrixToJson(const Matrix& a);

Matrix readMatrixFile(const std::string& path);
void writeMatrixFile(const std::string& path, const Matrix& a);

// Canonical text form: "RxC:[e00,e01;e10,e11]" with lowest-terms entries.
std::string canonicalMatrixString(const Matrix& a);

std::uint64_t fnv1a(std::string_view text);

// Reproducible instance digest over a label and the participating matrices.
std::string instanceDigest(std::string_view label, std::initializer_list<const Matrix*> mats);

} // namespace geninv
