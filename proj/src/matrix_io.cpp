#include "geninv/matrix_io.hpp"

#include "geninv/errors.hpp"

#include <fstream>
#include <sstream>

namespace geninv {

namespace {

Rational partFromJson(const nlohmann::json& j) {
    if (j.is_string()) return parseRational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) return Rational(static_cast<unsigned long>(j.get<std::uint64_t>()));
    if (j.is_number_float())
        throw ParseError("binary floats are not accepted; use a decimal string");
    throw ParseError("rational entry must be a string or integer");
}

} // namespace

Matrix matrixFromJson(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw ParseError("matrix object needs rows, cols and entries");
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    if (rows == 0 || cols == 0) throw ParseError("matrix dimensions must be positive");
    const auto& entries = j.at("entries");
    if (!entries.is_array() || entries.size() != rows)
        throw ParseError("entries must be an array with `rows` rows");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = entries.at(i);
        if (!row.is_array() || row.size() != cols)
            throw ParseError("entry row has wrong length");
        for (std::size_t k = 0; k < cols; ++k) {
            const auto& cell = row.at(k);
            if (!cell.is_array() || cell.size() != 2)
                throw ParseError("each entry must be a [re, im] pair");
            out(i, k) = Scalar(partFromJson(cell.at(0)), partFromJson(cell.at(1)));
        }
    }
    return out;
}

nlohmann::ordered_json matrixToJson(const Matrix& a) {
    nlohmann::ordered_json j;
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) {
            row.push_back({formatRational(a(i, k).re), formatRational(a(i, k).im)});
        }
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix readMatrixFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
    return matrixFromJson(j);
}

void writeMatrixFile(const std::string& path, const Matrix& a) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write matrix file: " + path);
    out << matrixToJson(a).dump(2) << "\n";
}

std::string canonicalMatrixString(const Matrix& a) {
    std::ostringstream os;
    os << a.rows() << "x" << a.cols() << ":[";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i) os << ";";
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ",";
            os << formatScalar(a(i, j));
        }
    }
    os << "]";
    return os.str();
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

std::string instanceDigest(std::string_view label, std::initializer_list<const Matrix*> mats) {
    std::ostringstream os;
    os << label;
    for (const Matrix* m : mats) {
        os << "|";
        if (m) os << canonicalMatrixString(*m);
    }
    std::uint64_t h = fnv1a(os.str());
    std::ostringstream hex;
    hex << std::hex;
    hex.width(16);
    hex.fill('0');
    hex << h;
    return hex.str();
}

} // namespace geninv
