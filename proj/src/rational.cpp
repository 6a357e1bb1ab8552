#include "geninv/rational.hpp"

#include "geninv/errors.hpp"

#include <cctype>

namespace geninv {

namespace {

bool isDigits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

} // namespace

Rational parseRational(std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) throw ParseError("sign without digits");
    }

    std::string body(text);
    auto slash = body.find('/');
    auto dot = body.find('.');
    if (slash != std::string::npos && dot != std::string::npos)
        throw ParseError("rational literal mixes '/' and '.': " + body);

    Rational value;
    if (slash != std::string::npos) {
        std::string num = body.substr(0, slash);
        std::string den = body.substr(slash + 1);
        if (!isDigits(num) || !isDigits(den))
            throw ParseError("malformed fraction: " + body);
        mpz_class n(num), d(den);
        if (d == 0) throw ParseError("zero denominator: " + body);
        value = Rational(n, d);
        value.canonicalize();
    } else if (dot != std::string::npos) {
        std::string intPart = body.substr(0, dot);
        std::string fracPart = body.substr(dot + 1);
        if (intPart.empty()) intPart = "0";
        if (fracPart.empty()) fracPart = "0";
        if (!isDigits(intPart) || !isDigits(fracPart))
            throw ParseError("malformed decimal: " + body);
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fracPart.size());
        mpz_class n = mpz_class(intPart) * scale + mpz_class(fracPart);
        value = Rational(n, scale);
        value.canonicalize();
    } else {
        if (!isDigits(body)) throw ParseError("malformed integer: " + body);
        value = Rational(mpz_class(body));
    }
    if (negative) value = -value;
    return value;
}

std::string formatRational(const Rational& value) {
    return value.get_str();
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.isZero()) throw Error("division by zero scalar");
    Rational d = o.normSq();
    Rational r = (re * o.re + im * o.im) / d;
    Rational i2 = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i2);
    return *this;
}

std::string formatScalar(const Scalar& value) {
    if (value.isReal()) return formatRational(value.re);
    return "(" + formatRational(value.re) + "," + formatRational(value.im) + ")";
}

} // namespace geninv
