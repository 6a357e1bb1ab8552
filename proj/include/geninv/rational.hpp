#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace geninv {

// Exact rational number, kept canonical (lowest terms, positive denominator)
// by GMP through every operation.
using Rational = mpq_class;

// Parses "p", "p/q" or an exact decimal string like "-2.125".
// Throws ParseError on malformed input or zero denominator.
Rational parseRational(std::string_view text);

// Lowest-terms form: "p" when the denominator is 1, otherwise "p/q".
std::string formatRational(const Rational& value);

// Complex number with exact rational real and imaginary parts.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(int value) : re(value), im(0) {}
    Scalar(long value) : re(value), im(0) {}
    Scalar(Rational real) : re(std::move(real)), im(0) {}
    Scalar(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool isZero() const { return re == 0 && im == 0; }
    bool isReal() const { return im == 0; }
    bool isOne() const { return re == 1 && im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    // |z|^2, exact.
    Rational normSq() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }

    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i2 = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i2);
        return *this;
    }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    double reDouble() const { return re.get_d(); }
    double imDouble() const { return im.get_d(); }
};

// Canonical text form used in serialization and digests: "re" for real
// values, "(re,im)" otherwise.
std::string formatScalar(const Scalar& value);

} // namespace geninv
