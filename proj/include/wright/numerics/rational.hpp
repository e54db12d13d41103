#ifndef WRIGHT_NUMERICS_RATIONAL_HPP
#define WRIGHT_NUMERICS_RATIONAL_HPP

#include <cctype>
#include <string>
#include <string_view>

#include "wright/numerics/complex.hpp"
#include "wright/numerics/real.hpp"

namespace wright {

// Exact Gaussian rational; every user-supplied parameter is held in this form
// so that it can be re-rounded to any working precision without loss.
struct ComplexRational {
    Rational re;
    Rational im;

    ComplexRational() = default;
    ComplexRational(Rational r) : re(std::move(r)), im(0) {} // NOLINT(google-explicit-constructor)
    ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    ComplexRational(long long n) : re(n), im(0) {} // NOLINT
    ComplexRational(int n) : re(n), im(0) {} // NOLINT

    bool is_real() const { return im == 0; }
    Complex value() const { return {Real(re), Real(im)}; }

    friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b)
    {
        return {a.re + b.re, a.im + b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b)
    {
        return {a.re - b.re, a.im - b.im};
    }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
    friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b)
    {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend ComplexRational operator/(const ComplexRational& a, const Rational& d)
    {
        return {a.re / d, a.im / d};
    }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b)
    {
        return a.re == b.re && a.im == b.im;
    }
};

inline std::string to_string(const ComplexRational& z)
{
    if (z.is_real()) {
        return to_string(z.re);
    }
    std::string s = to_string(z.re);
    if (z.im >= 0) {
        s += "+";
    }
    return s + to_string(z.im) + "i";
}

namespace detail {

inline Rational pow10(long e)
{
    Integer p = 1;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) {
        p *= 10;
    }
    return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

// Decimal literal "[-]ddd[.ddd][e[+-]dd]" to an exact rational.
inline Rational parse_decimal(std::string_view s)
{
    if (s.empty()) {
        throw ParameterError("empty number");
    }
    bool neg = false;
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    Integer mant = 0;
    long scale = 0;
    bool any = false;
    bool dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mant = mant * 10 + (c - '0');
            any = true;
            if (dot) {
                --scale;
            }
        } else if (c == '.' && !dot) {
            dot = true;
        } else {
            break;
        }
    }
    if (!any) {
        throw ParameterError("malformed number '" + std::string(s) + "'");
    }
    if (i < s.size()) {
        if (s[i] != 'e' && s[i] != 'E') {
            throw ParameterError("malformed number '" + std::string(s) + "'");
        }
        std::string ex(s.substr(i + 1));
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(ex, &used);
        } catch (const std::exception&) {
            throw ParameterError("malformed exponent in '" + std::string(s) + "'");
        }
        if (used != ex.size()) {
            throw ParameterError("malformed exponent in '" + std::string(s) + "'");
        }
        scale += e;
    }
    Rational q = Rational(mant) * pow10(scale);
    return neg ? Rational(-q) : q;
}

} // namespace detail

// Accepts "p/q" (either part a decimal literal) or a plain decimal.
inline Rational parse_rational(std::string_view s)
{
    auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return detail::parse_decimal(s);
    }
    Rational num = detail::parse_decimal(s.substr(0, slash));
    Rational den = detail::parse_decimal(s.substr(slash + 1));
    if (den == 0) {
        throw ParameterError("zero denominator in '" + std::string(s) + "'");
    }
    return num / den;
}

// Accepts "x", "yi", "x+yi", "x-yi" with x, y as in parse_rational.
inline ComplexRational parse_complex_rational(std::string_view s)
{
    if (s.empty()) {
        throw ParameterError("empty number");
    }
    if (s.back() != 'i') {
        return {parse_rational(s), Rational(0)};
    }
    std::string_view body = s.substr(0, s.size() - 1);
    // Locate the sign that separates real and imaginary parts (not an
    // exponent sign and not the leading sign).
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag = [](std::string_view t) {
        if (t.empty() || t == "+") {
            return Rational(1);
        }
        if (t == "-") {
            return Rational(-1);
        }
        return parse_rational(t);
    };
    if (split == std::string_view::npos) {
        return {Rational(0), imag(body)};
    }
    return {parse_rational(body.substr(0, split)), imag(body.substr(split))};
}

} // namespace wright

#endif
