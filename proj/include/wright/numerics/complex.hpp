#ifndef WRIGHT_NUMERICS_COMPLEX_HPP
#define WRIGHT_NUMERICS_COMPLEX_HPP

#include <ostream>
#include <utility>

#include "wright/numerics/real.hpp"

namespace wright {

// Arbitrary precision complex number.  std::complex is unspecified for
// non-builtin element types, so the handful of operations required are
// spelled out here.  All transcendental functions use the principal branch,
// arg z in (-pi, pi].
class Complex {
public:
    Real re;
    Real im;

    Complex() : re(0), im(0) {}
    Complex(const Real& r) : re(r), im(0) {} // NOLINT(google-explicit-constructor)
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {} // NOLINT
    Complex(long r) : re(r), im(0) {} // NOLINT
    Complex(long long r) : re(r), im(0) {} // NOLINT
    Complex(unsigned r) : re(r), im(0) {} // NOLINT
    Complex(unsigned long r) : re(r), im(0) {} // NOLINT
    Complex(double r) : re(r), im(0) {} // NOLINT
    explicit Complex(const Rational& q) : re(q), im(0) {}

    static Complex polar(const Real& r, const Real& theta)
    {
        return {r * cos(theta), r * sin(theta)};
    }

    bool is_real() const { return im == 0; }

    Complex& operator+=(const Complex& o)
    {
        re += o.re;
        im += o.im;
        return *this;
    }
    Complex& operator-=(const Complex& o)
    {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Complex& operator*=(const Complex& o)
    {
        if (o.im == 0) {
            re *= o.re;
            im *= o.re;
            return *this;
        }
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o)
    {
        if (o.im == 0) {
            re /= o.re;
            im /= o.re;
            return *this;
        }
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }

    friend Complex operator+(Complex a, const Complex& b) { return a += b; }
    friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
    friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
    friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
    friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

    friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Complex& a, const Complex& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const Complex& z)
    {
        return os << '(' << z.re << ", " << z.im << ')';
    }
};

inline Complex conj(const Complex& z) { return {z.re, -z.im}; }
inline Real abs(const Complex& z) { return hypot(z.re, z.im); }
inline Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }
inline Real arg(const Complex& z) { return atan2(z.im, z.re); }

inline Complex exp(const Complex& z)
{
    Real m = exp(z.re);
    if (z.im == 0) {
        return {m, Real(0)};
    }
    return {m * cos(z.im), m * sin(z.im)};
}

inline Complex log(const Complex& z)
{
    return {log(abs(z)), arg(z)};
}

inline Complex sqrt(const Complex& z)
{
    if (z.im == 0 && z.re >= 0) {
        return {sqrt(z.re), Real(0)};
    }
    Real r = abs(z);
    Real a = sqrt((r + abs(z.re)) / 2);
    if (z.re >= 0) {
        return {a, z.im / (2 * a)};
    }
    Real b = z.im >= 0 ? a : Real(-a);
    return {abs(z.im) / (2 * a), b};
}

inline Complex sin(const Complex& z)
{
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

inline Complex cos(const Complex& z)
{
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

// Principal power w^p = exp(p log w).
inline Complex pow(const Complex& w, const Complex& p)
{
    if (w.re == 0 && w.im == 0) {
        if (p.re > 0) {
            return Complex(0);
        }
        throw DomainError("pow: zero base with non-positive exponent");
    }
    return exp(p * log(w));
}

inline Complex pow(Complex base, long long n)
{
    bool invert = n < 0;
    unsigned long long e = invert ? static_cast<unsigned long long>(-n) : static_cast<unsigned long long>(n);
    Complex result(1);
    while (e != 0) {
        if (e & 1ULL) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return invert ? Complex(1) / result : result;
}

// |w|^p e^{i p phase} for an explicitly tracked (unreduced) phase; used
// wherever the analytic continuation beyond the principal sheet matters.
inline Complex pow_phase(const Real& modulus, const Real& phase, const Complex& p)
{
    Real lm = log(modulus);
    // exp(p * (lm + i phase))
    return exp(p * Complex(lm, phase));
}

} // namespace wright

#endif
