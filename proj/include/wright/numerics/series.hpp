#ifndef WRIGHT_NUMERICS_SERIES_HPP
#define WRIGHT_NUMERICS_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wright/error.hpp"

namespace wright {

// Truncated formal power series c_0 + c_1 x + ... + c_K x^K over a field T
// (Rational, Real or Complex).  Results of every operation are exact through
// the order of the result; nothing above order K is ever formed.  Binary
// operations truncate to the smaller of the two orders.
template <class T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : c_(order + 1, T(0)) {}

    TruncatedSeries(std::vector<T> coeffs, std::size_t order) : c_(std::move(coeffs))
    {
        c_.resize(order + 1, T(0));
    }

    static TruncatedSeries constant(const T& value, std::size_t order)
    {
        TruncatedSeries s(order);
        s.c_[0] = value;
        return s;
    }

    // The series x itself.
    static TruncatedSeries variable(std::size_t order)
    {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.c_[1] = T(1);
        }
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }

    const T& operator[](std::size_t k) const { return c_[k]; }
    T& operator[](std::size_t k) { return c_[k]; }

    const std::vector<T>& coefficients() const { return c_; }

    TruncatedSeries truncated(std::size_t order) const
    {
        std::vector<T> c(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1));
        return TruncatedSeries(std::move(c), std::min(order, this->order()));
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] += o.c_[k];
        }
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o)
    {
        shrink_to(o.order());
        for (std::size_t k = 0; k < c_.size(); ++k) {
            c_[k] -= o.c_[k];
        }
        return *this;
    }
    TruncatedSeries& operator*=(const T& s)
    {
        for (auto& c : c_) {
            c *= s;
        }
        return *this;
    }
    TruncatedSeries& operator/=(const T& s)
    {
        for (auto& c : c_) {
            c /= s;
        }
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a)
    {
        for (auto& c : a.c_) {
            c = -c;
        }
        return a;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }
    friend TruncatedSeries operator*(const T& s, TruncatedSeries a) { return a *= s; }
    friend TruncatedSeries operator/(TruncatedSeries a, const T& s) { return a /= s; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        std::size_t n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.c_[i] == T(0)) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

    friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        std::size_t n = std::min(a.order(), b.order());
        if (b.c_[0] == T(0)) {
            throw DomainError("series division by a series with zero constant term");
        }
        TruncatedSeries q(n);
        for (std::size_t k = 0; k <= n; ++k) {
            T acc = a.c_[k];
            for (std::size_t j = 1; j <= k; ++j) {
                acc -= b.c_[j] * q.c_[k - j];
            }
            q.c_[k] = acc / b.c_[0];
        }
        return q;
    }

private:
    void shrink_to(std::size_t order)
    {
        if (order < this->order()) {
            c_.resize(order + 1);
        }
    }

    std::vector<T> c_;
};

template <class T>
TruncatedSeries<T> inverse(const TruncatedSeries<T>& s)
{
    return TruncatedSeries<T>::constant(T(1), s.order()) / s;
}

template <class T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& s)
{
    std::size_t n = s.order() == 0 ? 0 : s.order() - 1;
    TruncatedSeries<T> d(n);
    for (std::size_t k = 1; k <= s.order(); ++k) {
        d[k - 1] = s[k] * T(static_cast<long>(k));
    }
    return d;
}

// s(x)/x for a series with zero constant term; the order drops by one.
template <class T>
TruncatedSeries<T> divide_by_variable(const TruncatedSeries<T>& s)
{
    if (s[0] != T(0)) {
        throw DomainError("divide_by_variable: nonzero constant term");
    }
    std::size_t n = s.order() == 0 ? 0 : s.order() - 1;
    TruncatedSeries<T> d(n);
    for (std::size_t k = 1; k <= s.order(); ++k) {
        d[k - 1] = s[k];
    }
    return d;
}

// exp(s) for s with zero constant term, via E' = s' E.
template <class T>
TruncatedSeries<T> exp(const TruncatedSeries<T>& s)
{
    if (s[0] != T(0)) {
        throw DomainError("series exp requires a zero constant term");
    }
    std::size_t n = s.order();
    TruncatedSeries<T> e(n);
    e[0] = T(1);
    for (std::size_t m = 1; m <= n; ++m) {
        T acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (s[k] == T(0)) {
                continue;
            }
            acc += T(static_cast<long>(k)) * s[k] * e[m - k];
        }
        e[m] = acc / T(static_cast<long>(m));
    }
    return e;
}

// log(s) for s with unit constant term, via s L' = s'.
template <class T>
TruncatedSeries<T> log(const TruncatedSeries<T>& s)
{
    if (s[0] != T(1)) {
        throw DomainError("series log requires a unit constant term");
    }
    std::size_t n = s.order();
    TruncatedSeries<T> l(n);
    for (std::size_t m = 1; m <= n; ++m) {
        T acc = T(static_cast<long>(m)) * s[m];
        for (std::size_t k = 1; k < m; ++k) {
            acc -= T(static_cast<long>(k)) * l[k] * s[m - k];
        }
        l[m] = acc / T(static_cast<long>(m));
    }
    return l;
}

// s^p for s with unit constant term and arbitrary exponent p (Miller's
// recurrence, s P' = p s' P).
template <class T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& s, const T& p)
{
    if (s[0] != T(1)) {
        throw DomainError("series pow requires a unit constant term");
    }
    std::size_t n = s.order();
    TruncatedSeries<T> r(n);
    r[0] = T(1);
    for (std::size_t m = 1; m <= n; ++m) {
        T acc(0);
        for (std::size_t k = 1; k <= m; ++k) {
            if (s[k] == T(0)) {
                continue;
            }
            acc += (p * T(static_cast<long>(k)) - T(static_cast<long>(m - k))) * s[k] * r[m - k];
        }
        r[m] = acc / T(static_cast<long>(m));
    }
    return r;
}

template <class T>
TruncatedSeries<T> pow(const TruncatedSeries<T>& s, unsigned n)
{
    TruncatedSeries<T> result = TruncatedSeries<T>::constant(T(1), s.order());
    TruncatedSeries<T> base = s;
    while (n != 0) {
        if (n & 1U) {
            result *= base;
        }
        n >>= 1;
        if (n != 0) {
            base *= base;
        }
    }
    return result;
}

// f(g(x)) for g with zero constant term (Horner).
template <class T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& f, const TruncatedSeries<T>& g)
{
    if (g[0] != T(0)) {
        throw DomainError("compose: inner series must have zero constant term");
    }
    std::size_t n = std::min(f.order(), g.order());
    TruncatedSeries<T> r = TruncatedSeries<T>::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        r = r * g.truncated(n);
        r[0] += f[k];
    }
    return r;
}

// Compositional inverse g of f (f(g(x)) = x) by Lagrange inversion,
// g_n = (1/n) [u^{n-1}] (u/f(u))^n.  Requires f_0 = 0, f_1 != 0.
template <class T>
TruncatedSeries<T> revert(const TruncatedSeries<T>& f)
{
    if (f[0] != T(0) || f.order() < 1 || f[1] == T(0)) {
        throw DomainError("revert: series must be x*(nonzero) + ...");
    }
    std::size_t n = f.order();
    TruncatedSeries<T> h = inverse(divide_by_variable(f)); // u / f(u), order n-1
    TruncatedSeries<T> g(n);
    TruncatedSeries<T> hp = TruncatedSeries<T>::constant(T(1), n - 1);
    for (std::size_t m = 1; m <= n; ++m) {
        hp = hp * h;
        g[m] = hp[m - 1] / T(static_cast<long>(m));
    }
    return g;
}

} // namespace wright

#endif
