#ifndef WRIGHT_NUMERICS_GAMMA_HPP
#define WRIGHT_NUMERICS_GAMMA_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <mutex>
#include <vector>

#include "wright/numerics/complex.hpp"
#include "wright/numerics/rational.hpp"
#include "wright/numerics/real.hpp"
#include "wright/numerics/series.hpp"

namespace wright {

// Bernoulli numbers B_0..B_n (B_1 = -1/2), cached process-wide.
inline std::vector<Rational> bernoulli_numbers(std::size_t n)
{
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mutex);
    while (cache.size() <= n) {
        std::size_t m = cache.size();
        // sum_{k=0}^{m} binom(m+1, k) B_k = 0
        Rational acc(0);
        Integer binom = 1; // binom(m+1, 0)
        for (std::size_t k = 0; k < m; ++k) {
            acc += Rational(binom) * cache[k];
            binom = binom * static_cast<long>(m + 1 - k) / static_cast<long>(k + 1);
        }
        cache.push_back(Rational(-acc / Rational(static_cast<long>(m + 1))));
    }
    return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n + 1)};
}

// Coefficients of the Stirling series of log Gamma:
// log Gamma*(z) ~ sum_{k>=1} B_{2k} / (2k(2k-1)) z^{1-2k}.
inline Rational stirling_log_coeff(std::size_t k, const std::vector<Rational>& bern)
{
    long n = static_cast<long>(2 * k);
    return bern[2 * k] / Rational(n * (n - 1));
}

// Stirling coefficients gamma_0..gamma_n with
// Gamma*(z) ~ sum_k (-1)^k gamma_k z^{-k}.
inline std::vector<Rational> stirling_coeffs(std::size_t n)
{
    auto bern = bernoulli_numbers(n + 2);
    TruncatedSeries<Rational> lg(n);
    for (std::size_t k = 1; 2 * k - 1 <= n; ++k) {
        lg[2 * k - 1] = stirling_log_coeff(k, bern);
    }
    TruncatedSeries<Rational> g = exp(lg);
    std::vector<Rational> out(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        out[k] = (k % 2 == 0) ? g[k] : Rational(-g[k]);
    }
    return out;
}

namespace detail {

// Argument modulus beyond which the Stirling series of log Gamma reaches the
// working precision before its terms start to grow.
inline double stirling_threshold(unsigned digits)
{
    return std::max(20.0, 0.37 * (digits + 10.0));
}

// Sum of the Stirling correction sum_k B_2k/(2k(2k-1)) w^{1-2k}, stopping at
// the working precision or at the least term.
inline Complex stirling_correction(const Complex& w)
{
    Complex inv = Complex(1) / w;
    Complex inv2 = inv * inv;
    Complex power = inv;
    Complex sum(0);
    Real eps = pow(Real(10), -static_cast<long>(working_digits()) - 2);
    Real previous = -1;
    std::size_t k = 1;
    std::vector<Rational> bern = bernoulli_numbers(64);
    for (;; ++k) {
        if (2 * k >= bern.size()) {
            bern = bernoulli_numbers(2 * bern.size());
        }
        Complex term = power * Complex(Real(stirling_log_coeff(k, bern)));
        Real size = abs(term);
        if (previous >= 0 && size > previous) {
            break;
        }
        sum += term;
        if (size < eps) {
            break;
        }
        previous = size;
        power *= inv2;
    }
    return sum;
}

inline Complex log_gamma_stirling(const Complex& w)
{
    Complex half(Real(0.5));
    Real half_log_2pi = log(2 * pi()) / 2;
    return (w - half) * log(w) - w + Complex(half_log_2pi) + stirling_correction(w);
}

inline Complex gamma_complex(const Complex& z)
{
    if (z.re < Real(0.5)) {
        Complex s = sin(Complex(pi()) * z);
        return Complex(pi()) / (s * gamma_complex(Complex(1) - z));
    }
    double threshold = stirling_threshold(working_digits());
    Complex w = z;
    Complex product(1);
    while (w.re < threshold) {
        product *= w;
        w += Complex(1);
    }
    return exp(log_gamma_stirling(w)) / product;
}

} // namespace detail

// Gamma function at the working precision.  Real arguments are delegated to
// MPFR; complex arguments use the shifted Stirling series with reflection.
inline Complex gamma(const Complex& z)
{
    if (z.is_real()) {
        if (is_nonpositive_integer(z.re)) {
            throw PoleError("gamma: pole at nonpositive integer");
        }
        return Complex(tgamma(z.re));
    }
    unsigned d = working_digits();
    Complex r;
    {
        WorkingPrecision guard(d + 10);
        Complex zz(at_working(z.re), at_working(z.im));
        r = detail::gamma_complex(zz);
    }
    return {at_working(r.re), at_working(r.im)};
}

inline Real gamma(const Real& x)
{
    if (is_nonpositive_integer(x)) {
        throw PoleError("gamma: pole at nonpositive integer");
    }
    return tgamma(x);
}

// Reciprocal gamma; entire, exactly zero on the pole set.
inline Complex rgamma(const Complex& z)
{
    if (z.is_real() && is_nonpositive_integer(z.re)) {
        return Complex(0);
    }
    return Complex(1) / gamma(z);
}

inline Real rgamma(const Real& x)
{
    if (is_nonpositive_integer(x)) {
        return Real(0);
    }
    return 1 / tgamma(x);
}

// Gamma*(z) = Gamma(z) (2 pi)^{-1/2} e^z z^{1/2 - z}, principal branch.
inline Complex scaled_gamma_star(const Complex& z)
{
    if (z.re <= 0) {
        throw DomainError("scaled_gamma_star requires Re z > 0");
    }
    unsigned d = working_digits();
    Complex r;
    {
        WorkingPrecision guard(d + 10);
        Complex zz(at_working(z.re), at_working(z.im));
        if (to_double(abs(zz)) >= detail::stirling_threshold(d)) {
            r = exp(detail::stirling_correction(zz));
        } else {
            // log Gamma(z) via the shifted series, then strip the Stirling
            // leading factor before exponentiating.
            Complex w = zz;
            Complex log_product(0);
            double threshold = detail::stirling_threshold(d);
            while (w.re < threshold) {
                log_product += log(w);
                w += Complex(1);
            }
            Complex half(Real(0.5));
            Complex lg = detail::log_gamma_stirling(w) - log_product;
            Real half_log_2pi = log(2 * pi()) / 2;
            Complex e = lg - Complex(half_log_2pi) + zz + (half - zz) * log(zz);
            r = exp(e);
        }
    }
    return {at_working(r.re), at_working(r.im)};
}

// Rising factorial (a)_n.
template <class T>
T pochhammer(const T& a, std::size_t n)
{
    T r(1);
    for (std::size_t k = 0; k < n; ++k) {
        r *= a + T(static_cast<long>(k));
    }
    return r;
}

inline Integer binomial(long n, long k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer r = 1;
    for (long i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

namespace detail {

// (e^t - 1)/t = sum t^n/(n+1)!
template <class T>
TruncatedSeries<T> expm1_over_t(std::size_t order)
{
    TruncatedSeries<T> f(order);
    T fact(1);
    for (std::size_t n = 0; n <= order; ++n) {
        fact *= T(static_cast<long>(n + 1));
        f[n] = T(1) / fact;
    }
    return f;
}

// e^{xt}
template <class T>
TruncatedSeries<T> exp_linear(const T& x, std::size_t order)
{
    TruncatedSeries<T> e(order);
    e[0] = T(1);
    for (std::size_t n = 1; n <= order; ++n) {
        e[n] = e[n - 1] * x / T(static_cast<long>(n));
    }
    return e;
}

template <class T>
T factorial(std::size_t k)
{
    T f(1);
    for (std::size_t i = 2; i <= k; ++i) {
        f *= T(static_cast<long>(i));
    }
    return f;
}

} // namespace detail

// Generalised Bernoulli polynomial B_k^{(s)}(x): k! times the coefficient of
// t^k in (t/(e^t - 1))^s e^{xt}, for integer s.
template <class T>
T gen_bernoulli(std::size_t k, long s, const T& x)
{
    TruncatedSeries<T> base = detail::expm1_over_t<T>(k);
    if (s > 0) {
        base = inverse(base);
    }
    unsigned n = static_cast<unsigned>(s < 0 ? -s : s);
    TruncatedSeries<T> g = pow(base, n) * detail::exp_linear(x, k);
    return g[k] * detail::factorial<T>(k);
}

// All B_k^{(-n)}(x) for 0 <= n <= max_neg and 0 <= k <= max_k, laid out as
// table[n][k].  Shares the powers of (e^t - 1)/t across rows.
template <class T>
std::vector<std::vector<T>> gen_bernoulli_table(std::size_t max_k, std::size_t max_neg, const T& x)
{
    TruncatedSeries<T> base = detail::expm1_over_t<T>(max_k);
    TruncatedSeries<T> ex = detail::exp_linear(x, max_k);
    std::vector<std::vector<T>> table;
    table.reserve(max_neg + 1);
    TruncatedSeries<T> power = TruncatedSeries<T>::constant(T(1), max_k);
    for (std::size_t n = 0; n <= max_neg; ++n) {
        TruncatedSeries<T> g = power * ex;
        std::vector<T> row(max_k + 1);
        T fact(1);
        for (std::size_t k = 0; k <= max_k; ++k) {
            if (k > 0) {
                fact *= T(static_cast<long>(k));
            }
            row[k] = g[k] * fact;
        }
        table.push_back(std::move(row));
        power = power * base;
    }
    return table;
}

} // namespace wright

#endif
