#ifndef WRIGHT_COEFFICIENTS_COEFFICIENTS_HPP
#define WRIGHT_COEFFICIENTS_COEFFICIENTS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <type_traits>
#include <vector>

#include "wright/numerics/gamma.hpp"
#include "wright/numerics/series.hpp"
#include "wright/series/params.hpp"

namespace wright {

// Leading coefficient A_0 of the exponential expansion of pPsi_q.
inline Complex leading_A0(const WrightParams& w)
{
    if (w.kappa() <= 0) {
        throw DomainError("A_0 requires kappa > 0");
    }
    Real two_pi = 2 * pi();
    long pq = static_cast<long>(w.p()) - static_cast<long>(w.q());
    Complex r = pow(Complex(two_pi), Complex(Real(pq) / 2));
    Complex half(Real(1) / 2);
    r *= pow(Complex(to_real(w.kappa())), -half - w.theta().value());
    for (const auto& u : w.upper()) {
        r *= pow(Complex(to_real(u.scale)), u.shift.value() - half);
    }
    for (const auto& l : w.lower()) {
        r *= pow(Complex(to_real(l.scale)), half - l.shift.value());
    }
    return r;
}

// c_0..c_J with c_j = A_j / A_0.  When every shift is real the c_j are held
// exactly (`exact`) and `c` carries their values at `digits`.
struct CoefficientTable {
    WrightParams params;
    std::size_t order = 0;
    unsigned digits = 0;
    bool rational = false;
    Complex A0;
    std::vector<Rational> exact;
    std::vector<Complex> c;

    Complex A(std::size_t j) const { return A0 * c.at(j); }
};

namespace detail {

template <class T>
T from_rational(const Rational& q)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return q;
    } else {
        return T(to_real(q));
    }
}

template <class T>
T from_shift(const ComplexRational& z)
{
    if constexpr (std::is_same_v<T, Rational>) {
        return z.re;
    } else {
        return z.value();
    }
}

// e(alpha s; a) Gamma*(alpha s + a) as a series in u = 1/s through u^order.
template <class T>
TruncatedSeries<T> gamma_factor_series(const T& alpha, const T& a, std::size_t order, const std::vector<Rational>& stirling)
{
    T r = a / alpha;
    TruncatedSeries<T> le(order);
    T rp = r; // r^m
    for (std::size_t m = 1; m <= order; ++m) {
        T v = alpha * rp * r / T(static_cast<long>(m + 1)) - (a - T(1) / T(2)) * rp / T(static_cast<long>(m));
        le[m] = (m % 2 == 0) ? v : -v;
        rp *= r;
    }
    TruncatedSeries<T> e = exp(le);

    // (1 + r u)^{-k} and the Stirling series in w^{-1} = (alpha s)^{-1} (1 + r u)^{-1}.
    TruncatedSeries<T> one_ru = TruncatedSeries<T>::constant(T(1), order);
    if (order >= 1) {
        one_ru[1] = r;
    }
    TruncatedSeries<T> winv = TruncatedSeries<T>::variable(order) * inverse(one_ru) / alpha;
    TruncatedSeries<T> g = TruncatedSeries<T>::constant(T(1), order);
    TruncatedSeries<T> wp = TruncatedSeries<T>::constant(T(1), order);
    for (std::size_t k = 1; k <= order; ++k) {
        wp = wp * winv;
        T gk = from_rational<T>(stirling[k]);
        g += (k % 2 == 0) ? wp * gk : wp * (-gk);
    }
    return e * g;
}

template <class T>
std::vector<T> generate_coeffs(const WrightParams& w, std::size_t J)
{
    std::vector<Rational> stirling = stirling_coeffs(J + 1);
    T kappa = from_rational<T>(w.kappa());
    T thp = from_shift<T>(w.theta_prime());
    TruncatedSeries<T> num = gamma_factor_series<T>(kappa, thp, J, stirling);
    TruncatedSeries<T> den = gamma_factor_series<T>(T(1), T(1), J, stirling);
    for (const auto& u : w.upper()) {
        num = num * gamma_factor_series<T>(from_rational<T>(u.scale), from_shift<T>(u.shift), J, stirling);
    }
    for (const auto& l : w.lower()) {
        den = den * gamma_factor_series<T>(from_rational<T>(l.scale), from_shift<T>(l.shift), J, stirling);
    }
    TruncatedSeries<T> prod = num / den;

    std::vector<T> C(J + 1);
    T kp(1);
    for (std::size_t j = 0; j <= J; ++j) {
        C[j] = prod[j] * kp;
        kp *= kappa;
    }
    std::vector<T> c(J + 1, T(0));
    c[0] = T(1);
    if (J == 0) {
        return c;
    }
    auto bern = gen_bernoulli_table<T>(J - 1, J >= 2 ? J - 2 : 0, thp);
    for (std::size_t j = 1; j <= J; ++j) {
        T acc = C[j];
        for (std::size_t k = 1; k + 1 <= j; ++k) {
            T term = from_rational<T>(Rational(binomial(static_cast<long>(j - 1), static_cast<long>(k)))) *
                     c[j - k] * bern[j - 1 - k][k];
            acc = (k % 2 == 0) ? acc - term : acc + term;
        }
        c[j] = acc;
    }
    return c;
}

inline std::string cache_key(const WrightParams& w, std::size_t J, bool rational, unsigned digits)
{
    return w.describe() + "|" + std::to_string(J) + "|" + (rational ? "q" : std::to_string(digits));
}

inline std::shared_mutex& cache_mutex()
{
    static std::shared_mutex m;
    return m;
}

inline std::map<std::string, std::shared_ptr<const CoefficientTable>>& cache()
{
    static std::map<std::string, std::shared_ptr<const CoefficientTable>> c;
    return c;
}

} // namespace detail

// Normalised coefficients c_0..c_J of the inverse factorial expansion,
// generated from the large-s expansion of the gamma-function ratio.  Exact
// rational arithmetic is used when all shifts are real; otherwise complex
// arithmetic at 10 J + 30 digits.  The c_j values are returned at `digits`.
inline std::shared_ptr<const CoefficientTable> inverse_factorial_coeffs(const WrightParams& w, std::size_t J,
                                                                       unsigned digits = kDefaultDigits)
{
    if (w.kappa() <= 0) {
        throw DomainError("inverse factorial coefficients require kappa > 0");
    }
    bool rational = w.is_real();
    std::string key = detail::cache_key(w, J, rational, digits);
    {
        std::shared_lock lock(detail::cache_mutex());
        auto it = detail::cache().find(key);
        if (it != detail::cache().end()) {
            return it->second;
        }
    }
    auto t = std::make_shared<CoefficientTable>();
    t->params = w;
    t->order = J;
    t->digits = digits;
    t->rational = rational;
    if (rational) {
        t->exact = detail::generate_coeffs<Rational>(w, J);
        WorkingPrecision wp(digits);
        for (const auto& q : t->exact) {
            t->c.emplace_back(to_real(q));
        }
        t->A0 = leading_A0(w);
    } else {
        std::vector<Complex> raw;
        {
            WorkingPrecision wp(static_cast<unsigned>(10 * J + 30));
            raw = detail::generate_coeffs<Complex>(w, J);
        }
        WorkingPrecision wp(digits);
        for (const auto& z : raw) {
            t->c.emplace_back(at_working(z.re), at_working(z.im));
        }
        t->A0 = leading_A0(w);
    }
    std::unique_lock lock(detail::cache_mutex());
    auto [it, inserted] = detail::cache().emplace(key, std::move(t));
    return it->second;
}

// c_1 = kappa/2 (A + B/6) with
//   A = sum a(a-1)/alpha - sum b(b-1)/beta - (theta/kappa)(1 - theta),
//   B = sum 1/alpha - sum 1/beta + 1/kappa - 1.
inline ComplexRational c1_closed_form(const WrightParams& w)
{
    if (w.kappa() <= 0) {
        throw DomainError("c_1 requires kappa > 0");
    }
    ComplexRational A;
    Rational B = Rational(1) / w.kappa() - 1;
    for (const auto& u : w.upper()) {
        A = A + u.shift * (u.shift - ComplexRational(1)) / u.scale;
        B += Rational(1) / u.scale;
    }
    for (const auto& l : w.lower()) {
        A = A - l.shift * (l.shift - ComplexRational(1)) / l.scale;
        B -= Rational(1) / l.scale;
    }
    A = A - w.theta() * (ComplexRational(1) - w.theta()) / w.kappa();
    return (A + ComplexRational(B / 6)) * ComplexRational(w.kappa() / 2);
}

// Closed forms of c_1, c_2, c_3 for 0Psi1 with 1/Gamma(a n + b).
template <class T>
T psi01_cj_closed(const T& a, const T& b, int j)
{
    if (a == T(0)) {
        throw DomainError("psi01_cj_closed: a = 0");
    }
    auto n = [](long v) { return T(v); };
    T b2 = b * b;
    T b3 = b2 * b;
    T a2 = a * a;
    T a3 = a2 * a;
    T a4 = a3 * a;
    T base = (n(2) + a) * (n(1) + n(2) * a);
    switch (j) {
    case 0:
        return T(1);
    case 1:
        return -(base - n(12) * b * (n(1) + a - b)) / (n(24) * a);
    case 2:
        return (base * (n(2) - n(19) * a + n(2) * a2) + n(24) * b * (n(1) + a) * (n(2) + n(7) * a - n(6) * a2) -
                n(24) * b2 * (n(4) - n(5) * a - n(20) * a2) - n(96) * b3 * (n(1) + n(5) * a) + n(144) * b2 * b2) /
               (n(1152) * a2);
    case 3:
        return (base * (n(556) + n(1628) * a - n(9093) * a2 + n(1628) * a3 + n(556) * a4) -
                n(180) * b * (n(1) + a) * (n(12) - n(172) * a - n(417) * a2 + n(516) * a3 - n(20) * a4) -
                n(180) * b2 * (n(76) + n(392) * a - n(567) * a2 - n(1288) * a3 + n(364) * a4) +
                n(1440) * b3 * (n(8) - n(63) * a - n(147) * a2 + n(112) * a3) +
                n(10800) * b2 * b2 * (n(2) + n(7) * a - n(14) * a2) - n(8640) * b3 * b2 * (n(1) - n(7) * a) -
                n(8640) * b3 * b3) /
               (n(414720) * a3);
    default:
        throw UnsupportedError("psi01_cj_closed: only j <= 3");
    }
}

// Closed forms of c_1, c_2, c_3 for 1Psi0 with Gamma(sigma n + delta).  The
// linear delta term of c_2 is -24 delta (6 + 41 sigma + 41 sigma^2 + 6 sigma^3).
template <class T>
T psi10_cj_closed(const T& s, const T& d, int j)
{
    auto n = [](long v) { return T(v); };
    T s2 = s * s;
    T s3 = s2 * s;
    T s4 = s3 * s;
    T s5 = s4 * s;
    T s6 = s5 * s;
    T d2 = d * d;
    T d3 = d2 * d;
    T d4 = d3 * d;
    switch (j) {
    case 0:
        return T(1);
    case 1:
        return (n(2) + n(7) * s + n(2) * s2 - n(12) * d * (n(1) + s) + n(12) * d2) / (n(24) * s);
    case 2:
        return (n(4) + n(172) * s + n(417) * s2 + n(172) * s3 + n(4) * s4 -
                n(24) * d * (n(6) + n(41) * s + n(41) * s2 + n(6) * s3) + n(120) * d2 * (n(4) + n(11) * s + n(4) * s2) -
                n(480) * d3 * (n(1) + s) + n(144) * d4) /
               (n(1152) * s2);
    case 3:
        return ((n(-1112) + n(9636) * s + n(163734) * s2 + n(336347) * s3 + n(163734) * s4 + n(9636) * s5 -
                 n(1112) * s6) -
                d * (n(3600) + n(220320) * s + n(929700) * s2 + n(929700) * s3 + n(220320) * s4 + n(3600) * s5) +
                d2 * (n(65520) + n(715680) * s + n(1440180) * s2 + n(715680) * s3 + n(65520) * s4) -
                d3 * (n(161280) + n(816480) * s + n(816480) * s2 + n(161280) * s3) +
                d4 * (n(151200) + n(378000) * s + n(151200) * s2) - n(60480) * d4 * d * (n(1) + s) +
                n(8640) * d4 * d2) /
               (n(414720) * s3);
    default:
        throw UnsupportedError("psi10_cj_closed: only j <= 3");
    }
}

// (b)_j (b - 1/2)_j / j!, the normalised coefficients at sigma = 1/2.
template <class T>
T aj_half_ratio(const T& b, std::size_t j)
{
    return pochhammer(b, j) * pochhammer(b - T(1) / T(2), j) / detail::factorial<T>(j);
}

// A_j(1/2) = 2 sqrt(pi) (b)_j (b - 1/2)_j / j!
inline Complex aj_half_closed(const ComplexRational& b, std::size_t j)
{
    Complex r = 2 * sqrt(pi());
    if (b.is_real()) {
        return r * Complex(to_real(aj_half_ratio(b.re, j)));
    }
    return r * aj_half_ratio(b.value(), j);
}

} // namespace wright

#endif
