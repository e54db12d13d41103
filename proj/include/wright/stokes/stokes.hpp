#ifndef WRIGHT_STOKES_STOKES_HPP
#define WRIGHT_STOKES_STOKES_HPP

#include <cmath>
#include <type_traits>
#include <vector>

#include "wright/numerics/complex.hpp"
#include "wright/numerics/gamma.hpp"
#include "wright/numerics/series.hpp"

namespace wright {

// u(w) with tau = 1 + u, the branch of  w^2/2 = tau - log tau - 1  with
// w ~ tau - 1, through w^order.
template <class T = Rational>
TruncatedSeries<T> wtau_u_series(std::size_t order)
{
    // w = u D(u)^{1/2},  D(u) = 2 sum (-u)^n / (n + 2)
    TruncatedSeries<T> D(order);
    for (std::size_t n = 0; n <= order; ++n) {
        T v = T(2) / T(static_cast<long>(n + 2));
        D[n] = (n % 2 == 0) ? v : -v;
    }
    TruncatedSeries<T> wu = TruncatedSeries<T>::variable(order) * pow(D, T(1) / T(2));
    return revert(wu);
}

// tau(w) = 1 + w + w^2/3 + w^3/36 - w^4/270 + ...
template <class T = Rational>
TruncatedSeries<T> wtau_reversion(std::size_t order)
{
    TruncatedSeries<T> u = wtau_u_series<T>(order);
    u[0] += T(1);
    return u;
}

// Regular coefficients G_0..G_K in
//   mu tau^{gamma-1} / (1 - tau^mu) dtau/dw = -1/w + sum G_k w^k.
template <class T>
std::vector<T> g_coeffs(const T& mu, const T& gamma, std::size_t K)
{
    std::size_t N = K + 2;
    TruncatedSeries<T> u = wtau_u_series<T>(N);
    TruncatedSeries<T> one_u = u;
    one_u[0] += T(1);
    TruncatedSeries<T> L = log(one_u);
    TruncatedSeries<T> A = exp(L * (gamma - T(1)));
    TruncatedSeries<T> dtau = derivative(u);
    // (tau^mu - 1) / (mu w)
    TruncatedSeries<T> Q = divide_by_variable(exp(L * mu) - TruncatedSeries<T>::constant(T(1), N)) / mu;
    TruncatedSeries<T> P = A.truncated(N - 1) * dtau / Q;
    if (P[0] != T(1)) {
        if constexpr (std::is_same_v<T, Rational>) {
            throw InternalError("w^-1 residual of the Stokes kernel is not -1");
        } else {
            if (abs(P[0] - T(1)) > pow(Real(10), -static_cast<long>(working_digits()) + 5)) {
                throw InternalError("w^-1 residual of the Stokes kernel is not -1");
            }
        }
    }
    std::vector<T> G(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        G[k] = -P[k + 1];
    }
    return G;
}

// Closed forms of G_0, G_2, G_4 for general mu.
template <class T>
T g_closed(const T& mu, int k, const T& g)
{
    auto n = [](long v) { return T(v); };
    T m2 = mu * mu;
    T m4 = m2 * m2;
    T g2 = g * g;
    T g3 = g2 * g;
    switch (k) {
    case 0:
        return -g + n(1) / n(6) + mu / n(2);
    case 2:
        return -g3 / n(6) + (n(1) + mu) * g2 / n(4) - (n(1) + n(3) * mu + m2) * g / n(12) +
               (n(2) + n(45) * mu + n(45) * m2) / n(1080);
    case 4:
        return -g3 * g2 / n(120) + (n(5) + n(3) * mu) * g2 * g2 / n(144) -
               (n(10) + n(15) * mu + n(3) * m2) * g3 / n(216) + (n(3) + n(10) * mu + n(5) * m2) * g2 / n(144) -
               (n(5) + n(90) * mu + n(100) * m2 - n(6) * m4) * g / n(4320) +
               (n(-13) + n(21) * mu + n(126) * m2 - n(42) * m4) / n(36288);
    default:
        throw UnsupportedError("g_closed: k must be 0, 2 or 4");
    }
}

// Scaled closed forms 6^k G_k at mu = 1, k = 0, 2, 4, 6, 8.
template <class T>
T g_half_closed(int k, const T& g)
{
    auto poly = [&g](std::initializer_list<long> c, long den) {
        T r(0);
        T gp(1);
        for (long v : c) {
            r += T(v) * gp;
            gp *= g;
        }
        return r / T(den);
    };
    switch (k) {
    case 0:
        return T(2) / T(3) - g;
    case 2:
        return poly({46, -225, 270, -90}, 15);
    case 4:
        return poly({230, -3969, 11340, -11760, 5040, -756}, 70);
    case 6:
        return poly({-3626, -17781, 183330, -397530, 370440, -170100, 37800, -3240}, 350);
    case 8:
        return poly({-4032746, 43924815, 88280280, -743046480, 1353607200, -1160830440, 541870560, -141134400,
                     19245600, -1069200},
                    231000);
    default:
        throw UnsupportedError("g_half_closed: k must be even and at most 8");
    }
}

struct Truncation {
    long m_o;
    Real alpha;
};

// Optimal truncation index of the algebraic expansion on a Stokes line,
// m_o = (sigma/kappa)(X + 3/2) - (1 + 2 delta)/(2 kappa) + alpha with m_o the
// nearest integer; a tie takes alpha = +1/2.
inline Truncation optimal_truncation(const Rational& sigma, const Rational& delta, const Real& X)
{
    Rational kappa = 1 - sigma;
    Real v0 = to_real(sigma / kappa) * (X + Real(3) / 2) - to_real((1 + 2 * delta) / (2 * kappa));
    Real fl = floor(v0);
    Real frac = v0 - fl;
    Real m = frac >= Real(1) / 2 ? fl + 1 : fl;
    if (m < 1) {
        throw DomainError("optimal truncation index below 1: asymptotic regime not reached");
    }
    return {m.convert_to<long>(), m - v0};
}

// B_0..B_J from A_0..A_J and gamma_0..gamma_J; G_{2k} at gamma_{j-k}.
template <class T>
std::vector<T> b_coeffs(const T& mu, const std::vector<T>& A, const std::vector<T>& gamma, std::size_t J)
{
    if (A.size() < J + 1 || gamma.size() < J + 1) {
        throw DomainError("b_coeffs: need J + 1 values of A and gamma");
    }
    std::vector<std::vector<T>> G(J + 1);
    for (std::size_t i = 0; i <= J; ++i) {
        G[i] = g_coeffs(mu, gamma[i], 2 * (J - i));
    }
    std::vector<T> B(J + 1, T(0));
    for (std::size_t j = 0; j <= J; ++j) {
        T f(1); // (-2)^k (1/2)_k
        for (std::size_t k = 0; k <= j; ++k) {
            B[j] += f * A[j - k] * G[j - k][2 * k];
            f *= T(-2) * (T(1) / T(2) + T(static_cast<long>(k)));
        }
    }
    return B;
}

// Everything needed to evaluate a Stokes-line expansion at one X.
struct StokesTable {
    Rational sigma;
    Rational delta;
    Rational mu;
    Real X;
    long m_o = 0;
    Real alpha;
    std::vector<Real> gamma;
    // G[j][k] = G_{k}(gamma_j), k <= 2 (J - j)
    std::vector<std::vector<Real>> G;
    std::vector<Complex> A;
    std::vector<Complex> B;
};

// gamma_j = delta (1 + mu) - 1/2 + mu m_o - j - X = mu alpha - j + 1 - 1/(2 sigma)
inline StokesTable make_stokes_table(const Rational& sigma, const Rational& delta, const Real& X,
                                     const std::vector<Complex>& A, std::size_t J)
{
    if (!(sigma > 0 && sigma < 1)) {
        throw ParameterError("Stokes table requires 0 < sigma < 1");
    }
    StokesTable t;
    t.sigma = sigma;
    t.delta = delta;
    t.mu = (1 - sigma) / sigma;
    t.X = X;
    Truncation tr = optimal_truncation(sigma, delta, X);
    t.m_o = tr.m_o;
    t.alpha = tr.alpha;
    Real mu = to_real(t.mu);
    Real shift = 1 - to_real(Rational(1) / (2 * sigma));
    for (std::size_t j = 0; j <= J; ++j) {
        t.gamma.push_back(mu * t.alpha - static_cast<long>(j) + shift);
        t.G.push_back(g_coeffs(mu, t.gamma.back(), 2 * (J - j)));
    }
    t.A.assign(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(J + 1));
    t.B.assign(J + 1, Complex(0));
    for (std::size_t j = 0; j <= J; ++j) {
        Real f(1);
        for (std::size_t k = 0; k <= j; ++k) {
            t.B[j] += A[j - k] * Complex(f * t.G[j - k][2 * k]);
            f *= -2 * (Real(1) / 2 + static_cast<long>(k));
        }
    }
    return t;
}

} // namespace wright

#endif
