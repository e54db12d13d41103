#include <random>

#include <gtest/gtest.h>

#include "wright/coefficients/coefficients.hpp"
#include "wright/stokes/stokes.hpp"

using namespace wright;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

} // namespace

TEST(Reversion, KnownCoefficients)
{
    auto tau = wtau_reversion(8);
    EXPECT_EQ(tau[0], 1);
    EXPECT_EQ(tau[1], 1);
    EXPECT_EQ(tau[2], q(1, 3));
    EXPECT_EQ(tau[3], q(1, 36));
    EXPECT_EQ(tau[4], q(-1, 270));
    EXPECT_EQ(tau[5], q(1, 4320));
}

TEST(Reversion, SatisfiesMapping)
{
    const std::size_t K = 14;
    auto u = wtau_u_series(K);
    // tau - log tau - 1 = u - log(1 + u)
    auto one_u = u;
    one_u[0] += 1;
    auto lhs = u - log(one_u);
    for (std::size_t k = 0; k <= K; ++k) {
        EXPECT_EQ(lhs[k], k == 2 ? q(1, 2) : Rational(0)) << k;
    }
}

TEST(StokesKernel, LeadingCoefficientAndResidual)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(1, 23);
    std::uniform_int_distribution<int> gn(-60, 30);
    for (int trial = 0; trial < 50; ++trial) {
        Rational sigma = q(num(rng), 24);
        Rational mu = (1 - sigma) / sigma;
        Rational g = q(gn(rng), 12);
        auto G = g_coeffs(mu, g, 4); // throws if the w^-1 residue is not -1
        EXPECT_EQ(G[0], -g + q(1, 6) + mu / 2);
    }
}

TEST(StokesKernel, ClosedFormsOnGrid)
{
    for (int i = 1; i <= 20; ++i) {
        Rational sigma = q(i, 21);
        Rational mu = (1 - sigma) / sigma;
        for (int j = 0; j < 20; ++j) {
            Rational g = q(j - 12, 4);
            auto G = g_coeffs(mu, g, 4);
            for (int k : {0, 2, 4}) {
                ASSERT_EQ(G[k], g_closed(mu, k, g)) << to_string(sigma) << " " << to_string(g) << " " << k;
            }
        }
    }
}

TEST(StokesKernel, HalfClosedForms)
{
    EXPECT_EQ(g_half_closed(8, Rational(0)), q(-4032746, 231000));
    EXPECT_EQ(g_half_closed(6, Rational(0)), q(-3626, 350));
    EXPECT_THROW(g_half_closed(10, Rational(0)), UnsupportedError);
    EXPECT_THROW(g_closed(Rational(1), 6, Rational(0)), UnsupportedError);
    for (int j = -16; j <= 8; ++j) {
        Rational g = q(j, 6);
        auto G = g_coeffs(Rational(1), g, 8);
        Rational scale = 1;
        for (int k = 0; k <= 8; ++k) {
            if (k % 2 == 0) {
                ASSERT_EQ(scale * G[k], g_half_closed(k, g)) << to_string(g) << " " << k;
            }
            scale *= 6;
        }
    }
}

TEST(StokesKernel, FloatModeAgrees)
{
    WorkingPrecision wp(50);
    Rational mu = q(5, 2);
    Rational g = q(-7, 3);
    auto exact = g_coeffs(mu, g, 10);
    auto fl = g_coeffs(to_real(mu), to_real(g), 10);
    for (int k = 0; k <= 10; ++k) {
        EXPECT_LT(to_double(abs(fl[k] - to_real(exact[k]))), 1e-45 * (1 + std::fabs(to_double(to_real(exact[k])))));
    }
}

TEST(Truncation, PrintedIndices)
{
    WorkingPrecision wp(40);
    Real X(25);
    auto t1 = optimal_truncation(q(1, 2), q(3, 4), X);
    EXPECT_EQ(t1.m_o, 24);
    EXPECT_LT(to_double(abs(t1.alpha)), 1e-38);
    auto t2 = optimal_truncation(q(1, 2), q(2, 3), X);
    EXPECT_EQ(t2.m_o, 24);
    EXPECT_LT(to_double(abs(t2.alpha + Real(1) / 6)), 1e-38);
    // tie: alpha = +1/2
    auto t3 = optimal_truncation(q(1, 2), Rational(0), X);
    EXPECT_EQ(t3.m_o, 26);
    EXPECT_LT(to_double(abs(t3.alpha - Real(1) / 2)), 1e-38);
    EXPECT_THROW(optimal_truncation(q(1, 2), q(3, 4), Real(0)), DomainError);
}

TEST(Truncation, HalfSigmaFormConsistent)
{
    // m_o = X + 2b - 3/2 + alpha at sigma = 1/2, delta = 1 - b
    WorkingPrecision wp(40);
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> xd(5, 200);
    for (int trial = 0; trial < 200; ++trial) {
        Rational b = q(trial % 17 - 5, 6);
        Real X(xd(rng));
        auto t = optimal_truncation(q(1, 2), 1 - b, X);
        Real v = X + 2 * to_real(b) - Real(3) / 2;
        EXPECT_LT(to_double(abs(Real(t.m_o) - v - t.alpha)), 1e-35);
        EXPECT_LE(to_double(abs(t.alpha)), 0.5);
        EXPECT_GT(to_double(t.alpha), -0.5);
    }
}

TEST(StokesTableTest, GammaAndB)
{
    WorkingPrecision wp(50);
    Rational sigma = q(1, 3);
    Rational delta = q(-1, 4);
    auto w = psi10_params(sigma, delta);
    auto c = inverse_factorial_coeffs(w, 6, 50);
    std::vector<Complex> A;
    for (std::size_t j = 0; j <= 6; ++j) {
        A.push_back(c->A(j));
    }
    auto t = make_stokes_table(sigma, delta, Real(30), A, 6);
    Real mu = to_real(t.mu);
    for (std::size_t j = 0; j <= 6; ++j) {
        // defining form delta (1 + mu) - 1/2 + mu m_o - j - X
        Real e = to_real(delta) * (1 + mu) - Real(1) / 2 + mu * t.m_o - static_cast<long>(j) - Real(30);
        EXPECT_LT(to_double(abs(t.gamma[j] - e)), 1e-45);
    }
    Complex b0 = A[0] * Complex(-t.gamma[0] + Real(1) / 6 + mu / 2);
    EXPECT_LT(to_double(abs(t.B[0] - b0)), 1e-45);

    // Same B_j through the generic routine and through closed-form G's.
    auto B = b_coeffs(mu, std::vector<Real>{A[0].re, A[1].re, A[2].re}, std::vector<Real>(t.gamma.begin(), t.gamma.begin() + 3), 2);
    for (std::size_t j = 0; j <= 2; ++j) {
        EXPECT_LT(to_double(abs(B[j] - t.B[j].re)), 1e-40 * (1 + to_double(abs(B[j]))));
        Real closed = 0;
        Real f = 1;
        for (std::size_t k = 0; k <= j; ++k) {
            closed += f * A[j - k].re * g_closed(mu, static_cast<int>(2 * k), t.gamma[j - k]);
            f *= -2 * (Real(1) / 2 + static_cast<long>(k));
        }
        EXPECT_LT(to_double(abs(closed - B[j])), 1e-40 * (1 + to_double(abs(B[j]))));
    }
}

TEST(StokesTableTest, HalfSigmaAgainstScaledClosedForms)
{
    // sigma = 1/2, b = 1: A_j = 2 sqrt(pi) (1)_j (1/2)_j / j!
    WorkingPrecision wp(50);
    const std::size_t J = 4;
    std::vector<Complex> A;
    for (std::size_t j = 0; j <= J; ++j) {
        A.push_back(aj_half_closed(Rational(1), j));
    }
    auto t = make_stokes_table(q(1, 2), Rational(0), Real(30.3), A, J);
    for (std::size_t j = 0; j <= J; ++j) {
        Real closed = 0;
        Real f = 1;
        for (std::size_t k = 0; k <= j; ++k) {
            closed += f * A[j - k].re * g_half_closed(static_cast<int>(2 * k), t.gamma[j - k]) /
                      pow(Real(6), static_cast<long>(2 * k));
            f *= -2 * (Real(1) / 2 + static_cast<long>(k));
        }
        EXPECT_LT(to_double(abs(closed - t.B[j].re)), 1e-40 * (1 + to_double(abs(closed)))) << j;
    }
}
