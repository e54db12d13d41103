#ifndef WRIGHT_SERIES_PARAMS_HPP
#define WRIGHT_SERIES_PARAMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wright/numerics/complex.hpp"
#include "wright/numerics/rational.hpp"
#include "wright/numerics/real.hpp"

namespace wright {

// One gamma factor Gamma(scale * n + shift) of g(n).
struct GammaPair {
    Rational scale;
    ComplexRational shift;
};

enum class ParamCheck {
    // Reject numerator gamma functions that are singular at some n >= 0.
    strict,
    // Accept them: only the formal quantities (kappa, h, theta, expansion
    // coefficients) are required, not the defining series.
    formal,
};

// Parameters of pPsi_q with the derived growth quantities
//   kappa = 1 + sum beta - sum alpha,  h = prod alpha^alpha prod beta^-beta,
//   theta = sum a - sum b + (q - p)/2,  theta' = 1 - theta.
// Empty sums are zero and empty products one.
class WrightParams {
public:
    WrightParams() = default;

    const std::vector<GammaPair>& upper() const { return upper_; }
    const std::vector<GammaPair>& lower() const { return lower_; }
    std::size_t p() const { return upper_.size(); }
    std::size_t q() const { return lower_.size(); }

    const Rational& kappa() const { return kappa_; }
    const ComplexRational& theta() const { return theta_; }
    const ComplexRational& theta_prime() const { return theta_prime_; }

    // h at the working precision.
    Real h() const
    {
        Real r = 1;
        for (const auto& u : upper_) {
            Real a = to_real(u.scale);
            r *= pow(a, a);
        }
        for (const auto& l : lower_) {
            Real b = to_real(l.scale);
            r /= pow(b, b);
        }
        return r;
    }

    // All shifts real, so every derived quantity is real.
    bool is_real() const
    {
        for (const auto& u : upper_) {
            if (!u.shift.is_real()) {
                return false;
            }
        }
        for (const auto& l : lower_) {
            if (!l.shift.is_real()) {
                return false;
            }
        }
        return true;
    }

    bool satisfies_regularity() const
    {
        for (const auto& u : upper_) {
            if (u.shift.is_real()) {
                // alpha n + a in {0, -1, -2, ...} for some n >= 0 ?
                // Equivalent to a + alpha n = -m with m >= 0 integer.
                const Rational& a = u.shift.re;
                if (a > 0 && denominator(a) == 1) {
                    continue;
                }
                for (long n = 0;; ++n) {
                    Rational v = u.scale * n + a;
                    if (v > 0) {
                        break;
                    }
                    if (denominator(v) == 1) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    std::string describe() const
    {
        auto list = [](const std::vector<GammaPair>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i != 0) {
                    s += ", ";
                }
                s += "(" + to_string(v[i].scale) + ", " + to_string(v[i].shift) + ")";
            }
            return s.empty() ? std::string("--") : s;
        };
        return std::to_string(p()) + "Psi" + std::to_string(q()) + "[" + list(upper_) + "; " + list(lower_) + "]";
    }

    friend WrightParams derive_params(std::vector<GammaPair> upper, std::vector<GammaPair> lower, ParamCheck check);

private:
    std::vector<GammaPair> upper_;
    std::vector<GammaPair> lower_;
    Rational kappa_ = 1;
    ComplexRational theta_;
    ComplexRational theta_prime_;
};

inline WrightParams derive_params(std::vector<GammaPair> upper, std::vector<GammaPair> lower,
                                  ParamCheck check = ParamCheck::strict)
{
    WrightParams w;
    Rational kappa = 1;
    ComplexRational theta(Rational(static_cast<long>(lower.size()) - static_cast<long>(upper.size()), 2));
    for (const auto& u : upper) {
        if (u.scale <= 0) {
            throw ParameterError("upper scale alpha_r must be positive");
        }
        kappa -= u.scale;
        theta = theta + u.shift;
    }
    for (const auto& l : lower) {
        if (l.scale <= 0) {
            throw ParameterError("lower scale beta_r must be positive");
        }
        kappa += l.scale;
        theta = theta - l.shift;
    }
    w.upper_ = std::move(upper);
    w.lower_ = std::move(lower);
    w.kappa_ = kappa;
    w.theta_ = theta;
    w.theta_prime_ = ComplexRational(1) - theta;
    if (check == ParamCheck::strict && !w.upper_.empty() && !w.satisfies_regularity()) {
        throw ParameterError("a numerator gamma function Gamma(alpha n + a) is singular for some n >= 0");
    }
    return w;
}

// Generalised Bessel function 0Psi1(z) = sum z^n / (Gamma(a n + b) n!),
// a > -1.  Negative a is outside the pPsi_q parameter class, so the pair is
// kept separately and mapped to the appropriate Wright function on demand.
struct BesselParams {
    Rational a;
    ComplexRational b;

    Rational kappa() const { return 1 + a; }
    // theta = 1/2 - b
    ComplexRational theta() const { return ComplexRational(Rational(1, 2)) - b; }
};

inline void check_bessel(const BesselParams& bp)
{
    if (bp.a <= -1) {
        throw ParameterError("generalised Bessel function requires a > -1");
    }
}

// 0Psi1 with a > 0 as a Wright function.
inline WrightParams psi01_params(const Rational& a, const ComplexRational& b)
{
    if (a <= 0) {
        throw ParameterError("0Psi1 as a Wright function needs a > 0");
    }
    return derive_params({}, {GammaPair{a, b}});
}

// 1Psi0((sigma, delta); --; z) = sum Gamma(sigma n + delta) z^n / n!.
inline WrightParams psi10_params(const Rational& sigma, const ComplexRational& delta, ParamCheck check = ParamCheck::strict)
{
    return derive_params({GammaPair{sigma, delta}}, {}, check);
}

// The function 1Psi0((sigma, 1 - b)) associated with 0Psi1 when a = -sigma.
inline WrightParams associated_psi10(const BesselParams& bp, ParamCheck check = ParamCheck::strict)
{
    if (!(bp.a < 0 && bp.a > -1)) {
        throw ParameterError("associated 1Psi0 requires -1 < a < 0");
    }
    return psi10_params(-bp.a, ComplexRational(1) - bp.b, check);
}

enum class Convergence { entire, finite_radius, divergent };

struct ConvergenceInfo {
    Convergence kind;
    // 1/h when kind == finite_radius (working precision).
    std::optional<Real> radius;
};

inline ConvergenceInfo classify_convergence(const WrightParams& w)
{
    if (w.kappa() > 0) {
        return {Convergence::entire, std::nullopt};
    }
    if (w.kappa() == 0) {
        return {Convergence::finite_radius, Real(1) / w.h()};
    }
    return {Convergence::divergent, std::nullopt};
}

inline const char* to_string(Convergence c)
{
    switch (c) {
    case Convergence::entire:
        return "entire";
    case Convergence::finite_radius:
        return "finite-radius";
    case Convergence::divergent:
        return "divergent";
    }
    return "?";
}

} // namespace wright

#endif
