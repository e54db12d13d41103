#ifndef WRIGHT_SERIES_EVAL_HPP
#define WRIGHT_SERIES_EVAL_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

#include "wright/numerics/gamma.hpp"
#include "wright/numerics/point.hpp"
#include "wright/series/params.hpp"

namespace wright {

struct SeriesOptions {
    // Hard cap on working precision reached by cancellation escalation.
    unsigned max_digits = 4000;
    std::size_t max_terms = 200000;
};

struct EvalResult {
    Complex value;
    std::size_t terms = 0;
    unsigned working_digits = 0;
    // Heuristic bound on the neglected tail (absolute).
    Real tail_bound;
    // log10(peak |term| / |value|): digits lost to cancellation.
    double cancellation_digits = 0;
};

namespace detail {

// Coefficient g(n) of a power series sum g(n) z^n / n! at the working
// precision, plus the growth data used by the stopping rule:
// |g(n+1)/g(n)| / (n+1) ~ growth_h / n^growth_kappa.
struct SeriesTerms {
    std::function<Complex(std::size_t)> coefficient;
    double growth_h;
    double growth_kappa;
};

// Index past which the terms are certainly decreasing.
inline double decay_onset(double h, double kappa, double modulus, unsigned work)
{
    double hz = h * modulus;
    if (hz == 0) {
        return 8;
    }
    if (kappa > 0) {
        return 2.0 * std::pow(hz, 1.0 / kappa) + 8;
    }
    // kappa == 0: geometric with ratio hz < 1.
    return 8 + work * std::log(10.0) / -std::log(hz);
}

struct SumPass {
    Complex sum;
    std::size_t terms;
    Real peak;
    Real tail;
};

inline SumPass sum_pass(const SeriesTerms& st, const ExactPoint& z, unsigned work, std::size_t max_terms)
{
    Complex zv = z.value();
    double modulus = to_double(abs(zv));
    double onset = decay_onset(st.growth_h, st.growth_kappa, modulus, work);
    Real threshold = pow(Real(10), -static_cast<long>(work));

    SumPass r{Complex(0), 0, Real(0), Real(0)};
    Complex power(1); // z^n / n!
    Real max_partial = 0;
    std::size_t peak_index = 0;
    int small_run = 0;
    Real recent_max = 0;
    for (std::size_t n = 0;; ++n) {
        if (n >= max_terms) {
            throw PrecisionCeilingError("series did not converge within the term limit");
        }
        Complex t = st.coefficient(n) * power;
        r.sum += t;
        Real at = abs(t);
        if (at > r.peak) {
            r.peak = at;
            peak_index = n;
        }
        Real ap = abs(r.sum);
        if (ap > max_partial) {
            max_partial = ap;
        }
        bool small = n > peak_index && static_cast<double>(n) >= onset && at <= threshold * max_partial;
        if (small) {
            ++small_run;
            recent_max = std::max(recent_max, at);
        } else {
            small_run = 0;
            recent_max = 0;
        }
        if (small_run >= 8) {
            r.terms = n + 1;
            r.tail = 2 * recent_max;
            return r;
        }
        power *= zv;
        power /= Complex(static_cast<long>(n + 1));
    }
}

inline EvalResult sum_with_escalation(const SeriesTerms& st, const ExactPoint& z, unsigned digits,
                                      const SeriesOptions& opts)
{
    unsigned work = digits + 10;
    for (;;) {
        if (work > opts.max_digits) {
            throw PrecisionCeilingError("cancellation requires more than " + std::to_string(opts.max_digits) +
                                        " working digits");
        }
        SumPass pass = [&] {
            WorkingPrecision wp(work);
            return sum_pass(st, z, work, opts.max_terms);
        }();
        double lp = log10_abs(pass.peak);
        double lv = log10_abs(abs(pass.sum));
        double cancel = (pass.peak == 0) ? 0.0 : (std::isfinite(lv) ? std::max(0.0, lp - lv) : double(work));
        auto needed = static_cast<unsigned>(std::ceil(digits + cancel + 10));
        if (needed <= work) {
            EvalResult out;
            WorkingPrecision wp(digits);
            out.value = Complex(at_working(pass.sum.re), at_working(pass.sum.im));
            out.terms = pass.terms;
            out.working_digits = work;
            out.tail_bound = at_working(pass.tail);
            out.cancellation_digits = cancel;
            return out;
        }
        work = needed;
    }
}

inline Complex gamma_factor(const GammaPair& gp, std::size_t n)
{
    Real s = to_real(gp.scale) * static_cast<long>(n);
    if (gp.shift.is_real()) {
        return Complex(gamma(s + to_real(gp.shift.re)));
    }
    return gamma(Complex(s + to_real(gp.shift.re), to_real(gp.shift.im)));
}

inline Complex rgamma_factor(const GammaPair& gp, std::size_t n)
{
    Real s = to_real(gp.scale) * static_cast<long>(n);
    if (gp.shift.is_real()) {
        return Complex(rgamma(s + to_real(gp.shift.re)));
    }
    return rgamma(Complex(s + to_real(gp.shift.re), to_real(gp.shift.im)));
}

} // namespace detail

// Defining series of pPsi_q(z), summed to `digits` correct digits relative to
// the result.  Working precision is raised automatically to absorb
// cancellation between large terms.
inline EvalResult eval_series(const WrightParams& w, const ExactPoint& z, unsigned digits,
                              const SeriesOptions& opts = {})
{
    if (!w.satisfies_regularity()) {
        throw ParameterError("defining series has a singular numerator gamma function");
    }
    auto conv = classify_convergence(w);
    double h = 0;
    {
        WorkingPrecision wp(30);
        h = to_double(w.h());
        if (conv.kind == Convergence::divergent && !z.is_zero()) {
            throw DivergentSeriesError("kappa < 0: the defining series diverges for z != 0");
        }
        if (conv.kind == Convergence::finite_radius && !(z.modulus() < *conv.radius)) {
            throw DivergentSeriesError("kappa = 0: |z| must be below the radius of convergence 1/h");
        }
    }
    detail::SeriesTerms st;
    st.growth_h = h;
    st.growth_kappa = to_double(to_real(w.kappa()));
    st.coefficient = [&w](std::size_t n) {
        Complex g(1);
        for (const auto& u : w.upper()) {
            g *= detail::gamma_factor(u, n);
        }
        for (const auto& l : w.lower()) {
            g *= detail::rgamma_factor(l, n);
        }
        return g;
    };
    return detail::sum_with_escalation(st, z, digits, opts);
}

// Defining series of the generalised Bessel function, any a > -1.  Terms at
// poles of Gamma(a n + b) vanish exactly.
inline EvalResult eval_bessel_series(const BesselParams& bp, const ExactPoint& z, unsigned digits,
                                     const SeriesOptions& opts = {})
{
    check_bessel(bp);
    detail::SeriesTerms st;
    double a = to_double(Real(bp.a));
    // Growth of the terms: ratio ~ |a|^{-a} |z| / n^{1+a}.
    st.growth_h = a == 0 ? 1.0 : std::pow(std::fabs(a), -a);
    st.growth_kappa = 1 + a;
    GammaPair gp{bp.a, bp.b};
    st.coefficient = [gp](std::size_t n) {
        Real s = to_real(gp.scale) * static_cast<long>(n);
        if (gp.shift.is_real()) {
            return Complex(rgamma(s + to_real(gp.shift.re)));
        }
        return rgamma(Complex(s + to_real(gp.shift.re), to_real(gp.shift.im)));
    };
    return detail::sum_with_escalation(st, z, digits, opts);
}

// Both sides of the reflection split of 0Psi1 with a = -sigma:
//   0Psi1(z) = (1/2pi) { e^{i pi theta} 1Psi0(z e^{i pi sigma}) + e^{-i pi theta} 1Psi0(z e^{-i pi sigma}) },
// with 1Psi0 = 1Psi0((sigma, 1 - b)) and theta = 1/2 - b.
struct SplitPair {
    Complex direct;
    Complex split;
};

inline SplitPair psi01_split(const Rational& sigma, const ComplexRational& b, const ExactPoint& z, unsigned digits)
{
    if (!(sigma > 0 && sigma < 1)) {
        throw ParameterError("psi01_split requires 0 < sigma < 1");
    }
    BesselParams bp{Rational(-sigma), b};
    WrightParams assoc = associated_psi10(bp);
    EvalResult direct = eval_bessel_series(bp, z, digits);
    // The two 1Psi0 values may be much larger than their combination; redo
    // them with the lost digits added until the combination is resolved.
    unsigned extra = 5;
    for (;;) {
        EvalResult plus = eval_series(assoc, z.rotated(sigma), digits + extra);
        EvalResult minus = eval_series(assoc, z.rotated(-sigma), digits + extra);
        WorkingPrecision wp(digits + extra);
        Complex theta = bp.theta().value();
        Complex ipt = Complex(Real(0), pi()) * theta;
        Complex split = (exp(ipt) * plus.value + exp(-ipt) * minus.value) / Complex(2 * pi());
        double lost = std::max(log10_abs(abs(plus.value)), log10_abs(abs(minus.value))) - log10_abs(abs(split));
        if (!std::isfinite(lost) || lost + 5 <= extra || extra > 4000) {
            return {direct.value, split};
        }
        extra = static_cast<unsigned>(std::ceil(lost)) + 5;
    }
}

} // namespace wright

#endif
