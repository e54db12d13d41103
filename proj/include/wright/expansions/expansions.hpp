#ifndef WRIGHT_EXPANSIONS_EXPANSIONS_HPP
#define WRIGHT_EXPANSIONS_EXPANSIONS_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "wright/coefficients/coefficients.hpp"
#include "wright/numerics/point.hpp"
#include "wright/series/eval.hpp"
#include "wright/stokes/stokes.hpp"

namespace wright {

enum class Dominance { dominant, subdominant, oscillatory };

inline const char* to_string(Dominance d)
{
    switch (d) {
    case Dominance::dominant:
        return "dominant";
    case Dominance::subdominant:
        return "subdominant";
    case Dominance::oscillatory:
        return "oscillatory";
    }
    return "?";
}

// Kinds of component a plan can contain.
//   exponential: E(z e^{2 pi i branch})
//   algebraic:   H(z e^{pi i branch}), branch = -1 or +1; branch 0 is the
//                mean of both (the positive real axis)
//   e_plus / e_minus / h_hat: the three pieces of 0Psi1 with a < 0
enum class ComponentKind { exponential, algebraic, e_plus, e_minus, h_hat, e_hat, h_opt, r_plus, negative_axis };

struct PlanComponent {
    std::string name;
    ComponentKind kind = ComponentKind::exponential;
    int branch = 0;
    Dominance dominance = Dominance::dominant;
};

struct SectorPlan {
    Real theta;
    std::string regime;
    std::vector<PlanComponent> components;
    // Flags of E+, E-, H^ for 0Psi1 with a < 0.
    int lambda = 0;
    int mu = 0;
    int nu = 0;
    long N = 0;
    bool borderline = false;
    std::string warning;

    std::string flags() const
    {
        return "(" + std::to_string(lambda) + "," + std::to_string(mu) + "," + std::to_string(nu) + ")";
    }
};

struct ComponentValue {
    std::string name;
    Complex value;
    std::size_t terms = 0;
    // Magnitude of the first omitted term (absolute).
    Real first_omitted;
};

struct ExpansionValue {
    Complex total;
    std::vector<ComponentValue> components;
    SectorPlan plan;
    // max over components of first_omitted / |total|; heuristic only.
    Real error_estimate;
    bool low_confidence = false;
};

struct ExpansionOptions {
    unsigned digits = 40;
    // Number of terms of the exponential (J) and algebraic (K) sums.  Unset
    // means: sum through the smallest term.
    std::optional<std::size_t> J;
    std::optional<std::size_t> K;
    // Highest index j of the Stokes-line and negative-axis sums.
    std::optional<std::size_t> M;
    // Size of the coefficient table used when J is chosen automatically.
    std::size_t max_order = 64;
    bool force_borderline = false;
    double eps_over_pi = 1e-6;
};

// A partial sum of an asymptotic series.
struct Truncated {
    Complex value;
    std::size_t terms = 0;
    Real first_omitted;
};

namespace detail {

// Index of the smallest entry of `mags`, or mags.size() - 1 when the entries
// are still decreasing at the end.
inline std::size_t argmin_first(const std::vector<Real>& mags)
{
    std::size_t best = 0;
    for (std::size_t i = 1; i < mags.size(); ++i) {
        if (mags[i] < mags[best]) {
            best = i;
        }
    }
    return best;
}

// Sums terms[0..n).  n defaults to one past the smallest entry of `size`,
// the magnitude used for truncation and for the first omitted term.
inline Truncated truncate_terms(const std::vector<Complex>& terms, const std::vector<Real>& size,
                                std::optional<std::size_t> n)
{
    Truncated t;
    std::size_t m = n ? *n : argmin_first(size) + 1;
    if (m > terms.size()) {
        throw DomainError("requested " + std::to_string(m) + " terms but only " + std::to_string(terms.size()) +
                          " are available");
    }
    for (std::size_t i = 0; i < m; ++i) {
        t.value += terms[i];
    }
    t.terms = m;
    t.first_omitted = m < size.size() ? size[m] : (m > 0 ? size[m - 1] : Real(0));
    return t;
}

inline Real max_relative(const std::vector<ComponentValue>& cs, const Complex& total)
{
    Real at = abs(total);
    Real r = 0;
    for (const auto& c : cs) {
        Real e = at == 0 ? c.first_omitted : c.first_omitted / at;
        if (e > r) {
            r = e;
        }
    }
    return r;
}

inline std::shared_ptr<const CoefficientTable> table_for(const WrightParams& w, std::size_t J, unsigned digits)
{
    return inverse_factorial_coeffs(w, J, digits + 10);
}

inline WrightParams assoc_params(const Rational& sigma, const ComplexRational& b)
{
    if (!(sigma > 0 && sigma < 1)) {
        throw ParameterError("0 < sigma < 1 required");
    }
    return psi10_params(sigma, ComplexRational(1) - b, ParamCheck::formal);
}

// Z = kappa (h r)^{1/kappa} e^{i phase / kappa}
inline Complex big_z(const WrightParams& w, Real r, Real phase)
{
    r = at_working(r);
    phase = at_working(phase);
    Real kappa = to_real(w.kappa());
    Real X = kappa * pow(w.h() * r, 1 / kappa);
    return Complex::polar(X, phase / kappa);
}

inline Real big_x(const Rational& sigma, Real x)
{
    x = at_working(x);
    Real kappa = 1 - to_real(sigma);
    Real h = pow(to_real(sigma), to_real(sigma));
    return kappa * pow(h * x, 1 / kappa);
}

} // namespace detail

// Z^theta e^Z sum_{j<J} A_j Z^{-j} with Z = kappa (h z)^{1/kappa}, z = r e^{i phase}
// and the phase taken as given (no reduction), so that z e^{2 pi i n} is
// reached through phase + 2 pi n.
inline Truncated E_pq(const CoefficientTable& t, Real r, Real phase, std::optional<std::size_t> J)
{
    r = at_working(r);
    phase = at_working(phase);
    const WrightParams& w = t.params;
    if (w.kappa() <= 0) {
        throw ParameterError("exponential expansion requires kappa > 0");
    }
    if (J && *J > t.order + 1) {
        throw DomainError("J exceeds the coefficient table");
    }
    Real kappa = to_real(w.kappa());
    Complex Z = detail::big_z(w, r, phase);
    Real X = abs(Z);
    std::vector<Complex> terms;
    std::vector<Real> size;
    Complex zinv = Complex(1) / Z;
    Complex p(1);
    for (std::size_t j = 0; j <= t.order; ++j) {
        terms.push_back(t.A(j) * p);
        size.push_back(abs(terms.back()));
        p *= zinv;
    }
    Truncated s = detail::truncate_terms(terms, size, J);
    Complex pref = exp(w.theta().value() * Complex(log(X), phase / kappa) + Z);
    s.value *= pref;
    s.first_omitted *= abs(pref);
    return s;
}

// Algebraic expansion sum_m alpha_m^{-1} z^{-a_m/alpha_m} S(z; m), each sequence
// summed to K terms (or through its smallest term).  z = r e^{i phase}.
inline Truncated H_pq(const WrightParams& w, Real r, Real phase, std::optional<std::size_t> K,
                      std::size_t max_terms = 400)
{
    r = at_working(r);
    phase = at_working(phase);
    Truncated total;
    if (w.p() == 0) {
        return total;
    }
    std::size_t n_terms = K ? *K : max_terms;
    const auto& up = w.upper();
    const auto& lo = w.lower();
    // Poles (a_m + k)/alpha_m of two sequences must not coincide.
    for (std::size_t m = 0; m < up.size(); ++m) {
        for (std::size_t q = 0; q < up.size(); ++q) {
            if (q == m) {
                continue;
            }
            for (std::size_t k = 0; k < n_terms; ++k) {
                ComplexRational s = (up[m].shift + ComplexRational(Rational(static_cast<long>(k)))) *
                                    ComplexRational(up[q].scale / up[m].scale);
                ComplexRational d = s - up[q].shift;
                if (d.im == 0 && d.re >= 0 && denominator(d.re) == 1) {
                    throw UnsupportedError("coincident poles: the algebraic expansion contains log z terms");
                }
            }
        }
    }
    Complex lz(log(r), phase);
    for (std::size_t m = 0; m < up.size(); ++m) {
        Complex am = up[m].shift.value();
        Real alm = to_real(up[m].scale);
        std::vector<Complex> terms;
        std::vector<Real> size;
        Complex lead = exp(-(am / Complex(alm)) * lz) / Complex(alm);
        Complex step = exp(-lz / Complex(alm));
        Complex zp(1);
        Real fact(1);
        for (std::size_t k = 0; k < n_terms; ++k) {
            if (k > 0) {
                fact *= static_cast<long>(k);
            }
            Complex s = (Complex(static_cast<long>(k)) + am) / Complex(alm);
            Complex g = gamma(s);
            for (std::size_t q = 0; q < up.size(); ++q) {
                if (q != m) {
                    g *= gamma(up[q].shift.value() - Complex(to_real(up[q].scale)) * s);
                }
            }
            for (const auto& l : lo) {
                g *= rgamma(l.shift.value() - Complex(to_real(l.scale)) * s);
            }
            Complex tm = g * zp / Complex(k % 2 == 0 ? fact : Real(-fact));
            terms.push_back(lead * tm);
            size.push_back(abs(terms.back()));
            zp *= step;
            if (!K && k > 8) {
                std::size_t b = detail::argmin_first(size);
                if (k > b + 4 && size.back() > size[b] * 1e6) {
                    break;
                }
            }
        }
        Truncated s = detail::truncate_terms(terms, size, K);
        total.value += s.value;
        total.terms = std::max(total.terms, s.terms);
        total.first_omitted = std::max(total.first_omitted, s.first_omitted);
    }
    return total;
}

// Stokes and anti-Stokes structure of the general expansion.
inline SectorPlan sector_plan_general(const WrightParams& w, Real theta, double eps_over_pi = 1e-6)
{
    theta = at_working(theta);
    if (w.kappa() <= 0) {
        throw ParameterError("asymptotic plan requires kappa > 0");
    }
    if (theta <= -pi() || theta > pi()) {
        throw DomainError("arg z must lie in (-pi, pi]");
    }
    Real kappa = to_real(w.kappa());
    Real eps = pi() * eps_over_pi;
    Real at = abs(theta);
    int sign = theta > 0 ? 1 : (theta < 0 ? -1 : 0);
    SectorPlan plan;
    plan.theta = theta;
    auto add_exp = [&](int n) {
        plan.components.push_back({n == 0 ? std::string("E(z)") : "E(z e^{" + std::to_string(2 * n) + " pi i})",
                                   ComponentKind::exponential, n, Dominance::dominant});
    };
    auto add_alg = [&]() {
        if (w.p() == 0) {
            return;
        }
        std::string name = sign == 0 ? "H(z e^{+-pi i}) mean" : (sign > 0 ? "H(z e^{-pi i})" : "H(z e^{pi i})");
        plan.components.push_back({name, ComponentKind::algebraic, -sign, Dominance::subdominant});
    };
    if (kappa > 2) {
        // smallest N with 2N + 1 > kappa / 2
        long N = 0;
        while (2 * N + 1 <= kappa / 2) {
            ++N;
        }
        plan.N = N;
        plan.regime = "exponential-sum";
        for (long n = -N; n <= N; ++n) {
            add_exp(static_cast<int>(n));
        }
        add_alg();
    } else if (kappa > 1) {
        plan.regime = "two-exponential";
        add_exp(0);
        if (sign != 0) {
            add_exp(-sign);
        }
        add_alg();
        Real edge = pi() * (1 - kappa / 2);
        if (sign != 0 && abs(at - edge) < eps) {
            plan.borderline = true;
            plan.warning = "Stokes line of E(z e^{-+2 pi i})";
        }
    } else {
        Real edge = pi() * kappa;
        if (kappa < 1 && at > edge + eps) {
            plan.regime = "algebraic";
            add_alg();
        } else {
            plan.regime = "exponential-algebraic";
            add_exp(0);
            add_alg();
            if (abs(at - edge) <= eps) {
                plan.borderline = true;
                plan.warning = "arg z on the Stokes line +-pi kappa";
            }
        }
    }
    // Dominance from the real parts of the exponents.
    const Real tol(1e-12);
    bool has_alg = false;
    bool any_large = false;
    Real best = -2;
    std::vector<Real> re(plan.components.size());
    for (std::size_t i = 0; i < plan.components.size(); ++i) {
        const auto& c = plan.components[i];
        if (c.kind != ComponentKind::exponential) {
            has_alg = true;
            continue;
        }
        re[i] = cos((theta + 2 * pi() * c.branch) / kappa);
        best = std::max(best, re[i]);
        any_large = any_large || re[i] > tol;
    }
    for (std::size_t i = 0; i < plan.components.size(); ++i) {
        auto& c = plan.components[i];
        if (c.kind != ComponentKind::exponential) {
            c.dominance = any_large ? Dominance::subdominant : Dominance::dominant;
        } else if (abs(re[i]) <= tol) {
            c.dominance = Dominance::oscillatory;
        } else if (re[i] >= best - tol && (re[i] > 0 || !has_alg)) {
            c.dominance = Dominance::dominant;
        } else {
            c.dominance = Dominance::subdominant;
        }
    }
    return plan;
}

namespace detail {

inline ExpansionValue evaluate_general_plan(const WrightParams& w, const ExactPoint& z, const SectorPlan& plan,
                                            const ExpansionOptions& opts)
{
    Real r = z.modulus();
    Real theta = plan.theta;
    std::shared_ptr<const CoefficientTable> t;
    ExpansionValue out;
    out.plan = plan;
    out.low_confidence = plan.borderline;
    for (const auto& c : plan.components) {
        ComponentValue cv;
        cv.name = c.name;
        if (c.kind == ComponentKind::exponential) {
            if (!t) {
                t = table_for(w, opts.J ? std::max<std::size_t>(*opts.J, 1) - 1 : opts.max_order, opts.digits);
            }
            Truncated s = E_pq(*t, r, theta + 2 * pi() * c.branch, opts.J);
            cv.value = s.value;
            cv.terms = s.terms;
            cv.first_omitted = s.first_omitted;
        } else {
            if (c.branch == 0) {
                Truncated a = H_pq(w, r, theta - pi(), opts.K);
                Truncated b = H_pq(w, r, theta + pi(), opts.K);
                cv.value = (a.value + b.value) / Complex(2);
                cv.terms = std::max(a.terms, b.terms);
                cv.first_omitted = std::max(a.first_omitted, b.first_omitted);
            } else {
                Truncated s = H_pq(w, r, theta + pi() * c.branch, opts.K);
                cv.value = s.value;
                cv.terms = s.terms;
                cv.first_omitted = s.first_omitted;
            }
        }
        out.total += cv.value;
        out.components.push_back(cv);
    }
    out.error_estimate = max_relative(out.components, out.total);
    return out;
}

} // namespace detail

// Large-|z| expansion of pPsi_q (kappa > 0).
inline ExpansionValue asymptotic_general(const WrightParams& w, const ExactPoint& z, const ExpansionOptions& opts = {})
{
    WorkingPrecision wp(opts.digits);
    SectorPlan plan = sector_plan_general(w, z.angle(), opts.eps_over_pi);
    return detail::evaluate_general_plan(w, z, plan, opts);
}

// 0Psi1 with a > 0.  On the negative real axis with real b the conjugate pair
// of dominant exponential expansions is combined into the cosine form; any
// further exponentials there are exponentially smaller and dropped.
inline ExpansionValue psi01_asym_pos_a(const Rational& a, const ComplexRational& b, const ExactPoint& z,
                                       const ExpansionOptions& opts = {})
{
    if (a <= 0) {
        throw ParameterError("psi01_asym_pos_a requires a > 0");
    }
    WorkingPrecision wp(opts.digits);
    WrightParams w = psi01_params(a, b);
    Real theta = z.angle();
    SectorPlan plan = sector_plan_general(w, theta, opts.eps_over_pi);
    auto on_negative_axis = z.angle_over_pi();
    if (on_negative_axis && *on_negative_axis == 1 && b.is_real()) {
        plan.regime = "negative-axis-cosine";
        auto t = detail::table_for(w, opts.J ? std::max<std::size_t>(*opts.J, 1) - 1 : opts.max_order, opts.digits);
        Real kappa = to_real(w.kappa());
        Real x = z.modulus();
        Real X = kappa * pow(w.h() * x, 1 / kappa);
        Real th = to_real(w.theta().re);
        Real c = pi() / kappa;
        std::vector<Complex> terms;
        std::vector<Real> size;
        Real xp(1);
        for (std::size_t j = 0; j <= t->order; ++j) {
            Real Aj = t->A(j).re;
            terms.emplace_back(Aj * xp * cos(X * sin(c) + c * (th - static_cast<long>(j))));
            size.push_back(abs(Aj * xp));
            xp /= X;
        }
        Truncated s = detail::truncate_terms(terms, size, opts.J);
        Real pref = 2 * pow(X, th) * exp(X * cos(c));
        ExpansionValue out;
        out.plan = plan;
        out.total = s.value * Complex(pref);
        out.components.push_back({"2 Re E(x e^{pi i})", out.total, s.terms, s.first_omitted * pref});
        out.error_estimate = detail::max_relative(out.components, out.total);
        return out;
    }
    return detail::evaluate_general_plan(w, z, plan, opts);
}

// E_pm(z) = e^{+-pi i theta} E_{1,0}(z e^{+-pi i sigma}) / (2 pi) for 0Psi1 with a = -sigma.
inline Truncated psi01_E_pm(int sign, const CoefficientTable& t, const Rational& sigma, Real r,
                            Real theta, std::optional<std::size_t> J)
{
    r = at_working(r);
    theta = at_working(theta);
    Truncated s = E_pq(t, r, theta + sign * pi() * to_real(sigma), J);
    Complex th = t.params.theta().value();
    Complex f = exp(Complex(Real(0), sign * pi()) * th) / Complex(2 * pi());
    s.value *= f;
    s.first_omitted *= abs(f);
    return s;
}

// H^(z) = sigma^{-1} sum_k z^{-(k+delta)/sigma} / (k! Gamma(1 - (k+delta)/sigma)).
// The automatic truncation stops after the smallest term of the envelope
// |Gamma((k+delta)/sigma)| |z|^{-(k+delta)/sigma} / k!, i.e. of the two 1Psi0
// algebraic expansions it combines.
inline Truncated psi01_H_hat(const Rational& sigma, const ComplexRational& b, Real r, Real theta,
                             std::optional<std::size_t> K, std::size_t max_terms = 2000)
{
    r = at_working(r);
    theta = at_working(theta);
    ComplexRational delta = ComplexRational(1) - b;
    Real sg = to_real(sigma);
    Complex d = delta.value();
    Complex lz(log(r), theta);
    std::vector<Complex> terms;
    std::vector<Real> env;
    std::size_t n = K ? *K : max_terms;
    Real fact(1);
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            fact *= static_cast<long>(k);
        }
        Complex e = (Complex(static_cast<long>(k)) + d) / Complex(sg);
        Complex zp = exp(-e * lz);
        Complex tm = zp * rgamma(Complex(1) - e) / Complex(fact * sg);
        terms.push_back(tm);
        bool pole = e.im == 0 && is_nonpositive_integer(e.re);
        Real en = pole ? abs(tm) : abs(gamma(e)) * exp(-e.re * log(r)) / (fact * sg);
        env.push_back(en);
        if (!K && k > 4) {
            std::size_t bmin = detail::argmin_first(env);
            if (k > bmin + 4 && en > env[bmin] * 1e6) {
                break;
            }
        }
    }
    return detail::truncate_terms(terms, env, K);
}

// X-form of E+ + E- on the positive real axis (real b, 0 < sigma < 1/2):
//   (X^theta / pi) e^{X cos(pi sigma/kappa)} sum (-1)^j A_j X^{-j} cos[X sin(pi sigma/kappa) + (pi/kappa)(theta - j)]
inline Truncated psi01_E_hat(const CoefficientTable& t, const Rational& sigma, Real x,
                             std::optional<std::size_t> J)
{
    x = at_working(x);
    Real kappa = 1 - to_real(sigma);
    Real X = detail::big_x(sigma, x);
    Real th = to_real(t.params.theta().re);
    Real ph = pi() * to_real(sigma) / kappa;
    std::vector<Complex> terms;
    std::vector<Real> size;
    Real xp(1);
    for (std::size_t j = 0; j <= t.order; ++j) {
        Real Aj = t.A(j).re;
        Real v = Aj * xp * cos(X * sin(ph) + pi() / kappa * (th - static_cast<long>(j)));
        terms.emplace_back(j % 2 == 0 ? v : Real(-v));
        size.push_back(abs(Aj * xp));
        xp /= X;
    }
    Truncated s = detail::truncate_terms(terms, size, J);
    Real pref = pow(X, th) * exp(X * cos(ph)) / pi();
    s.value *= Complex(pref);
    s.first_omitted *= pref;
    return s;
}

// Band structure of 0Psi1 with a = -sigma, arg z = theta.
inline SectorPlan sector_plan_neg_a(const Rational& sigma, Real theta, double eps_over_pi = 1e-6)
{
    theta = at_working(theta);
    if (!(sigma > 0 && sigma < 1)) {
        throw ParameterError("0 < sigma < 1 required");
    }
    if (theta <= -pi() || theta > pi()) {
        throw DomainError("arg z must lie in (-pi, pi]");
    }
    Real t = abs(theta) / pi();
    Real s = to_real(sigma);
    Real eps(eps_over_pi);
    int sign = theta > 0 ? 1 : (theta < 0 ? -1 : 0);
    SectorPlan plan;
    plan.theta = theta;
    auto set = [&](int l, int m, int n) {
        plan.lambda = l;
        plan.mu = m;
        plan.nu = n;
    };
    // E-+ for theta > 0 is E-; the flags (lambda, mu, nu) refer to E+, E-, H^.
    auto e_far = [&]() {
        if (sign >= 0) {
            set(0, 1, 0);
        } else {
            set(1, 0, 0);
        }
    };
    if (t < eps) {
        if (sigma < Rational(1, 2)) {
            plan.regime = "positive-axis";
            set(1, 1, 1);
        } else if (sigma == Rational(1, 2)) {
            plan.regime = "stokes-line-half";
            set(0, 0, 1);
        } else {
            plan.regime = "positive-axis";
            set(0, 0, 1);
        }
    } else if (abs(1 - t) < eps) {
        plan.regime = "negative-axis";
        set(1, 1, 0);
    } else {
        std::vector<Real> edges;
        std::string c;
        if (sigma < Rational(1, 3)) {
            c = "case-i";
            edges = {s, 1 - 2 * s};
        } else if (sigma == Rational(1, 3)) {
            c = "case-ii";
            edges = {s};
        } else if (sigma <= Rational(1, 2)) {
            c = "case-iii";
            edges = {1 - 2 * s, s};
        } else {
            c = "case-iv";
            edges = {2 * s - 1, s};
        }
        int band = 0;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (abs(t - edges[i]) <= eps) {
                if (c == "case-ii") {
                    plan.warning = "double Stokes phenomenon at |theta| = pi/3: dominant E only";
                    band = 1;
                } else {
                    plan.borderline = true;
                    plan.warning = "arg z within eps of a Stokes ray of a component expansion";
                    band = static_cast<int>(i);
                }
                break;
            }
            if (t > edges[i]) {
                band = static_cast<int>(i) + 1;
            }
        }
        if (c == "case-iii" && sigma == Rational(1, 2) && band == 0) {
            band = 1;
        }
        plan.regime = c + ":" + std::to_string(band + 1);
        if (c == "case-i") {
            if (band == 0) {
                set(1, 1, 1);
            } else if (band == 1) {
                set(1, 1, 0);
            } else {
                e_far();
            }
        } else if (c == "case-ii") {
            if (band == 0) {
                set(1, 1, 1);
            } else {
                e_far();
            }
        } else if (c == "case-iii") {
            if (band == 0) {
                set(1, 1, 1);
            } else if (band == 1) {
                e_far();
                plan.nu = 1;
            } else {
                e_far();
            }
        } else {
            if (band == 0) {
                set(0, 0, 1);
            } else if (band == 1) {
                e_far();
                plan.nu = 1;
            } else {
                e_far();
            }
        }
    }
    Real kappa = 1 - s;
    Real cp = cos((theta + pi() * s) / kappa);
    Real cm = cos((theta - pi() * s) / kappa);
    auto dom = [&](const Real& c, const Real& other, bool other_on) {
        if (abs(c) <= Real(1e-12)) {
            return Dominance::oscillatory;
        }
        // a decaying exponential with nothing beside it still dominates
        bool alone = !other_on && !plan.nu;
        if ((c > 0 || alone) && (!other_on || c >= other - Real(1e-12))) {
            return Dominance::dominant;
        }
        return Dominance::subdominant;
    };
    if (plan.regime == "stokes-line-half") {
        plan.components.push_back({"H^opt", ComponentKind::h_opt, 0, Dominance::dominant});
        plan.components.push_back({"R+", ComponentKind::r_plus, 0, Dominance::subdominant});
        return plan;
    }
    if (plan.regime == "negative-axis") {
        plan.components.push_back({"R-", ComponentKind::negative_axis, 0, Dominance::dominant});
        return plan;
    }
    bool large = false;
    if (plan.lambda) {
        plan.components.push_back({"E+", ComponentKind::e_plus, 1, dom(cp, cm, plan.mu != 0)});
        large = large || cp > Real(1e-12);
    }
    if (plan.mu) {
        plan.components.push_back({"E-", ComponentKind::e_minus, -1, dom(cm, cp, plan.lambda != 0)});
        large = large || cm > Real(1e-12);
    }
    if (plan.nu) {
        plan.components.push_back(
            {"H^", ComponentKind::h_hat, 0, large ? Dominance::subdominant : Dominance::dominant});
    }
    return plan;
}

// 0Psi1(1/2; x) - H^opt(x) for x > 0: the exponentially small remainder
//   R+_M = (X^theta e^{-X} / 2 pi) sum_{j<=M} (cos 2 pi theta A_j - 2 sin 2 pi theta B_j / sqrt(2 pi X)) (-X)^{-j}
// and H^opt(x) = 2 sum_{k<m_o} x^{-2(k+1-b)} / (k! Gamma(2b - 1 - 2k)), X = x^2/4.
struct StokesHalfValue {
    Complex h_opt;
    Complex r_plus;
    long m_o = 0;
    Real alpha;
};

inline StokesHalfValue psi01_stokes_half_parts(const Rational& b, Real x, std::size_t M, unsigned digits = 40)
{
    WorkingPrecision wp(digits);
    x = at_working(x);
    if (!(x > 0)) {
        throw DomainError("x > 0 required");
    }
    Rational sigma(1, 2);
    Rational delta = 1 - b;
    Real X = x * x / 4;
    Truncation tr = optimal_truncation(sigma, delta, X);
    StokesHalfValue v;
    v.m_o = tr.m_o;
    v.alpha = tr.alpha;
    Real bb = to_real(b);
    Real hs = 0;
    Real fact(1);
    for (long k = 0; k < tr.m_o; ++k) {
        if (k > 0) {
            fact *= k;
        }
        hs += pow(x, -2 * (k + 1 - bb)) * rgamma(2 * bb - 1 - 2 * k) / fact;
    }
    v.h_opt = Complex(2 * hs);
    auto t = detail::table_for(detail::assoc_params(sigma, b), M, digits);
    std::vector<Complex> A;
    for (std::size_t j = 0; j <= M; ++j) {
        A.push_back(t->A(j));
    }
    Real th = to_real(Rational(1, 2) - b);
    Real c2 = cos(2 * pi() * th);
    bool half_int = denominator(Rational(2) * (Rational(1, 2) - b)) == 1;
    std::vector<Complex> B(M + 1, Complex(0));
    if (!half_int) {
        StokesTable st = make_stokes_table(sigma, delta, X, A, M);
        B = st.B;
    }
    Real s2 = half_int ? Real(0) : sin(2 * pi() * th);
    Real root = sqrt(2 * pi() * X);
    Complex sum(0);
    Real xp(1);
    for (std::size_t j = 0; j <= M; ++j) {
        Complex term = A[j] * Complex(c2) - B[j] * Complex(2 * s2 / root);
        sum += term * Complex(j % 2 == 0 ? xp : Real(-xp));
        xp /= X;
    }
    v.r_plus = sum * Complex(pow(X, th) * exp(-X) / (2 * pi()));
    return v;
}

// 0Psi1(sigma; -x) ~ (X^theta e^{-X} / 2 pi) sum_{j<=M} (-1)^j A_j X^{-j}.  M unset
// sums through the smallest term.
inline Truncated psi01_neg_axis(const Rational& sigma, const ComplexRational& b, Real x,
                                std::optional<std::size_t> M, std::size_t max_order = 64, unsigned digits = 40)
{
    WorkingPrecision wp(digits);
    x = at_working(x);
    auto t = detail::table_for(detail::assoc_params(sigma, b), M ? *M : max_order, digits);
    Real X = detail::big_x(sigma, x);
    std::vector<Complex> terms;
    std::vector<Real> size;
    Real xp(1);
    for (std::size_t j = 0; j <= t->order; ++j) {
        Complex v = t->A(j) * Complex(j % 2 == 0 ? xp : Real(-xp));
        terms.push_back(v);
        size.push_back(abs(v));
        xp /= X;
    }
    Truncated s = detail::truncate_terms(terms, size, M ? std::optional<std::size_t>(*M + 1) : std::nullopt);
    Complex pref = exp(t->params.theta().value() * Complex(log(X)) - Complex(X)) / Complex(2 * pi());
    s.value *= pref;
    s.first_omitted *= abs(pref);
    return s;
}

// 1Psi0((sigma, delta); x e^{+-pi i kappa}) on its Stokes lines:
//   (e^{+-pi i delta}/sigma) sum_{k<m_o} Gamma((k+delta)/sigma)/k! x^{-(k+delta)/sigma}
//   + (X e^{+-pi i})^theta e^{-X} sum_{j<=M} (A_j/2 +- i B_j/sqrt(2 pi X)) (-X)^{-j}
struct StokesLineValue {
    Complex algebraic;
    Complex exponential;
    Complex total;
    long m_o = 0;
    Real alpha;
};

namespace detail {

inline void check_stokes_line_args(const Rational& sigma, const ComplexRational& delta, int sign)
{
    if (!(sigma > 0 && sigma < 1)) {
        throw ParameterError("0 < sigma < 1 required");
    }
    if (!delta.is_real()) {
        throw UnsupportedError("Stokes-line expansion implemented for real delta");
    }
    if (sign != 1 && sign != -1) {
        throw DomainError("sign must be +1 or -1");
    }
}

} // namespace detail

// Exponentially small part of the Stokes-line expansion alone.  It exists even
// when Gamma((k+delta)/sigma) has poles, where only combinations in which the
// algebraic parts cancel are meaningful.
inline Complex stokes_line_psi10_exponential(const Rational& sigma, const ComplexRational& delta, Real x,
                                             int sign, std::size_t M, unsigned digits = 40)
{
    WorkingPrecision wp(digits);
    x = at_working(x);
    detail::check_stokes_line_args(sigma, delta, sign);
    Real X = detail::big_x(sigma, x);
    WrightParams w = psi10_params(sigma, delta, ParamCheck::formal);
    auto t = detail::table_for(w, M, digits);
    std::vector<Complex> A;
    for (std::size_t j = 0; j <= M; ++j) {
        A.push_back(t->A(j));
    }
    StokesTable st = make_stokes_table(sigma, delta.re, X, A, M);
    Real root = sqrt(2 * pi() * X);
    Complex sum(0);
    Real xp(1);
    for (std::size_t j = 0; j <= M; ++j) {
        Complex term = A[j] / Complex(2) + Complex(Real(0), Real(sign)) * st.B[j] / Complex(root);
        sum += term * Complex(j % 2 == 0 ? xp : Real(-xp));
        xp /= X;
    }
    Real th = to_real(delta.re) - Real(1) / 2;
    return Complex::polar(pow(X, th) * exp(-X), sign * pi() * th) * sum;
}

inline StokesLineValue stokes_line_psi10(const Rational& sigma, const ComplexRational& delta, Real x, int sign,
                                         std::size_t M, unsigned digits = 40)
{
    WorkingPrecision wp(digits);
    x = at_working(x);
    detail::check_stokes_line_args(sigma, delta, sign);
    Real X = detail::big_x(sigma, x);
    Truncation tr = optimal_truncation(sigma, delta.re, X);
    StokesLineValue v;
    v.m_o = tr.m_o;
    v.alpha = tr.alpha;
    Real sg = to_real(sigma);
    Real d = to_real(delta.re);
    Real alg = 0;
    Real fact(1);
    for (long k = 0; k < tr.m_o; ++k) {
        if (k > 0) {
            fact *= k;
        }
        Rational e = (k + delta.re) / sigma;
        if (is_nonpositive_integer(e)) {
            throw PoleError("Gamma((k + delta)/sigma) has a pole at k = " + std::to_string(k));
        }
        alg += gamma(to_real(e)) * pow(x, -to_real(e)) / fact;
    }
    v.algebraic = Complex::polar(Real(1), sign * pi() * d) * Complex(alg / sg);
    v.exponential = stokes_line_psi10_exponential(sigma, delta, x, sign, M, digits);
    v.total = v.algebraic + v.exponential;
    return v;
}

// 0Psi1(1/2; x) ~ H^opt(x) + R+_M(x), x -> +inf.
inline ExpansionValue psi01_stokes_half(const Rational& b, Real x, std::size_t M, unsigned digits = 40)
{
    WorkingPrecision wp(digits);
    x = at_working(x);
    StokesHalfValue v = psi01_stokes_half_parts(b, x, M, digits);
    StokesHalfValue next = psi01_stokes_half_parts(b, x, M + 1, digits);
    Real fact(1);
    for (long k = 1; k <= v.m_o; ++k) {
        fact *= k;
    }
    Real bb = to_real(b);
    Real h_next = 2 * abs(pow(x, -2 * (v.m_o + 1 - bb)) * rgamma(2 * bb - 1 - 2 * v.m_o) / fact);
    ExpansionValue out;
    out.plan = sector_plan_neg_a(Rational(1, 2), Real(0));
    out.components.push_back({"H^opt", v.h_opt, static_cast<std::size_t>(v.m_o), h_next});
    out.components.push_back({"R+", v.r_plus, M + 1, abs(next.r_plus - v.r_plus)});
    out.total = v.h_opt + v.r_plus;
    out.error_estimate = detail::max_relative(out.components, out.total);
    return out;
}

// Large-|z| expansion of 0Psi1 with a = -sigma, 0 < sigma < 1.
inline ExpansionValue psi01_asym_neg_a(const Rational& sigma, const ComplexRational& b, const ExactPoint& z,
                                       const ExpansionOptions& opts = {})
{
    WorkingPrecision wp(opts.digits);
    Real theta = z.angle();
    SectorPlan plan = sector_plan_neg_a(sigma, theta, opts.eps_over_pi);
    if (plan.borderline && !opts.force_borderline) {
        throw BorderlineError(plan.warning +
                              "; the exponentially small terms are comparable to the least term of the dominant "
                              "algebraic expansion and cannot be resolved without a hyperasymptotic treatment");
    }
    Real r = z.modulus();
    ExpansionValue out;
    out.plan = plan;
    out.low_confidence = plan.borderline;
    if (plan.regime == "stokes-line-half") {
        if (!b.is_real()) {
            throw UnsupportedError("sigma = 1/2 on the positive axis requires real b");
        }
        ExpansionValue ev = psi01_stokes_half(b.re, r, opts.M ? *opts.M : 6, opts.digits);
        ev.plan = plan;
        return ev;
    }
    if (plan.regime == "negative-axis") {
        Truncated s = psi01_neg_axis(sigma, b, r, opts.M, opts.max_order, opts.digits);
        out.components.push_back({"R-", s.value, s.terms, s.first_omitted});
        out.total = s.value;
        out.error_estimate = detail::max_relative(out.components, out.total);
        return out;
    }
    std::shared_ptr<const CoefficientTable> t;
    if (plan.lambda || plan.mu) {
        t = detail::table_for(detail::assoc_params(sigma, b), opts.J ? std::max<std::size_t>(*opts.J, 1) - 1
                                                                      : opts.max_order,
                              opts.digits);
    }
    for (const auto& c : plan.components) {
        Truncated s;
        if (c.kind == ComponentKind::e_plus) {
            s = psi01_E_pm(1, *t, sigma, r, theta, opts.J);
        } else if (c.kind == ComponentKind::e_minus) {
            s = psi01_E_pm(-1, *t, sigma, r, theta, opts.J);
        } else {
            s = psi01_H_hat(sigma, b, r, theta, opts.K);
        }
        out.components.push_back({c.name, s.value, s.terms, s.first_omitted});
        out.total += s.value;
    }
    out.error_estimate = detail::max_relative(out.components, out.total);
    return out;
}

// Positive-axis form H^ + E^ (sigma < 1/2) or H^ (sigma > 1/2),
// with E^ in the real cosine form.
inline ExpansionValue psi01_positive_axis(const Rational& sigma, const Rational& b, const Real& x,
                                          const ExpansionOptions& opts = {})
{
    if (!(sigma > 0 && sigma < 1) || sigma == Rational(1, 2)) {
        throw ParameterError("0 < sigma < 1, sigma != 1/2 required");
    }
    WorkingPrecision wp(opts.digits);
    ExpansionValue out;
    out.plan = sector_plan_neg_a(sigma, Real(0), opts.eps_over_pi);
    Truncated h = psi01_H_hat(sigma, b, x, Real(0), opts.K);
    out.components.push_back({"H^", h.value, h.terms, h.first_omitted});
    out.total = h.value;
    if (sigma < Rational(1, 2)) {
        auto t = detail::table_for(detail::assoc_params(sigma, b),
                                   opts.J ? std::max<std::size_t>(*opts.J, 1) - 1 : opts.max_order, opts.digits);
        Truncated e = psi01_E_hat(*t, sigma, x, opts.J);
        out.components.push_back({"E^", e.value, e.terms, e.first_omitted});
        out.total += e.value;
    }
    out.error_estimate = detail::max_relative(out.components, out.total);
    return out;
}

// Exact values of 0Psi1(1/2; x) for b = -m + 1/2 (half_integer) and b = -m:
//   +-(X^theta e^{-X} / sqrt(pi)) sum_{j<=m} (-m +- 1/2)_j binom(m, j) X^{-j},  X = x^2/4.
inline Real exact_rep_half(bool half_integer, long m, Real x)
{
    x = at_working(x);
    if (m < 0) {
        throw DomainError("m >= 0 required");
    }
    Rational b = half_integer ? Rational(1, 2) - m : Rational(-m);
    Real X = x * x / 4;
    Real th = to_real(Rational(1, 2) - b);
    Rational p = half_integer ? Rational(1, 2) - m : Rational(-1, 2) - m;
    Real sum = 0;
    Real xp(1);
    for (long j = 0; j <= m; ++j) {
        sum += to_real(pochhammer(p, static_cast<std::size_t>(j)) * Rational(binomial(m, j))) * xp;
        xp /= X;
    }
    Real v = pow(X, th) * exp(-X) / sqrt(pi()) * sum;
    return half_integer ? v : Real(-v);
}

// 1F1(a; b; z) from its defining series.
inline Complex kummer_1f1_series(const ComplexRational& a, const ComplexRational& b, const ExactPoint& z,
                                 unsigned digits)
{
    if (b.is_real() && is_nonpositive_integer(b.re)) {
        throw DomainError("1F1: b is a nonpositive integer");
    }
    detail::SeriesTerms st;
    st.growth_h = 1;
    st.growth_kappa = 1;
    // g(n) = (a)_n / (b)_n, built incrementally; restarts whenever n = 0.
    struct State {
        Complex g;
        std::size_t next = 0;
    };
    auto state = std::make_shared<State>();
    st.coefficient = [a, b, state](std::size_t n) {
        if (n == 0) {
            state->g = Complex(1);
            state->next = 1;
            return state->g;
        }
        if (n != state->next) {
            throw InternalError("1F1 coefficients requested out of order");
        }
        Complex k(static_cast<long>(n - 1));
        state->g *= (a.value() + k) / (b.value() + k);
        state->next = n + 1;
        return state->g;
    };
    return detail::sum_with_escalation(st, z, digits, SeriesOptions{}).value;
}

// 1Psi0((1/2, delta); x e^{+-pi i/2}) = Gamma(delta) 1F1(delta; 1/2; -x^2/4)
//                                     +- i x Gamma(delta + 1/2) 1F1(delta + 1/2; 3/2; -x^2/4)
inline Complex psi10_via_kummer(const Rational& delta, const Rational& x, int sign, unsigned digits = 40)
{
    ExactPoint mz = ExactPoint::real(-x * x / 4);
    Complex f1 = kummer_1f1_series(delta, Rational(1, 2), mz, digits + 10);
    Complex f2 = kummer_1f1_series(delta + Rational(1, 2), Rational(3, 2), mz, digits + 10);
    WorkingPrecision wp(digits + 10);
    Real d = to_real(delta);
    Complex v = Complex(gamma(d)) * f1 +
                Complex(Real(0), sign * to_real(x)) * Complex(gamma(d + Real(1) / 2)) * f2;
    WorkingPrecision out(digits);
    return {at_working(v.re), at_working(v.im)};
}

// Stokes-line expansion of Gamma(a)/Gamma(b) 1F1(a; b; -x), x -> +inf, real a, b:
//   x^{-a} Gamma(a)/Gamma(b-a) sum_{k<m_o} (a)_k (1+a-b)_k / (k! x^k)
//   + x^xi e^{-x} {cos(pi xi) sum_{j<=M} (-1)^j c_j x^{-j} - 2 sin(pi xi)/sqrt(2 pi x) sum_{j<=M} (-1)^j b_j x^{-j}}
// with xi = a - b, c_j = (1-a)_j (b-a)_j / j!, m_o = x - 2a + b + alpha (nearest
// integer, ties up) and b_j built from G_{2k}(gamma) at mu = 1, gamma_j = alpha - j.
struct KummerStokesValue {
    Complex algebraic;
    Complex exponential;
    Complex total;
    long m_o = 0;
    Real alpha;
};

inline KummerStokesValue kummer_stokes_expansion(const Rational& a, const Rational& b, Real x, std::size_t M)
{
    x = at_working(x);
    Real ra = to_real(a);
    Real rb = to_real(b);
    Real v0 = x - 2 * ra + rb;
    Real fl = floor(v0);
    Real m = (v0 - fl) >= Real(1) / 2 ? fl + 1 : fl;
    if (m < 1) {
        throw DomainError("optimal truncation index below 1: asymptotic regime not reached");
    }
    KummerStokesValue v;
    v.m_o = m.convert_to<long>();
    v.alpha = m - v0;
    Real alg = 0;
    Real term = 1;
    for (long k = 0; k < v.m_o; ++k) {
        if (k > 0) {
            term *= (ra + (k - 1)) * (1 + ra - rb + (k - 1)) / (k * x);
        }
        alg += term;
    }
    Real bma = rb - ra;
    Real lead = is_nonpositive_integer(bma) ? Real(0) : pow(x, -ra) * gamma(ra) * rgamma(bma);
    v.algebraic = Complex(lead * alg);
    std::vector<Real> c(M + 1);
    for (std::size_t j = 0; j <= M; ++j) {
        c[j] = to_real(pochhammer(1 - a, j) * pochhammer(b - a, j) / detail::factorial<Rational>(j));
    }
    std::vector<Real> bj(M + 1, Real(0));
    std::vector<std::vector<Real>> G(M + 1);
    for (std::size_t i = 0; i <= M; ++i) {
        G[i] = g_coeffs(Real(1), v.alpha - static_cast<long>(i), 2 * (M - i));
    }
    for (std::size_t j = 0; j <= M; ++j) {
        Real f(1);
        for (std::size_t k = 0; k <= j; ++k) {
            bj[j] += f * c[j - k] * G[j - k][2 * k];
            f *= -2 * (Real(1) / 2 + static_cast<long>(k));
        }
    }
    Real xi = ra - rb;
    Real s1 = 0;
    Real s2 = 0;
    Real xp(1);
    for (std::size_t j = 0; j <= M; ++j) {
        Real sg = j % 2 == 0 ? xp : Real(-xp);
        s1 += c[j] * sg;
        s2 += bj[j] * sg;
        xp /= x;
    }
    v.exponential = Complex(pow(x, xi) * exp(-x) * (cos(pi() * xi) * s1 - 2 * sin(pi() * xi) / sqrt(2 * pi() * x) * s2));
    v.total = v.algebraic + v.exponential;
    return v;
}

// F = |(lambda E+ + mu E- + nu H^) / 0Psi1(z) - 1| with the library's default
// truncations (or J, K from the options) and the defining series as reference.
struct FValue {
    Real F;
    Complex approx;
    Complex reference;
    Truncated e_plus;
    Truncated e_minus;
    Truncated h_hat;
};

inline FValue relative_error_F(int lambda, int mu, int nu, const Rational& sigma, const ComplexRational& b,
                               const ExactPoint& z, const ExpansionOptions& opts = {})
{
    if (!(sigma > 0 && sigma < 1)) {
        throw ParameterError("0 < sigma < 1 required");
    }
    FValue f;
    EvalResult ref = eval_bessel_series(BesselParams{Rational(-sigma), b}, z, opts.digits);
    WorkingPrecision wp(opts.digits);
    Real r = z.modulus();
    Real theta = z.angle();
    auto t = detail::table_for(detail::assoc_params(sigma, b),
                               opts.J ? std::max<std::size_t>(*opts.J, 1) - 1 : opts.max_order, opts.digits);
    f.e_plus = psi01_E_pm(1, *t, sigma, r, theta, opts.J);
    f.e_minus = psi01_E_pm(-1, *t, sigma, r, theta, opts.J);
    f.h_hat = psi01_H_hat(sigma, b, r, theta, opts.K);
    f.reference = ref.value;
    if (lambda) {
        f.approx += f.e_plus.value;
    }
    if (mu) {
        f.approx += f.e_minus.value;
    }
    if (nu) {
        f.approx += f.h_hat.value;
    }
    f.F = abs(f.approx / f.reference - Complex(1));
    return f;
}

} // namespace wright

#endif
