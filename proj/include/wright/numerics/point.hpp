#ifndef WRIGHT_NUMERICS_POINT_HPP
#define WRIGHT_NUMERICS_POINT_HPP

#include <optional>
#include <string>

#include "wright/numerics/complex.hpp"
#include "wright/numerics/rational.hpp"

namespace wright {

// A point of the complex plane held exactly as  base * exp(i pi turn),
// with base a Gaussian rational and turn a rational multiple of pi.  It can
// be materialised at any working precision, and when the base is real the
// argument is known exactly as a rational multiple of pi, which keeps sector
// classification free of rounding.
class ExactPoint {
public:
    ExactPoint() = default;
    ExactPoint(ComplexRational base, Rational turn) : base_(std::move(base)), turn_(std::move(turn)) {}

    static ExactPoint real(const Rational& x) { return {ComplexRational(x), Rational(0)}; }
    static ExactPoint rect(const ComplexRational& z) { return {z, Rational(0)}; }
    // modulus * exp(i pi angle_over_pi)
    static ExactPoint polar(const Rational& modulus, const Rational& angle_over_pi)
    {
        return {ComplexRational(modulus), angle_over_pi};
    }

    const ComplexRational& base() const { return base_; }
    const Rational& turn() const { return turn_; }

    bool is_zero() const { return base_.re == 0 && base_.im == 0; }

    // Same point rotated by exp(i pi angle_over_pi).
    ExactPoint rotated(const Rational& angle_over_pi) const { return {base_, turn_ + angle_over_pi}; }

    Complex value() const
    {
        Complex b = base_.value();
        Rational t = reduce(turn_);
        if (t == 0) {
            return b;
        }
        if (t == 1) {
            return -b;
        }
        Real ang = pi() * to_real(t);
        return b * Complex::polar(Real(1), ang);
    }

    Real modulus() const { return abs(base_.value()); }

    // arg in (-pi, pi] as a rational multiple of pi, when it is exactly known.
    std::optional<Rational> angle_over_pi() const
    {
        if (is_zero()) {
            return Rational(0);
        }
        if (base_.im == 0) {
            Rational t = base_.re > 0 ? turn_ : turn_ + 1;
            return reduce(t);
        }
        if (base_.re == 0) {
            Rational t = turn_ + (base_.im > 0 ? Rational(1, 2) : Rational(-1, 2));
            return reduce(t);
        }
        return std::nullopt;
    }

    // arg in (-pi, pi] at the working precision.
    Real angle() const
    {
        if (auto t = angle_over_pi()) {
            return pi() * to_real(*t);
        }
        Complex b = base_.value();
        Real a = arg(b) + pi() * to_real(reduce(turn_));
        Real two_pi = 2 * pi();
        while (a > pi()) {
            a -= two_pi;
        }
        while (a <= -pi()) {
            a += two_pi;
        }
        return a;
    }

    std::string describe() const
    {
        if (turn_ == 0) {
            return to_string(base_);
        }
        return to_string(base_) + "*exp(" + to_string(turn_) + "*pi*i)";
    }

    // t reduced into (-1, 1].
    static Rational reduce(Rational t)
    {
        // floor((t + 1)/2) full turns; integer division truncates toward zero
        Rational shifted = (t + 1) / 2;
        Integer n = numerator(shifted) / denominator(shifted);
        if (Rational(n) > shifted) {
            n -= 1;
        }
        t -= Rational(2 * n);
        if (t <= -1) {
            t += 2;
        }
        return t;
    }

private:
    ComplexRational base_;
    Rational turn_;
};

} // namespace wright

#endif
