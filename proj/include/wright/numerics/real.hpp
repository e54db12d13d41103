#ifndef WRIGHT_NUMERICS_REAL_HPP
#define WRIGHT_NUMERICS_REAL_HPP

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "wright/error.hpp"

namespace wright {

// Arbitrary precision real.  Precision is measured in decimal digits and
// is taken from the thread's current working precision at construction.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

// Exact rational (GMP).
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

inline constexpr unsigned kDefaultDigits = 60;
inline constexpr unsigned kMinDigits = 16;

inline unsigned working_digits() { return Real::default_precision(); }

// Sets the working precision for the lifetime of the guard and restores the
// previous value on exit.  Every public entry point that computes in AP
// arithmetic opens one of these.
class WorkingPrecision {
public:
    explicit WorkingPrecision(unsigned digits) : saved_(Real::default_precision())
    {
        Real::default_precision(digits < kMinDigits ? kMinDigits : digits);
    }
    WorkingPrecision(const WorkingPrecision&) = delete;
    WorkingPrecision& operator=(const WorkingPrecision&) = delete;
    ~WorkingPrecision() { Real::default_precision(saved_); }

    unsigned digits() const { return Real::default_precision(); }

private:
    unsigned saved_;
};

inline Real pi() { return boost::math::constants::pi<Real>(); }

inline Real to_real(const Rational& q)
{
    return Real(q);
}

// Re-rounds x to the current working precision.
inline Real at_working(const Real& x)
{
    Real r;
    r = x;
    r.precision(working_digits());
    return r;
}

inline double to_double(const Real& x) { return x.convert_to<double>(); }

inline bool is_nonpositive_integer(const Real& x)
{
    return x <= 0 && floor(x) == x;
}

inline bool is_nonpositive_integer(const Rational& q)
{
    return q <= 0 && denominator(q) == 1;
}

// log10 of |x| that stays finite for x == 0.
inline double log10_abs(const Real& x)
{
    if (x == 0) {
        return -std::numeric_limits<double>::infinity();
    }
    // mpfr exponents exceed the double range only for absurd inputs.
    long exp2 = 0;
    double mant = mpfr_get_d_2exp(&exp2, x.backend().data(), MPFR_RNDN);
    return std::log10(std::fabs(mant)) + static_cast<double>(exp2) * std::log10(2.0);
}

// Decimal scientific notation with `sig` significant digits, e.g.
// "-1.5374597944e-12".
inline std::string to_sci(const Real& x, int sig)
{
    if (x == 0) {
        return "0";
    }
    std::ostringstream os;
    os.setf(std::ios::scientific, std::ios::floatfield);
    os.precision(sig - 1);
    os << x;
    return os.str();
}

inline std::string to_string(const Rational& q)
{
    std::ostringstream os;
    os << q;
    return os.str();
}

inline Rational rational_from_int(long long n) { return Rational(n); }

} // namespace wright

#endif
