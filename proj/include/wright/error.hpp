#ifndef WRIGHT_ERROR_HPP
#define WRIGHT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wright {

// Base class for every failure raised by the library.  The CLI maps the
// concrete subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the domain of an operation (pole of gamma, Re z <= 0 for
// the scaled gamma function, asymptotic regime not reached, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

// Parameters violate a structural requirement (alpha_r <= 0, singular
// numerator gamma, kappa <= 0 where kappa > 0 is needed, ...).
class ParameterError : public DomainError {
public:
    using DomainError::DomainError;
};

class DivergentSeriesError : public DomainError {
public:
    using DomainError::DomainError;
};

class PrecisionCeilingError : public Error {
public:
    using Error::Error;
};

// Features that are deliberately not provided (multiple-pole algebraic
// expansions with log z terms, unsupported closed-form orders).
class UnsupportedError : public DomainError {
public:
    using DomainError::DomainError;
};

// arg z lies on (or within eps of) a ray where the asymptotic description
// breaks down and no expansion is attempted without an explicit override.
class BorderlineError : public Error {
public:
    using Error::Error;
};

// Internal consistency failure in the series engine.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace wright

#endif
