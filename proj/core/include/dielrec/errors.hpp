#pragma once

#include <stdexcept>
#include <string>

namespace dielrec {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A supplied value violates a type invariant or a documented precondition.
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A detuning denominator came within the resonance guard of zero. The
/// model is only valid far below the medium resonance, so this is a usage
/// error rather than physics.
class MediumResonance : public Error {
public:
    using Error::Error;
};

/// A small-parameter expansion was pushed outside its validity range
/// (for example N*alpha beyond the dilute-index limit).
class RegimeViolation : public Error {
public:
    using Error::Error;
};

/// An iterative solve did not reach its tolerance within the budget.
class ConvergenceFailure : public Error {
public:
    using Error::Error;
};

/// The adaptive integrator either met a non-finite integrand value or ran
/// out of its subdivision budget. Carries the best estimate obtained so far.
class QuadratureFailure : public Error {
public:
    QuadratureFailure(const std::string& what, double partial_value, int subdivisions)
        : Error(what), partial_value_(partial_value), subdivisions_(subdivisions) {}

    double partial_value() const noexcept { return partial_value_; }
    int subdivisions() const noexcept { return subdivisions_; }

private:
    double partial_value_;
    int subdivisions_;
};

} // namespace dielrec
