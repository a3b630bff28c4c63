#ifndef HCONV_ERRORS_HPP
#define HCONV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hconv {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A user-supplied evaluable returned a negative or non-finite value where
/// that is not allowed.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A required integral of the modulus diverges.
class NotIntegrable : public Error {
 public:
  using Error::Error;
};

/// The adaptive integrator hit its subdivision cap before reaching the
/// requested tolerance.
class ToleranceNotReached : public Error {
 public:
  using Error::Error;
};

/// The integrand returned a non-finite value at an interior node.
class NonFiniteSample : public Error {
 public:
  using Error::Error;
};

/// A Hölder-type bound was requested without a conjugate exponent p.
class ConjugateMissing : public Error {
 public:
  using Error::Error;
};

/// h(1/2) = 0, so the h-Hadamard prefactor 1/(2h(1/2)) is undefined.
class DegenerateModulus : public Error {
 public:
  using Error::Error;
};

/// The rule parameters conflict with a bound whose parameters are fixed.
class ParamMismatch : public Error {
 public:
  using Error::Error;
};

/// The function class of a certificate does not match the requested check.
class ClassMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace hconv

#endif  // HCONV_ERRORS_HPP
