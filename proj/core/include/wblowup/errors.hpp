#ifndef WBLOWUP_ERRORS_HPP
#define WBLOWUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wblowup {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text, rational literal or input description.
class ParseError : public Error {
public:
  using Error::Error;
};

class ArithmeticError : public Error {
public:
  using Error::Error;
};

/// Operands live over different variable lists.
class VariableMismatch : public Error {
public:
  using Error::Error;
};

/// A contact element could not be brought into triangular frame form.
class TriangularizationError : public Error {
public:
  using Error::Error;
};

/// A blowup or transform was requested for a center that does not contain the ideal.
class AdmissibilityError : public Error {
public:
  using Error::Error;
};

/// Computation would exceed the configured generator or exponent budget.
class ResourceLimitError : public Error {
public:
  using Error::Error;
};

/// An internal consistency check failed.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace wblowup

#endif  // WBLOWUP_ERRORS_HPP
