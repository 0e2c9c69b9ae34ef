#ifndef FEWOPT_ERRORS_HPP
#define FEWOPT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fewopt {

// Base for all recoverable failures raised by the library. The CLI / C API
// map these onto exit codes / status codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidInput : Error {
  using Error::Error;
};

struct ZeroCoefficient : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DuplicateExponent : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct DimensionMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NonpositiveCoordinate : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct NonpositiveBase : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct SubsetBudgetExceeded : InvalidInput {
  using InvalidInput::InvalidInput;
};
struct ParseError : InvalidInput {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : InvalidInput(msg + " at position " + std::to_string(pos)), position(pos) {}
};
struct DegreeNotFour : InvalidInput {
  using InvalidInput::InvalidInput;
};

// The instance is valid but outside the class an operation supports
// (e.g. m >= n+3, or a dishonest support handed to the circuit engine).
struct NotInClass : Error {
  using Error::Error;
};

struct SingularMatrix : Error {
  using Error::Error;
};
struct SingularMap : Error {
  using Error::Error;
};
struct SignPreconditionViolated : Error {
  using Error::Error;
};

// A sign could not be certified even at the precision cap.
struct PrecisionExhausted : Error {
  using Error::Error;
};

struct ExhaustedAttempts : Error {
  using Error::Error;
};

}  // namespace fewopt

#endif
