#ifndef ZCROSS_ERROR_HPP
#define ZCROSS_ERROR_HPP

#include <stdexcept>
#include <string>

namespace zcross {

enum class ErrorCode {
  DivisionByZero,
  DimensionMismatch,
  MixedScalarFields,
  ModulusMismatch,
  ClosureExceedsWindow,
  ZeroIndex,
  WrongVariant,
  NotUnital,
  NotFiniteDimensional,
  CharacterCountMismatch,
  NotAnAutomorphism,
  NotInAlgebra,
  NIsOdd,
  NotBijective,
  SchemaError,
  InvalidArgument,
  InternalInvariantViolation,
};

const char* error_code_name(ErrorCode code);

// Every failure in the library is an Error. Codes split into two severities:
// validation errors (bad input, window overflow, schema problems) and internal
// invariant violations (a theorem route disagreeing with its oracle, or a
// runtime assertion of the semi-simplicity reasoning failing). The CLI maps
// them to exit codes 2 and 3 respectively.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  Error(ErrorCode code, const std::string& message, std::string detail_json)
      : Error(code, message) {
    detail_ = std::move(detail_json);
  }

  ErrorCode code() const { return code_; }

  // Serialized counterexample dump for invariant violations; empty otherwise.
  const std::string& detail() const { return detail_; }

  bool internal() const {
    return code_ == ErrorCode::InternalInvariantViolation ||
           code_ == ErrorCode::CharacterCountMismatch;
  }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace zcross

#endif
