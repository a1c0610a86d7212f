#include "error.hpp"

namespace zcross {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MixedScalarFields: return "MixedScalarFields";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::ClosureExceedsWindow: return "ClosureExceedsWindow";
    case ErrorCode::ZeroIndex: return "ZeroIndex";
    case ErrorCode::WrongVariant: return "WrongVariant";
    case ErrorCode::NotUnital: return "NotUnital";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::CharacterCountMismatch: return "CharacterCountMismatch";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::NotInAlgebra: return "NotInAlgebra";
    case ErrorCode::NIsOdd: return "NIsOdd";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "UnknownError";
}

}  // namespace zcross
