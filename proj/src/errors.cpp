#include "ssf/errors.hpp"

namespace ssf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::InvalidGram: return "InvalidGram";
    case ErrorCode::IsotropicVector: return "IsotropicVector";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::DuplicateCandidates: return "DuplicateCandidates";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::NotNormOne: return "NotNormOne";
    case ErrorCode::WrongAlgebraKind: return "WrongAlgebraKind";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotFiniteField: return "NotFiniteField";
    case ErrorCode::EigenvalueCollision: return "EigenvalueCollision";
    case ErrorCode::IncompleteDecomposition: return "IncompleteDecomposition";
    case ErrorCode::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorCode::UnverifiedSpanHypothesis: return "UnverifiedSpanHypothesis";
    case ErrorCode::SpecialAlpha: return "SpecialAlpha";
    case ErrorCode::ExcludedAlpha: return "ExcludedAlpha";
    case ErrorCode::MuOne: return "MuOne";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace ssf
