#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ssf {

// Machine-readable failure codes. The CLI reports these verbatim.
enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  NotPrime,
  InvalidGram,
  IsotropicVector,
  AlgebraMismatch,
  DimensionMismatch,
  NotCommutative,
  DuplicateCandidates,
  CapExceeded,
  NotAnIdeal,
  CharTwo,
  NotNormOne,
  WrongAlgebraKind,
  NotIdempotent,
  BudgetExceeded,
  NotFiniteField,
  EigenvalueCollision,
  IncompleteDecomposition,
  NotAnAutomorphism,
  UnverifiedSpanHypothesis,
  SpecialAlpha,
  ExcludedAlpha,
  MuOne,
  BadCharacteristic,
  ParseError,
  ConfigError,
  InternalError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace ssf
