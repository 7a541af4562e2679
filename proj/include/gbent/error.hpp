#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gbent {

enum class ErrorCode {
  Parse,
  ShapeMismatch,
  IndexOutOfRange,
  InvalidK,
  InvalidN,
  Overflow,
  NotBent,
  NotGbent,
  OddN,
  TooLarge,
  NotZeroSum,
  InternalInconsistency,
  DivisionByZero,
  NotCoprime,
  NotIrreducible,
  NotPermutation,
  BadM,
  NoRoot,
  NotBalanced,
  KTooLarge,
  DualSumNonzero,
  SingularMatrix,
  L1NotInvariant,
  RLessThanK,
  SpaceTooLarge,
  BadParameter,
};

inline std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidK: return "InvalidK";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::Overflow: return "OverflowError";
    case ErrorCode::NotBent: return "NotBent";
    case ErrorCode::NotGbent: return "NotGbent";
    case ErrorCode::OddN: return "OddN";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotZeroSum: return "NotZeroSum";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::NotPermutation: return "NotPermutation";
    case ErrorCode::BadM: return "BadM";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DualSumNonzero: return "DualSumNonzero";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::L1NotInvariant: return "L1NotInvariant";
    case ErrorCode::RLessThanK: return "RLessThanK";
    case ErrorCode::SpaceTooLarge: return "SpaceTooLarge";
    case ErrorCode::BadParameter: return "BadParameter";
  }
  return "UnknownError";
}

}  // namespace gbent
