#pragma once

#include <stdexcept>
#include <string>

namespace motivic {

// Mathematical precondition failures. These are user-reachable (CLI exit 3),
// as opposed to argument validation (exit 2) and internal invariants (assert).
enum class ErrCode {
  NonUnitLeadingTerm,
  ConstantTermPresent,
  ConstantTermNotOne,
  MixedHodgeExponents,
  PartitionMismatch,
  DimensionMismatch,
  OnWall,
  DegeneratePair,
  BoundaryContact,
  NonIntegralExponent,
  HalfIntegerLefschetzPower,
  ExponentOffGrid,
  ProductFormUnavailable,
};

inline const char* errcode_name(ErrCode c) {
  switch (c) {
    case ErrCode::NonUnitLeadingTerm: return "NonUnitLeadingTerm";
    case ErrCode::ConstantTermPresent: return "ConstantTermPresent";
    case ErrCode::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrCode::MixedHodgeExponents: return "MixedHodgeExponents";
    case ErrCode::PartitionMismatch: return "PartitionMismatch";
    case ErrCode::DimensionMismatch: return "DimensionMismatch";
    case ErrCode::OnWall: return "OnWall";
    case ErrCode::DegeneratePair: return "DegeneratePair";
    case ErrCode::BoundaryContact: return "BoundaryContact";
    case ErrCode::NonIntegralExponent: return "NonIntegralExponent";
    case ErrCode::HalfIntegerLefschetzPower: return "HalfIntegerLefschetzPower";
    case ErrCode::ExponentOffGrid: return "ExponentOffGrid";
    case ErrCode::ProductFormUnavailable: return "ProductFormUnavailable";
  }
  return "UnknownError";
}

class DomainError : public std::runtime_error {
 public:
  DomainError(ErrCode code, const std::string& detail)
      : std::runtime_error(std::string(errcode_name(code)) + ": " + detail), code_(code) {}
  ErrCode code() const { return code_; }

 private:
  ErrCode code_;
};

}  // namespace motivic
