#include "galois_arrow/error.hpp"

namespace galois_arrow {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::CompositeCharacteristic: return "CompositeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::NoDefaultModulus: return "NoDefaultModulus";
    case ErrorCode::InvalidModulus: return "InvalidModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OddCharacteristic: return "OddCharacteristic";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::ZeroTriple: return "ZeroTriple";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::ZeroConic: return "ZeroConic";
    case ErrorCode::IntersectionTooLarge: return "IntersectionTooLarge";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::CollinearTriple: return "CollinearTriple";
    case ErrorCode::DependentGenerators: return "DependentGenerators";
    case ErrorCode::BasePoint: return "BasePoint";
    case ErrorCode::NoProperMember: return "NoProperMember";
    case ErrorCode::NucleiDiffer: return "NucleiDiffer";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::NotAnArc: return "NotAnArc";
    case ErrorCode::PointNotInArc: return "PointNotInArc";
    case ErrorCode::ArcTooSmall: return "ArcTooSmall";
    case ErrorCode::NotThroughNucleus: return "NotThroughNucleus";
    case ErrorCode::InvalidIdealLine: return "InvalidIdealLine";
    case ErrorCode::InvalidTangentLine: return "InvalidTangentLine";
    case ErrorCode::DegenerateContactPoint: return "DegenerateContactPoint";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::HitsBasePoint: return "HitsBasePoint";
    case ErrorCode::HitsNucleus: return "HitsNucleus";
    case ErrorCode::UsageError: return "UsageError";
    case ErrorCode::UnclassifiableConic: return "UnclassifiableConic";
    case ErrorCode::AmbiguousFit: return "AmbiguousFit";
    case ErrorCode::IntersectionNotSingle: return "IntersectionNotSingle";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnclassifiableConic:
    case ErrorCode::AmbiguousFit:
    case ErrorCode::IntersectionNotSingle:
    case ErrorCode::InvariantViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace galois_arrow
