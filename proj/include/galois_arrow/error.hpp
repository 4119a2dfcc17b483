#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace galois_arrow {

enum class ErrorCode {
  // field
  CompositeCharacteristic,
  ReducibleModulus,
  NoDefaultModulus,
  InvalidModulus,
  FieldTooLarge,
  ZeroPolynomial,
  MixedFields,
  DivisionByZero,
  OddCharacteristic,
  EmptyMatrix,
  // plane
  ZeroTriple,
  CoincidentPoints,
  CoincidentLines,
  // conic
  ZeroConic,
  IntersectionTooLarge,
  DegenerateConic,
  CollinearTriple,
  // pencil
  DependentGenerators,
  BasePoint,
  NoProperMember,
  NucleiDiffer,
  // arc
  DuplicatePoints,
  NotAnArc,
  PointNotInArc,
  ArcTooSmall,
  NotThroughNucleus,
  InvalidIdealLine,
  InvalidTangentLine,
  DegenerateContactPoint,
  UnsupportedField,
  // arrow
  HitsBasePoint,
  HitsNucleus,
  // cli
  UsageError,
  // Internal invariant violations. Reaching any of these is a bug.
  UnclassifiableConic,
  AmbiguousFit,
  IntersectionNotSingle,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace galois_arrow
