#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galois_arrow/point_set.hpp"

namespace galois_arrow {

enum class DegeneracyClass { Proper, DoubleLine, RealLinePair, ConjugateLinePair };
enum class LineClass { Secant, Tangent, External };

std::string_view to_string(DegeneracyClass c) noexcept;
std::string_view to_string(LineClass c) noexcept;

/// Quadratic form sum_{i<=j} c_ij x_i x_j with coefficients in the order
/// c11, c12, c13, c22, c23, c33, normalized so the first nonzero one is 1.
class Conic {
 public:
  static constexpr std::size_t kTerms = 6;
  using Coefficients = std::array<Element, kTerms>;

  Conic() = default;
  /// Throws ZeroConic, MixedFields.
  static Conic make(const Coefficients& c);
  static Conic from_codes(const Field& field, const std::array<std::uint32_t, kTerms>& codes);

  const Coefficients& coefficients() const noexcept { return c_; }
  const Element& c11() const { return c_[0]; }
  const Element& c12() const { return c_[1]; }
  const Element& c13() const { return c_[2]; }
  const Element& c22() const { return c_[3]; }
  const Element& c23() const { return c_[4]; }
  const Element& c33() const { return c_[5]; }
  const Field& field() const { return *c_[0].field(); }

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Coefficients c_;
};

/// "[c11,c12,c13,c22,c23,c33]" in field-element notation.
std::string to_string(const Conic& c);

/// The six monomials x1^2, x1x2, x1x3, x2^2, x2x3, x3^2 at p, in coefficient order.
Conic::Coefficients monomials(const ProjPoint& p);

/// Raw value of the form at the normalized coordinates of p. Throws MixedFields.
Element evaluate(const Conic& c, const ProjPoint& p);

PointSet point_set(const Conic& c, const Plane& plane, Execution exec = Execution::Parallel);

/// Zero-set census: one point -> ConjugateLinePair; exactly one full line of
/// q+1 points -> DoubleLine; two full lines covering 2q+1 points ->
/// RealLinePair; q+1 points, no three collinear -> Proper.
/// Throws UnclassifiableConic if none of these match.
DegeneracyClass classify_zero_set(const PointSet& zeros);
DegeneracyClass classify(const Conic& c, const Plane& plane);

/// x1 x2 - x3^2.
Conic canonical_conic(const Field& field);
/// (1,0,0) followed by (s^2, 1, s) for s in element order.
std::vector<ProjPoint> parametrize_canonical(const Field& field);

/// By |L ∩ set|: 2 Secant, 1 Tangent, 0 External. Throws IntersectionTooLarge.
LineClass classify_line(const PointSet& set, const ProjLine& line);

/// Lines meeting the proper conic in exactly one point, in plane order.
/// Throws DegenerateConic.
std::vector<ProjLine> tangent_lines(const Conic& c, const Plane& plane);

/// The unique point on every given line, or nullopt when there is none or
/// more than one.
std::optional<ProjPoint> common_point(std::span<const ProjLine> lines, const Plane& plane);

/// Common point of all tangents, found by exhaustive counting.
/// Throws OddCharacteristic, DegenerateConic.
ProjPoint nucleus(const Conic& c, const Plane& plane);

/// Characteristic-2 shortcut: the radical (c23, c13, c12) of the polar form.
/// Must agree with nucleus() on every proper conic. Throws OddCharacteristic,
/// DegenerateConic (when the radical vector is zero).
ProjPoint nucleus_by_polarity(const Conic& c);

/// The unique conic through five points, no three collinear.
/// Throws CollinearTriple, and AmbiguousFit if the solution space is not
/// one-dimensional.
Conic fit_conic(std::span<const ProjPoint> points);

/// Every conic (one per projective class of coefficient vectors) vanishing at
/// all the given points. Throws EmptyMatrix for an empty span.
std::vector<Conic> conics_through(std::span<const ProjPoint> points);

}  // namespace galois_arrow
