#pragma once

#include <span>
#include <vector>

#include "galois_arrow/pencil.hpp"

namespace galois_arrow {

/// Exhaustive triple check. Throws DuplicatePoints.
bool is_arc(std::span<const ProjPoint> points);
/// Same predicate from the cached incidence: no line holds three members.
bool is_arc(const PointSet& points);

/// A point set with no three points collinear.
class Arc {
 public:
  Arc() = default;
  /// Throws NotAnArc.
  explicit Arc(PointSet points);

  const PointSet& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool contains(const ProjPoint& p) const { return points_.contains(p); }

  friend bool operator==(const Arc&, const Arc&) = default;

 private:
  PointSet points_;
};

/// Point set of a proper conic plus its nucleus: a (q+2)-arc.
/// Throws OddCharacteristic, DegenerateConic.
Arc augment_with_nucleus(const Conic& conic, const Plane& plane);

/// Throws PointNotInArc.
Arc puncture(const Arc& arc, const ProjPoint& p);

/// Fits the conic through the first five points (plane order) and checks
/// that it contains the rest. Throws ArcTooSmall for fewer than five points.
bool is_conic_arc(const Arc& arc);

/// The single point where a line through the nucleus meets the proper conic.
/// Throws OddCharacteristic, DegenerateConic, NotThroughNucleus, and
/// IntersectionNotSingle (unreachable for valid input).
ProjPoint touch_point(const Conic& conic, const ProjLine& line, const Plane& plane);

struct FamilyArc {
  Theta theta;
  Conic source;
  /// Removed from the source conic; the common nucleus takes its place.
  ProjPoint touch;
  Arc arc;
};

struct ArcFamily {
  std::uint32_t q = 0;
  ProjLine ideal_line;
  ProjLine tangent_line;
  /// Where the ideal line meets the tangent line.
  ProjPoint contact;
  ProjPoint nucleus;
  Theta qstar_theta;
  /// Index into members of the arc built from the member through contact.
  std::size_t qstar_index = 0;
  std::vector<FamilyArc> members;
};

/// Lines through the nucleus other than x1 = 0 and x2 = 0, in plane order.
/// Throws OddCharacteristic.
std::vector<ProjLine> tangent_line_candidates(const TimePencil& pencil);

/// One (q+1)-arc per proper member of the time pencil: the member's points,
/// minus the point where tangent_line touches it, plus the nucleus.
/// Throws UnsupportedField (q < 4), OddCharacteristic, InvalidIdealLine,
/// InvalidTangentLine, DegenerateContactPoint.
ArcFamily build_time_family(const TimePencil& pencil, const ProjLine& ideal_line,
                            const ProjLine& tangent_line);
ArcFamily build_time_family(const Plane& plane, const ProjLine& ideal_line,
                            const ProjLine& tangent_line);

}  // namespace galois_arrow
