#pragma once

#include <vector>

#include "galois_arrow/conic.hpp"

namespace galois_arrow {

/// Projective pencil parameter (theta1 : theta2), normalized to (1, t) or (0, 1).
struct Theta {
  Element first;
  Element second;

  /// Throws ZeroTriple when both are zero.
  static Theta make(const Element& first, const Element& second);

  /// theta2 / theta1 is infinite for the (0, 1) member.
  bool is_infinite() const { return first.is_zero(); }

  friend bool operator==(const Theta&, const Theta&) = default;
};

std::string to_string(const Theta& t);

/// theta1 * generator1 + theta2 * generator2.
class Pencil {
 public:
  /// Throws DependentGenerators if the generators are proportional.
  Pencil(const Conic& generator1, const Conic& generator2);

  const Conic& generator1() const noexcept { return g1_; }
  const Conic& generator2() const noexcept { return g2_; }
  const Field& field() const { return g1_.field(); }

  Conic combine(const Theta& theta) const;

 private:
  Conic g1_;
  Conic g2_;
};

struct PencilMember {
  Theta theta;
  Conic conic;
  DegeneracyClass degeneracy;
  PointSet points;
};

/// generator1 = x1 x2, generator2 = x3^2.
Pencil time_pencil(const Field& field);

/// q+1 members: (1, t) for t in element order, then (0, 1).
std::vector<PencilMember> members(const Pencil& pencil, const Plane& plane,
                                  Execution exec = Execution::Parallel);

PencilMember member_at(const Pencil& pencil, const Theta& theta, const Plane& plane);

/// Points on both generators (hence on every member).
PointSet base_points(const Pencil& pencil, const Plane& plane);

/// The member whose conic vanishes at p, degenerate members included.
/// Throws BasePoint.
PencilMember member_through(const Pencil& pencil, const ProjPoint& p, const Plane& plane);

/// Nucleus shared by every proper member. Throws OddCharacteristic,
/// NoProperMember, NucleiDiffer.
ProjPoint common_nucleus(const Pencil& pencil, const Plane& plane);

/// The pencil x1 x2 + t x3^2 over one plane with its members, classes and
/// (for q even) common nucleus computed once. Holds a reference to the plane.
class TimePencil {
 public:
  explicit TimePencil(const Plane& plane, Execution exec = Execution::Parallel);

  const Plane& plane() const noexcept { return *plane_; }
  const Pencil& pencil() const noexcept { return pencil_; }
  const std::vector<PencilMember>& members() const noexcept { return members_; }
  /// Indices into members() of the proper members, in member order.
  const std::vector<std::size_t>& proper() const noexcept { return proper_; }

  /// (0,1,0) and (1,0,0).
  const ProjPoint& base_point1() const noexcept { return b1_; }
  const ProjPoint& base_point2() const noexcept { return b2_; }
  /// (0,0,1), which is where the two lines of the x1 x2 member cross.
  const ProjPoint& vertex() const noexcept { return vertex_; }
  /// Common nucleus of the proper members. Throws OddCharacteristic.
  const ProjPoint& nucleus() const;

  /// Index into members() of the member through p. Throws BasePoint.
  std::size_t member_index_through(const ProjPoint& p) const;

 private:
  const Plane* plane_;
  Pencil pencil_;
  std::vector<PencilMember> members_;
  std::vector<std::size_t> proper_;
  ProjPoint b1_, b2_, vertex_;
  std::optional<ProjPoint> nucleus_;
};

}  // namespace galois_arrow
