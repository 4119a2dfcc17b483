#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "galois_arrow/execution.hpp"
#include "galois_arrow/field.hpp"

namespace galois_arrow {

struct PointTag {};
struct LineTag {};

/// Homogeneous triple normalized so its first nonzero coordinate is 1.
/// Points and lines share the representation but are distinct types.
template <class Tag>
class ProjTriple {
 public:
  ProjTriple() = default;

  /// Throws ZeroTriple for (0, 0, 0) and MixedFields for mixed coordinates.
  static ProjTriple make(const Element& a, const Element& b, const Element& c) {
    common_field(a, b);
    common_field(a, c);
    ProjTriple out;
    out.coords_ = {a, b, c};
    for (const auto& x : out.coords_) {
      if (x.is_zero()) continue;
      if (!x.is_one()) {
        const Element scale = x.inv();
        for (auto& y : out.coords_) y *= scale;
      }
      return out;
    }
    fail(ErrorCode::ZeroTriple, "homogeneous triple (0, 0, 0)");
  }

  static ProjTriple from_codes(const Field& field, std::uint32_t a, std::uint32_t b,
                               std::uint32_t c) {
    return make(field.element(a), field.element(b), field.element(c));
  }

  const Element& operator[](std::size_t i) const { return coords_[i]; }
  const std::array<Element, 3>& coords() const noexcept { return coords_; }
  const Field& field() const { return *coords_[0].field(); }

  friend bool operator==(const ProjTriple&, const ProjTriple&) = default;

 private:
  std::array<Element, 3> coords_;
};

using ProjPoint = ProjTriple<PointTag>;
using ProjLine = ProjTriple<LineTag>;

/// Position in plane order: (1, a, b) by (a, b), then (0, 1, b), then (0, 0, 1).
template <class Tag>
std::uint32_t canonical_index(const ProjTriple<Tag>& t) {
  const std::uint32_t q = t.field().order();
  if (t[0].is_one()) return t[1].code() * q + t[2].code();
  if (t[1].is_one()) return q * q + t[2].code();
  return q * q + q;
}

/// "(a:b:c)" with hex elements for p = 2, decimal otherwise.
template <class Tag>
std::string to_string(const ProjTriple<Tag>& t) {
  const Field& f = t.field();
  return "(" + f.format(t[0]) + ":" + f.format(t[1]) + ":" + f.format(t[2]) + ")";
}

/// Parses "a,b,c" or "(a:b:c)" and normalizes.
ProjPoint parse_point(const Field& field, std::string_view text);
ProjLine parse_line(const Field& field, std::string_view text);

/// PG(2, q): all points and lines in plane order plus the incidence cache.
class Plane {
 public:
  explicit Plane(FieldPtr field, Execution exec = Execution::Parallel);

  const Field& field() const noexcept { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  std::uint32_t order() const noexcept { return field_->order(); }
  /// q^2 + q + 1.
  std::size_t size() const noexcept { return points_.size(); }

  const std::vector<ProjPoint>& points() const noexcept { return points_; }
  const std::vector<ProjLine>& lines() const noexcept { return lines_; }
  const ProjPoint& point(std::uint32_t id) const { return points_.at(id); }
  const ProjLine& line(std::uint32_t id) const { return lines_.at(id); }

  /// Throws MixedFields when the triple belongs to another field.
  std::uint32_t index(const ProjPoint& p) const;
  std::uint32_t index(const ProjLine& l) const;

  /// Cached incidence, ids ascending.
  std::span<const std::uint32_t> points_on(std::uint32_t line_id) const {
    return line_points_.at(line_id);
  }
  std::span<const std::uint32_t> lines_through(std::uint32_t point_id) const {
    return point_lines_.at(point_id);
  }

 private:
  FieldPtr field_;
  std::vector<ProjPoint> points_;
  std::vector<ProjLine> lines_;
  std::vector<std::vector<std::uint32_t>> line_points_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
};

inline Plane build_plane(FieldPtr field) { return Plane(std::move(field)); }

/// All normalized triples of the field in plane order.
std::vector<ProjPoint> enumerate_points(const Field& field);

/// Point ids on every line, by direct parametrization of each line: O(q^3).
std::vector<std::vector<std::uint32_t>> incidence_by_parametrization(
    const Field& field, std::span<const ProjLine> lines, Execution exec);
/// Point ids on every line, by dot product over all pairs: O(q^4). Reference path.
std::vector<std::vector<std::uint32_t>> incidence_by_dot_product(
    std::span<const ProjPoint> points, std::span<const ProjLine> lines, Execution exec);

bool incident(const ProjPoint& p, const ProjLine& l);
/// Throws CoincidentPoints.
ProjLine line_through(const ProjPoint& a, const ProjPoint& b);
/// Throws CoincidentLines.
ProjPoint meet(const ProjLine& a, const ProjLine& b);
/// Zero determinant. Repeated points count as collinear.
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
std::vector<ProjPoint> points_on(const ProjLine& line, const Plane& plane);

}  // namespace galois_arrow
