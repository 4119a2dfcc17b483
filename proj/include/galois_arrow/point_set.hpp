#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "galois_arrow/plane.hpp"

namespace galois_arrow {

/// A set of points of one plane, kept in plane order with a membership mask.
/// Holds a non-owning pointer to the plane.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DuplicatePoints when an id repeats.
  PointSet(const Plane& plane, std::vector<std::uint32_t> ids);
  static PointSet from_points(const Plane& plane, std::span<const ProjPoint> points);

  const Plane& plane() const { return *plane_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::span<const std::uint32_t> ids() const noexcept { return ids_; }
  std::span<const std::uint8_t> mask() const noexcept { return mask_; }

  bool contains(std::uint32_t id) const { return id < mask_.size() && mask_[id] != 0; }
  bool contains(const ProjPoint& p) const { return contains(plane_->index(p)); }

  std::vector<ProjPoint> points() const;

  PointSet with(std::uint32_t id) const;
  PointSet without(std::uint32_t id) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.plane_ == b.plane_ && a.ids_ == b.ids_;
  }

 private:
  const Plane* plane_ = nullptr;
  std::vector<std::uint32_t> ids_;
  std::vector<std::uint8_t> mask_;
};

/// |L ∩ S| for every line L of the plane, indexed by line id.
std::vector<std::uint32_t> line_census(const PointSet& set, Execution exec = Execution::Parallel);

/// Largest intersection of the set with any line; 2 or less means no three
/// points are collinear.
std::uint32_t max_line_intersection(const PointSet& set, Execution exec = Execution::Parallel);

}  // namespace galois_arrow
