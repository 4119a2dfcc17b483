#include "galois_arrow/point_set.hpp"

#include <algorithm>

namespace galois_arrow {

PointSet::PointSet(const Plane& plane, std::vector<std::uint32_t> ids)
    : plane_(&plane), ids_(std::move(ids)), mask_(plane.size(), 0) {
  for (auto id : ids_) {
    if (id >= mask_.size()) fail(ErrorCode::UsageError, "point id outside the plane");
    if (mask_[id] != 0) fail(ErrorCode::DuplicatePoints, "point set contains a repeated point");
    mask_[id] = 1;
  }
  std::sort(ids_.begin(), ids_.end());
}

PointSet PointSet::from_points(const Plane& plane, std::span<const ProjPoint> points) {
  std::vector<std::uint32_t> ids;
  ids.reserve(points.size());
  for (const auto& p : points) ids.push_back(plane.index(p));
  return PointSet(plane, std::move(ids));
}

std::vector<ProjPoint> PointSet::points() const {
  std::vector<ProjPoint> out;
  out.reserve(ids_.size());
  for (auto id : ids_) out.push_back(plane_->point(id));
  return out;
}

PointSet PointSet::with(std::uint32_t id) const {
  auto ids = ids_;
  ids.push_back(id);
  return PointSet(*plane_, std::move(ids));
}

PointSet PointSet::without(std::uint32_t id) const {
  auto ids = ids_;
  ids.erase(std::remove(ids.begin(), ids.end(), id), ids.end());
  return PointSet(*plane_, std::move(ids));
}

std::vector<std::uint32_t> line_census(const PointSet& set, Execution exec) {
  const Plane& plane = set.plane();
  std::vector<std::uint32_t> counts(plane.size(), 0);
  const auto mask = set.mask();
  parallel_for(plane.size(), exec, [&](std::size_t l) {
    std::uint32_t n = 0;
    for (auto id : plane.points_on(static_cast<std::uint32_t>(l))) n += mask[id];
    counts[l] = n;
  });
  return counts;
}

std::uint32_t max_line_intersection(const PointSet& set, Execution exec) {
  const auto counts = line_census(set, exec);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

}  // namespace galois_arrow
