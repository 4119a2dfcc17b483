#include "galois_arrow/arc.hpp"

#include <algorithm>

#include "galois_arrow/arrow.hpp"

namespace galois_arrow {

bool is_arc(std::span<const ProjPoint> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i] == points[j]) fail(ErrorCode::DuplicatePoints, "repeated point in arc test");
    }
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      for (std::size_t k = j + 1; k < points.size(); ++k) {
        if (collinear(points[i], points[j], points[k])) return false;
      }
    }
  }
  return true;
}

bool is_arc(const PointSet& points) {
  return max_line_intersection(points, Execution::Serial) <= 2;
}

Arc::Arc(PointSet points) : points_(std::move(points)) {
  if (!is_arc(points_)) fail(ErrorCode::NotAnArc, "point set has three collinear points");
}

Arc augment_with_nucleus(const Conic& conic, const Plane& plane) {
  const ProjPoint n = nucleus(conic, plane);
  return Arc(point_set(conic, plane).with(plane.index(n)));
}

Arc puncture(const Arc& arc, const ProjPoint& p) {
  if (!arc.contains(p)) fail(ErrorCode::PointNotInArc, "point " + to_string(p) + " is not in the arc");
  const PointSet& set = arc.points();
  return Arc(set.without(set.plane().index(p)));
}

bool is_conic_arc(const Arc& arc) {
  if (arc.size() < 5) {
    fail(ErrorCode::ArcTooSmall, "an arc of " + std::to_string(arc.size()) +
                                     " points does not determine a conic");
  }
  const auto points = arc.points().points();
  const Conic fitted = fit_conic(std::span<const ProjPoint>(points).first(5));
  return std::all_of(points.begin() + 5, points.end(),
                     [&](const ProjPoint& p) { return evaluate(fitted, p).is_zero(); });
}

namespace {

ProjPoint single_intersection(const PointSet& points, const ProjLine& line) {
  const Plane& plane = points.plane();
  std::optional<std::uint32_t> hit;
  for (auto id : plane.points_on(plane.index(line))) {
    if (!points.contains(id)) continue;
    if (hit) fail(ErrorCode::IntersectionNotSingle, "line through the nucleus is a secant");
    hit = id;
  }
  if (!hit) fail(ErrorCode::IntersectionNotSingle, "line through the nucleus misses the conic");
  return plane.point(*hit);
}

}  // namespace

ProjPoint touch_point(const Conic& conic, const ProjLine& line, const Plane& plane) {
  const ProjPoint n = nucleus(conic, plane);
  if (!incident(n, line)) {
    fail(ErrorCode::NotThroughNucleus,
         "line " + to_string(line) + " does not pass through the nucleus " + to_string(n));
  }
  return single_intersection(point_set(conic, plane), line);
}

std::vector<ProjLine> tangent_line_candidates(const TimePencil& pencil) {
  const Plane& plane = pencil.plane();
  const ProjPoint& n = pencil.nucleus();
  const ProjLine nb1 = line_through(n, pencil.base_point1());
  const ProjLine nb2 = line_through(n, pencil.base_point2());
  std::vector<ProjLine> out;
  for (auto id : plane.lines_through(plane.index(n))) {
    const ProjLine& l = plane.line(id);
    if (!(l == nb1) && !(l == nb2)) out.push_back(l);
  }
  return out;
}

ArcFamily build_time_family(const TimePencil& pencil, const ProjLine& ideal_line,
                            const ProjLine& tangent_line) {
  const Plane& plane = pencil.plane();
  if (plane.order() < 4) {
    fail(ErrorCode::UnsupportedField, "the time family needs q >= 4 (got q = " +
                                          std::to_string(plane.order()) + ")");
  }
  const ProjPoint& n = pencil.nucleus();
  try {
    validate_ideal_line(ideal_line, plane);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidIdealLine, e.what());
  }
  if (!incident(n, tangent_line)) {
    fail(ErrorCode::InvalidTangentLine,
         "tangent line " + to_string(tangent_line) + " does not pass through the nucleus");
  }
  if (incident(pencil.base_point1(), tangent_line) || incident(pencil.base_point2(), tangent_line)) {
    fail(ErrorCode::InvalidTangentLine,
         "tangent line " + to_string(tangent_line) + " joins the nucleus to a base point");
  }

  ArcFamily family;
  family.q = plane.order();
  family.ideal_line = ideal_line;
  family.tangent_line = tangent_line;
  family.nucleus = n;
  family.contact = meet(ideal_line, tangent_line);
  const auto& qstar = pencil.members()[pencil.member_index_through(family.contact)];
  if (qstar.degeneracy != DegeneracyClass::Proper) {
    fail(ErrorCode::DegenerateContactPoint,
         "contact point " + to_string(family.contact) + " lies on the " +
             std::string(to_string(qstar.degeneracy)) + " member " + to_string(qstar.theta));
  }
  family.qstar_theta = qstar.theta;

  const std::uint32_t nucleus_id = plane.index(n);
  for (auto index : pencil.proper()) {
    const PencilMember& m = pencil.members()[index];
    const ProjPoint touch = single_intersection(m.points, tangent_line);
    if (m.theta == qstar.theta) family.qstar_index = family.members.size();
    PointSet points = m.points.without(plane.index(touch)).with(nucleus_id);
    try {
      family.members.push_back({m.theta, m.conic, touch, Arc(std::move(points))});
    } catch (const Error& e) {
      fail(ErrorCode::InvariantViolation, std::string("family member is not an arc: ") + e.what());
    }
  }
  return family;
}

ArcFamily build_time_family(const Plane& plane, const ProjLine& ideal_line,
                            const ProjLine& tangent_line) {
  if (plane.field().characteristic() != 2) {
    fail(ErrorCode::OddCharacteristic, "the time family needs characteristic 2");
  }
  if (plane.order() < 4) {
    fail(ErrorCode::UnsupportedField, "the time family needs q >= 4 (got q = " +
                                          std::to_string(plane.order()) + ")");
  }
  return build_time_family(TimePencil(plane), ideal_line, tangent_line);
}

}  // namespace galois_arrow
