#include "galois_arrow/plane.hpp"

#include <algorithm>

namespace galois_arrow {
namespace {

std::array<Element, 3> cross(const std::array<Element, 3>& a, const std::array<Element, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool all_zero(const std::array<Element, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

template <class Triple>
Triple parse_triple(const Field& field, std::string_view text) {
  if (text.starts_with('(') && text.ends_with(')')) text = text.substr(1, text.size() - 2);
  const char sep = text.find(':') != std::string_view::npos ? ':' : ',';
  std::array<Element, 3> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(sep, start) : text.size();
    if (end == std::string_view::npos) {
      fail(ErrorCode::UsageError, "malformed triple '" + std::string(text) + "'");
    }
    parts[i] = field.parse(text.substr(start, end - start));
    start = end + 1;
  }
  try {
    return Triple::make(parts[0], parts[1], parts[2]);
  } catch (const Error& e) {
    fail(ErrorCode::UsageError, e.what());
  }
}

}  // namespace

ProjPoint parse_point(const Field& field, std::string_view text) {
  return parse_triple<ProjPoint>(field, text);
}

ProjLine parse_line(const Field& field, std::string_view text) {
  return parse_triple<ProjLine>(field, text);
}

std::vector<ProjPoint> enumerate_points(const Field& field) {
  const std::uint32_t q = field.order();
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(q) * q + q + 1);
  for (std::uint32_t a = 0; a < q; ++a) {
    for (std::uint32_t b = 0; b < q; ++b) out.push_back(ProjPoint::from_codes(field, 1, a, b));
  }
  for (std::uint32_t b = 0; b < q; ++b) out.push_back(ProjPoint::from_codes(field, 0, 1, b));
  out.push_back(ProjPoint::from_codes(field, 0, 0, 1));
  return out;
}

std::vector<std::vector<std::uint32_t>> incidence_by_parametrization(
    const Field& field, std::span<const ProjLine> lines, Execution exec) {
  std::vector<std::vector<std::uint32_t>> out(lines.size());
  const auto elements = field.elements();
  parallel_for(lines.size(), exec, [&](std::size_t i) {
    const ProjLine& l = lines[i];
    auto& ids = out[i];
    ids.reserve(elements.size() + 1);
    if (!l[2].is_zero()) {
      // x3 = -(l1 x1 + l2 x2) / l3 over the points (x1 : x2) of the projective line.
      const Element scale = -l[2].inv();
      for (const auto& t : elements) {
        ids.push_back(canonical_index(
            ProjPoint::make(field.one(), t, (l[0] + l[1] * t) * scale)));
      }
      ids.push_back(canonical_index(ProjPoint::make(field.zero(), field.one(), l[1] * scale)));
    } else {
      // l1 x1 + l2 x2 = 0 fixes (x1 : x2) = (-l2 : l1); x3 is free.
      const ProjPoint base = ProjPoint::make(-l[1], l[0], field.zero());
      for (const auto& t : elements) {
        ids.push_back(canonical_index(ProjPoint::make(base[0], base[1], t)));
      }
      ids.push_back(canonical_index(ProjPoint::make(field.zero(), field.zero(), field.one())));
    }
    std::sort(ids.begin(), ids.end());
  });
  return out;
}

std::vector<std::vector<std::uint32_t>> incidence_by_dot_product(
    std::span<const ProjPoint> points, std::span<const ProjLine> lines, Execution exec) {
  std::vector<std::vector<std::uint32_t>> out(lines.size());
  parallel_for(lines.size(), exec, [&](std::size_t i) {
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (incident(points[j], lines[i])) out[i].push_back(static_cast<std::uint32_t>(j));
    }
  });
  return out;
}

Plane::Plane(FieldPtr field, Execution exec) : field_(std::move(field)) {
  points_ = enumerate_points(*field_);
  lines_.reserve(points_.size());
  for (const auto& p : points_) lines_.push_back(ProjLine::make(p[0], p[1], p[2]));
  line_points_ = incidence_by_parametrization(*field_, lines_, exec);
  point_lines_.assign(points_.size(), {});
  for (std::uint32_t l = 0; l < line_points_.size(); ++l) {
    for (auto p : line_points_[l]) point_lines_[p].push_back(l);
  }
}

std::uint32_t Plane::index(const ProjPoint& p) const {
  if (!p.field().same_as(*field_)) fail(ErrorCode::MixedFields, "point from another field");
  return canonical_index(p);
}

std::uint32_t Plane::index(const ProjLine& l) const {
  if (!l.field().same_as(*field_)) fail(ErrorCode::MixedFields, "line from another field");
  return canonical_index(l);
}

bool incident(const ProjPoint& p, const ProjLine& l) {
  return (p[0] * l[0] + p[1] * l[1] + p[2] * l[2]).is_zero();
}

ProjLine line_through(const ProjPoint& a, const ProjPoint& b) {
  const auto c = cross(a.coords(), b.coords());
  if (all_zero(c)) fail(ErrorCode::CoincidentPoints, "line_through needs two distinct points");
  return ProjLine::make(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& a, const ProjLine& b) {
  const auto c = cross(a.coords(), b.coords());
  if (all_zero(c)) fail(ErrorCode::CoincidentLines, "meet needs two distinct lines");
  return ProjPoint::make(c[0], c[1], c[2]);
}

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  const auto bc = cross(b.coords(), c.coords());
  return (a[0] * bc[0] + a[1] * bc[1] + a[2] * bc[2]).is_zero();
}

std::vector<ProjPoint> points_on(const ProjLine& line, const Plane& plane) {
  std::vector<ProjPoint> out;
  for (auto id : plane.points_on(plane.index(line))) out.push_back(plane.point(id));
  return out;
}

}  // namespace galois_arrow
