#include "galois_arrow/arrow.hpp"

namespace galois_arrow {

std::string_view to_string(TemporalClass c) noexcept {
  switch (c) {
    case TemporalClass::Past: return "Past";
    case TemporalClass::Present: return "Present";
    case TemporalClass::Future: return "Future";
  }
  return "Unknown";
}

std::string_view to_string(ArrowMode m) noexcept {
  return m == ArrowMode::Conic ? "conic" : "arc";
}

void Tallies::add(TemporalClass c) noexcept {
  switch (c) {
    case TemporalClass::Past: ++past; break;
    case TemporalClass::Present: ++present; break;
    case TemporalClass::Future: ++future; break;
  }
}

bool is_valid_ideal_line(const ProjLine& line) {
  return !line[0].is_zero() && !line[1].is_zero() && !line[2].is_zero();
}

void validate_ideal_line(const ProjLine& line, const Plane& plane) {
  const Field& f = plane.field();
  const auto b1 = ProjPoint::make(f.zero(), f.one(), f.zero());
  const auto b2 = ProjPoint::make(f.one(), f.zero(), f.zero());
  const auto n = ProjPoint::make(f.zero(), f.zero(), f.one());
  if (incident(b1, line) || incident(b2, line)) {
    fail(ErrorCode::HitsBasePoint, "ideal line " + to_string(line) + " passes through a base point");
  }
  if (incident(n, line)) {
    fail(ErrorCode::HitsNucleus, "ideal line " + to_string(line) + " passes through the nucleus");
  }
}

std::vector<ProjLine> valid_ideal_lines(const Plane& plane) {
  std::vector<ProjLine> out;
  for (const auto& l : plane.lines()) {
    if (is_valid_ideal_line(l)) out.push_back(l);
  }
  return out;
}

TemporalClass classify_member(const PointSet& points, const ProjLine& ideal_line) {
  switch (classify_line(points, ideal_line)) {
    case LineClass::Secant: return TemporalClass::Past;
    case LineClass::Tangent: return TemporalClass::Present;
    case LineClass::External: return TemporalClass::Future;
  }
  return TemporalClass::Future;
}

namespace {

ArrowEntry classify_entry(std::size_t id, const Theta& theta, const PointSet& points,
                          const ProjLine& ideal_line) {
  ArrowEntry entry;
  entry.id = id;
  entry.theta = theta;
  entry.temporal = classify_member(points, ideal_line);
  const Plane& plane = points.plane();
  for (auto pid : plane.points_on(plane.index(ideal_line))) {
    if (points.contains(pid)) entry.witnesses.push_back(plane.point(pid));
  }
  return entry;
}

}  // namespace

ArrowReport conic_arrow(const TimePencil& pencil, const ProjLine& ideal_line) {
  const Plane& plane = pencil.plane();
  pencil.nucleus();  // characteristic 2 only
  try {
    validate_ideal_line(ideal_line, plane);
  } catch (const Error& e) {
    fail(ErrorCode::InvalidIdealLine, e.what());
  }
  ArrowReport report;
  report.q = plane.order();
  report.mode = ArrowMode::Conic;
  report.ideal_line = ideal_line;
  for (auto index : pencil.proper()) {
    const PencilMember& m = pencil.members()[index];
    report.members.push_back(classify_entry(report.members.size(), m.theta, m.points, ideal_line));
    report.tallies.add(report.members.back().temporal);
  }
  if (report.tallies.present != 0) {
    fail(ErrorCode::InvariantViolation, "the ideal line is tangent to a proper member");
  }
  return report;
}

ArrowReport conic_arrow(const Plane& plane, const ProjLine& ideal_line) {
  if (plane.field().characteristic() != 2) {
    fail(ErrorCode::OddCharacteristic, "conic_arrow needs characteristic 2");
  }
  return conic_arrow(TimePencil(plane), ideal_line);
}

ArrowReport arc_arrow(const ArcFamily& family) {
  ArrowReport report;
  report.q = family.q;
  report.mode = ArrowMode::Arc;
  report.ideal_line = family.ideal_line;
  report.tangent_line = family.tangent_line;
  report.contact = family.contact;
  for (const auto& m : family.members) {
    report.members.push_back(
        classify_entry(report.members.size(), m.theta, m.arc.points(), family.ideal_line));
    const TemporalClass c = report.members.back().temporal;
    report.tallies.add(c);
    if (c == TemporalClass::Present) report.present_member = report.members.back().id;
  }
  if (report.tallies.present != 1 || report.present_member != family.qstar_index) {
    fail(ErrorCode::InvariantViolation, "the arc family does not have exactly one present arc "
                                        "built from the member through the contact point");
  }
  return report;
}

std::vector<ArcConfiguration> valid_arc_configurations(const TimePencil& pencil) {
  const auto tangents = tangent_line_candidates(pencil);
  std::vector<ArcConfiguration> out;
  for (const auto& ideal : valid_ideal_lines(pencil.plane())) {
    for (const auto& tangent : tangents) {
      const auto& m = pencil.members()[pencil.member_index_through(meet(ideal, tangent))];
      if (m.degeneracy == DegeneracyClass::Proper) out.push_back({ideal, tangent});
    }
  }
  return out;
}

std::vector<ArrowReport> conic_arrow_scan(const TimePencil& pencil, Execution exec) {
  const auto lines = valid_ideal_lines(pencil.plane());
  std::vector<ArrowReport> out(lines.size());
  parallel_for(lines.size(), exec, [&](std::size_t i) { out[i] = conic_arrow(pencil, lines[i]); });
  return out;
}

std::vector<ArrowReport> arc_arrow_scan(const TimePencil& pencil,
                                        std::span<const ArcConfiguration> configs,
                                        Execution exec) {
  std::vector<ArrowReport> out(configs.size());
  parallel_for(configs.size(), exec, [&](std::size_t i) {
    out[i] = arc_arrow(build_time_family(pencil, configs[i].ideal_line, configs[i].tangent_line));
  });
  return out;
}

}  // namespace galois_arrow
