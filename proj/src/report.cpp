#include "galois_arrow/report.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace galois_arrow {
namespace {

Json points_json(std::span<const ProjPoint> points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(to_string(p));
  return out;
}

std::string csv_theta(const Theta& t) {
  const Field& f = *t.first.field();
  return "(" + f.format(t.first) + ":" + f.format(t.second) + ")";
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(ErrorCode::InvariantViolation, "report schema: " + path + " " + what);
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) schema_error(path + "." + key, "is missing");
  return obj.at(key);
}

void require_count(const Json& obj, const std::string& key, const std::string& path) {
  if (!require(obj, key, path).is_number_unsigned()) {
    schema_error(path + "." + key, "is not a non-negative integer");
  }
}

void require_triple(const Json& value, const std::string& path) {
  if (!value.is_string()) schema_error(path, "is not a string");
  const auto s = value.get<std::string>();
  if (s.size() < 7 || s.front() != '(' || s.back() != ')' ||
      std::count(s.begin(), s.end(), ':') != 2) {
    schema_error(path, "is not a triple '(a:b:c)'");
  }
}

void require_string_array(const Json& value, std::size_t size, const std::string& path) {
  if (!value.is_array() || value.size() != size) {
    schema_error(path, "is not an array of " + std::to_string(size) + " strings");
  }
  for (const auto& v : value) {
    if (!v.is_string()) schema_error(path, "has a non-string entry");
  }
}

}  // namespace

Json to_json(const Theta& theta) {
  const Field& f = *theta.first.field();
  return Json::array({f.format(theta.first), f.format(theta.second)});
}

Json to_json(const Conic& conic) {
  Json out = Json::array();
  for (const auto& c : conic.coefficients()) out.push_back(conic.field().format(c));
  return out;
}

Json to_json(const PointSet& points) {
  const auto list = points.points();
  return points_json(list);
}

Json field_report(const Field& field) {
  Json out;
  out["p"] = field.characteristic();
  out["n"] = field.degree();
  out["q"] = field.order();
  out["modulus"] = field.modulus();
  out["modulus_text"] = poly::to_string(field.modulus());
  out["generator"] = field.format(field.generator());
  out["primitive"] = field.format(field.primitive());
  Json elements = Json::array();
  for (const auto& e : field.elements()) {
    Json row;
    row["element"] = field.format(e);
    row["coeffs"] = e.coeffs();
    row["inverse"] = e.is_zero() ? Json(nullptr) : Json(field.format(e.inv()));
    if (field.characteristic() == 2) row["sqrt"] = field.format(sqrt_char2(e));
    elements.push_back(std::move(row));
  }
  out["elements"] = std::move(elements);
  return out;
}

Json plane_report(const Plane& plane) {
  Json out;
  out["q"] = plane.order();
  out["point_count"] = plane.size();
  out["points"] = points_json(plane.points());
  Json lines = Json::array();
  for (const auto& l : plane.lines()) lines.push_back(to_string(l));
  out["lines"] = std::move(lines);
  return out;
}

Json conic_report(const Plane& plane) {
  const Conic conic = canonical_conic(plane.field());
  const PointSet points = point_set(conic, plane);
  const auto params = parametrize_canonical(plane.field());
  const auto census = line_census(points);
  std::size_t by_size[3] = {0, 0, 0};
  for (auto c : census) ++by_size[c];
  Json out;
  out["q"] = plane.order();
  out["conic"] = to_json(conic);
  out["class"] = to_string(classify_zero_set(points));
  out["points"] = to_json(points);
  out["parametrization"] = points_json(params);
  Json tangents = Json::array();
  for (const auto& l : tangent_lines(conic, plane)) tangents.push_back(to_string(l));
  out["tangents"] = std::move(tangents);
  out["line_census"] = {{"secant", by_size[2]}, {"tangent", by_size[1]}, {"external", by_size[0]}};
  out["nucleus"] = plane.field().characteristic() == 2 ? Json(to_string(nucleus(conic, plane)))
                                                      : Json(nullptr);
  return out;
}

Json pencil_report(const TimePencil& pencil) {
  const Plane& plane = pencil.plane();
  Json out;
  out["q"] = plane.order();
  out["generators"] = Json::array({to_json(pencil.pencil().generator1()),
                                   to_json(pencil.pencil().generator2())});
  out["base_points"] = to_json(base_points(pencil.pencil(), plane));
  out["nucleus"] = plane.field().characteristic() == 2 ? Json(to_string(pencil.nucleus()))
                                                      : Json(nullptr);
  Json members = Json::array();
  for (const auto& m : pencil.members()) {
    Json row;
    row["theta"] = to_json(m.theta);
    row["conic"] = to_json(m.conic);
    row["class"] = to_string(m.degeneracy);
    row["size"] = m.points.size();
    members.push_back(std::move(row));
  }
  out["members"] = std::move(members);
  return out;
}

Json family_report(const ArcFamily& family) {
  Json out;
  out["q"] = family.q;
  out["Linf"] = to_string(family.ideal_line);
  out["Lstar"] = to_string(family.tangent_line);
  out["A"] = to_string(family.contact);
  out["Qstar_theta"] = to_json(family.qstar_theta);
  out["nucleus"] = to_string(family.nucleus);
  Json members = Json::array();
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    Json row;
    row["theta"] = to_json(m.theta);
    row["points"] = to_json(m.arc.points());
    row["is_conic"] = is_conic_arc(m.arc);
    row["touch"] = to_string(m.touch);
    row["is_qstar"] = i == family.qstar_index;
    members.push_back(std::move(row));
  }
  out["members"] = std::move(members);
  return out;
}

Json arrow_report(const ArrowReport& report) {
  Json out;
  out["q"] = report.q;
  out["mode"] = to_string(report.mode);
  out["ideal_line"] = to_string(report.ideal_line);
  if (report.tangent_line) out["tangent_line"] = to_string(*report.tangent_line);
  if (report.contact) out["contact"] = to_string(*report.contact);
  out["tallies"] = {{"past", report.tallies.past},
                    {"present", report.tallies.present},
                    {"future", report.tallies.future}};
  out["present_member"] = report.present_member ? Json(*report.present_member) : Json(nullptr);
  Json members = Json::array();
  for (const auto& m : report.members) {
    Json row;
    row["id"] = m.id;
    row["theta"] = to_json(m.theta);
    row["class"] = to_string(m.temporal);
    row["witnesses"] = points_json(m.witnesses);
    members.push_back(std::move(row));
  }
  out["members"] = std::move(members);
  return out;
}

Json arrow_scan_report(std::uint32_t q, ArrowMode mode, std::span<const ArrowReport> reports) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> distinct;
  Json list = Json::array();
  for (const auto& r : reports) {
    list.push_back(arrow_report(r));
    ++distinct[{r.tallies.past, r.tallies.present, r.tallies.future}];
  }
  Json tallies = Json::array();
  for (const auto& [key, count] : distinct) {
    tallies.push_back({{"past", std::get<0>(key)},
                       {"present", std::get<1>(key)},
                       {"future", std::get<2>(key)},
                       {"configurations", count}});
  }
  Json out;
  out["q"] = q;
  out["mode"] = to_string(mode);
  out["exhaustive"] = true;
  out["reports"] = std::move(list);
  out["summary"] = {{"configurations", reports.size()}, {"tallies", std::move(tallies)}};
  return out;
}

void validate_arrow_json(const Json& report) {
  const std::string root = "$";
  require_count(report, "q", root);
  const auto& mode = require(report, "mode", root);
  if (mode != "conic" && mode != "arc") schema_error("$.mode", "is not 'conic' or 'arc'");
  require_triple(require(report, "ideal_line", root), "$.ideal_line");
  const auto& tallies = require(report, "tallies", root);
  for (const char* key : {"past", "present", "future"}) require_count(tallies, key, "$.tallies");
  const auto& members = require(report, "members", root);
  if (!members.is_array()) schema_error("$.members", "is not an array");
  std::map<std::string, std::size_t> counted;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string path = "$.members[" + std::to_string(i) + "]";
    const auto& m = members[i];
    require_count(m, "id", path);
    if (m.at("id") != i) schema_error(path + ".id", "is out of order");
    require_string_array(require(m, "theta", path), 2, path + ".theta");
    const auto& cls = require(m, "class", path);
    if (cls != "Past" && cls != "Present" && cls != "Future") {
      schema_error(path + ".class", "is not Past, Present or Future");
    }
    const auto& witnesses = require(m, "witnesses", path);
    if (!witnesses.is_array()) schema_error(path + ".witnesses", "is not an array");
    for (const auto& w : witnesses) require_triple(w, path + ".witnesses[]");
    const std::size_t expected = cls == "Past" ? 2 : cls == "Present" ? 1 : 0;
    if (witnesses.size() != expected) schema_error(path + ".witnesses", "disagrees with class");
    ++counted[cls.get<std::string>()];
  }
  if (tallies.at("past") != counted["Past"] || tallies.at("present") != counted["Present"] ||
      tallies.at("future") != counted["Future"]) {
    schema_error("$.tallies", "disagree with member classes");
  }
  if (mode == "arc") {
    require_triple(require(report, "tangent_line", root), "$.tangent_line");
    require_triple(require(report, "contact", root), "$.contact");
  }
}

void validate_family_json(const Json& report) {
  const std::string root = "$";
  require_count(report, "q", root);
  for (const char* key : {"Linf", "Lstar", "A"}) require_triple(require(report, key, root), "$." + std::string(key));
  require_string_array(require(report, "Qstar_theta", root), 2, "$.Qstar_theta");
  const auto q = report.at("q").get<std::size_t>();
  const auto& members = require(report, "members", root);
  if (!members.is_array()) schema_error("$.members", "is not an array");
  for (std::size_t i = 0; i < members.size(); ++i) {
    const std::string path = "$.members[" + std::to_string(i) + "]";
    const auto& m = members[i];
    require_string_array(require(m, "theta", path), 2, path + ".theta");
    const auto& points = require(m, "points", path);
    if (!points.is_array() || points.size() != q + 1) schema_error(path + ".points", "does not hold q+1 points");
    for (const auto& p : points) require_triple(p, path + ".points[]");
    if (!require(m, "is_conic", path).is_boolean()) schema_error(path + ".is_conic", "is not a boolean");
  }
}

void write_arrow_csv(std::ostream& out, std::span<const ArrowReport> reports,
                     bool with_configuration, bool header) {
  if (header) {
    out << "q,mode," << (with_configuration ? "linf,lstar," : "") << "member_id,theta,class\n";
  }
  for (const auto& r : reports) {
    for (const auto& m : r.members) {
      out << r.q << ',' << to_string(r.mode) << ',';
      if (with_configuration) {
        out << to_string(r.ideal_line) << ','
            << (r.tangent_line ? to_string(*r.tangent_line) : std::string()) << ',';
      }
      out << m.id << ',' << csv_theta(m.theta) << ',' << to_string(m.temporal) << '\n';
    }
  }
}

}  // namespace galois_arrow
