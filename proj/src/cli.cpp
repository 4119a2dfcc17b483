#include "galois_arrow/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <sstream>

#include "galois_arrow/report.hpp"

namespace galois_arrow::cli {
namespace {

constexpr std::uint32_t kFamilyMinOrder = 4;

[[noreturn]] void usage(const std::string& message) { fail(ErrorCode::UsageError, message); }

void check_triple_syntax(const std::string& text, std::uint32_t p, const char* flag) {
  int base = p == 2 ? 16 : 10;
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t end = i < 2 ? text.find(',', start) : text.size();
    if (end == std::string::npos) usage(std::string(flag) + " expects a,b,c (got '" + text + "')");
    std::string_view token(text.data() + start, end - start);
    if (base == 16 && (token.starts_with("0x") || token.starts_with("0X"))) token.remove_prefix(2);
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, base);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      usage(std::string(flag) + " has a malformed element in '" + text + "'");
    }
    start = end + 1;
  }
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::FieldInfo: return "field-info";
    case Command::Plane: return "plane";
    case Command::Conic: return "conic";
    case Command::Pencil: return "pencil";
    case Command::Family: return "family";
    case Command::Arrow: return "arrow";
  }
  return "?";
}

void write_error(std::ostream& err, const Error& e) {
  Json line;
  line["error"] = to_string(e.code());
  line["message"] = e.what();
  err << line.dump() << '\n';
}

void emit(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

std::string csv_triple(const ProjPoint& p) { return to_string(p); }

void run_field_info(const Field& field, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) return emit(out, field_report(field));
  out << "element,coeffs,inverse,sqrt\n";
  for (const auto& e : field.elements()) {
    std::string coeffs;
    for (auto c : e.coeffs()) coeffs += std::to_string(c);
    out << field.format(e) << ',' << coeffs << ','
        << (e.is_zero() ? std::string() : field.format(e.inv())) << ','
        << (field.characteristic() == 2 ? field.format(sqrt_char2(e)) : std::string()) << '\n';
  }
}

void run_plane(const Plane& plane, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) return emit(out, plane_report(plane));
  out << "kind,id,triple\n";
  for (std::size_t i = 0; i < plane.size(); ++i) {
    out << "point," << i << ',' << csv_triple(plane.points()[i]) << '\n';
  }
  for (std::size_t i = 0; i < plane.size(); ++i) {
    out << "line," << i << ',' << to_string(plane.lines()[i]) << '\n';
  }
}

void run_conic(const Plane& plane, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) return emit(out, conic_report(plane));
  const PointSet points = point_set(canonical_conic(plane.field()), plane);
  out << "q,point_id,point\n";
  for (auto id : points.ids()) out << plane.order() << ',' << id << ',' << csv_triple(plane.point(id)) << '\n';
}

void run_pencil(const Plane& plane, OutputFormat format, std::ostream& out) {
  const TimePencil pencil(plane);
  if (format == OutputFormat::Json) return emit(out, pencil_report(pencil));
  out << "q,member_id,theta,class\n";
  for (std::size_t i = 0; i < pencil.members().size(); ++i) {
    const auto& m = pencil.members()[i];
    const Field& f = plane.field();
    out << plane.order() << ',' << i << ",(" << f.format(m.theta.first) << ':'
        << f.format(m.theta.second) << ")," << to_string(m.degeneracy) << '\n';
  }
}

void run_family(const Plane& plane, const ProjLine& ideal, const ProjLine& tangent,
                OutputFormat format, std::ostream& out) {
  const ArcFamily family = build_time_family(TimePencil(plane), ideal, tangent);
  if (format == OutputFormat::Json) return emit(out, family_report(family));
  const Field& f = plane.field();
  out << "q,member_id,theta,size,is_conic,is_qstar\n";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    const auto& m = family.members[i];
    out << family.q << ',' << i << ",(" << f.format(m.theta.first) << ':' << f.format(m.theta.second)
        << ")," << m.arc.size() << ',' << (is_conic_arc(m.arc) ? "true" : "false") << ','
        << (i == family.qstar_index ? "true" : "false") << '\n';
  }
}

void run_arrow(const Plane& plane, const RunConfig& config, const ProjLine& ideal,
               const ProjLine& tangent, std::ostream& out) {
  const TimePencil pencil(plane);
  std::vector<ArrowReport> reports;
  if (config.exhaustive) {
    if (config.mode == ArrowMode::Conic) {
      reports = conic_arrow_scan(pencil);
    } else {
      const auto configs = valid_arc_configurations(pencil);
      reports = arc_arrow_scan(pencil, configs);
    }
  } else if (config.mode == ArrowMode::Conic) {
    reports.push_back(conic_arrow(pencil, ideal));
  } else {
    reports.push_back(arc_arrow(build_time_family(pencil, ideal, tangent)));
  }
  if (config.output == OutputFormat::Csv) {
    write_arrow_csv(out, reports, config.exhaustive);
  } else if (config.exhaustive) {
    emit(out, arrow_scan_report(plane.order(), config.mode, reports));
  } else {
    emit(out, arrow_report(reports.front()));
  }
}

}  // namespace

std::uint64_t RunConfig::q() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n && q <= Field::kMaxOrder; ++i) q *= p;
  return q;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Pencils of conics, (q+1)-arcs and their temporal classification over GF(q)",
               "galois-arrow"};
  app.require_subcommand(1);

  RunConfig config;
  std::string modulus_text;
  std::string ideal_text;
  std::string tangent_text;
  std::string mode_text = "arc";
  std::string output_text = "json";

  const std::pair<Command, const char*> commands[] = {
      {Command::FieldInfo, "Field elements, inverses and square roots"},
      {Command::Plane, "Points and lines of PG(2,q)"},
      {Command::Conic, "The canonical conic x1 x2 - x3^2: points, tangents, nucleus"},
      {Command::Pencil, "Members of the pencil x1 x2 + t x3^2"},
      {Command::Family, "The family of (q+1)-arcs built from the pencil"},
      {Command::Arrow, "Past/present/future classification against an ideal line"},
  };
  for (const auto& [command, description] : commands) {
    CLI::App* sub = app.add_subcommand(std::string(command_name(command)), description);
    sub->callback([&config, c = command] { config.command = c; });
    sub->add_option("--p", config.p, "Field characteristic")->capture_default_str();
    sub->add_option("--n", config.n, "Extension degree")->capture_default_str();
    sub->add_option("--modulus", modulus_text, "Coefficients low-to-high (1,1,0,1) or hex bitmask (0xB)");
    sub->add_option("--output", output_text, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    if (command == Command::Family || command == Command::Arrow) {
      sub->add_option("--linf", ideal_text, "Ideal line a,b,c (default 1,1,1)");
      sub->add_option("--lstar", tangent_text, "Line through the nucleus a,b,c (default 1,g,0)");
    }
    if (command == Command::Arrow) {
      sub->add_option("--mode", mode_text, "Classify conics or arcs")
          ->check(CLI::IsMember({"conic", "arc"}))
          ->capture_default_str();
      sub->add_flag("--exhaustive", config.exhaustive, "Scan every valid configuration");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    std::string help = app.help();
    for (const auto* sub : app.get_subcommands()) help = sub->help();
    config.help = help;
    return config;
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  config.mode = mode_text == "conic" ? ArrowMode::Conic : ArrowMode::Arc;
  config.output = output_text == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  if (!is_prime(config.p)) usage("--p must be prime (got " + std::to_string(config.p) + ")");
  if (config.n < 1) usage("--n must be at least 1");
  const std::uint64_t q = config.q();
  if (q > Field::kMaxOrder) usage("field order exceeds 2^16");
  if (!modulus_text.empty()) {
    try {
      config.modulus = parse_modulus(modulus_text, config.p);
    } catch (const Error& e) {
      usage(e.what());
    }
  }

  const bool char2_only = config.command == Command::Family || config.command == Command::Arrow;
  const std::string name(command_name(config.command));
  if (char2_only && config.p != 2) usage(name + " requires q even (p = 2)");
  const bool needs_family = config.command == Command::Family ||
                            (config.command == Command::Arrow && config.mode == ArrowMode::Arc);
  if (needs_family && q < kFamilyMinOrder) {
    usage(name + " needs q >= 4; no valid ideal/tangent line pair exists for q = " +
          std::to_string(q));
  }
  if (!ideal_text.empty()) {
    check_triple_syntax(ideal_text, config.p, "--linf");
    config.ideal_line = ideal_text;
  }
  if (!tangent_text.empty()) {
    check_triple_syntax(tangent_text, config.p, "--lstar");
    config.tangent_line = tangent_text;
  }
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.help) {
    out << *config.help;
    return kExitOk;
  }
  if (const auto cap = thread_cap_from_env()) set_thread_cap(*cap);
  try {
    const FieldPtr field = make_field(config.p, config.n, config.modulus);
    const Field& f = *field;
    if (config.command == Command::FieldInfo) {
      run_field_info(f, config.output, out);
      return kExitOk;
    }
    const Plane plane(field);
    const ProjLine ideal = config.ideal_line ? parse_line(f, *config.ideal_line)
                                             : ProjLine::make(f.one(), f.one(), f.one());
    const ProjLine tangent = config.tangent_line
                                 ? parse_line(f, *config.tangent_line)
                                 : ProjLine::make(f.one(), f.generator(), f.zero());
    std::ostringstream buffer;
    switch (config.command) {
      case Command::FieldInfo: break;
      case Command::Plane: run_plane(plane, config.output, buffer); break;
      case Command::Conic: run_conic(plane, config.output, buffer); break;
      case Command::Pencil: run_pencil(plane, config.output, buffer); break;
      case Command::Family: run_family(plane, ideal, tangent, config.output, buffer); break;
      case Command::Arrow: run_arrow(plane, config, ideal, tangent, buffer); break;
    }
    out << buffer.str();
    return kExitOk;
  } catch (const Error& e) {
    write_error(err, e);
    return is_internal(e.code()) ? kExitInternal : kExitInvalid;
  } catch (const std::exception& e) {
    write_error(err, Error(ErrorCode::InvariantViolation, e.what()));
    return kExitInternal;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(args);
  } catch (const Error& e) {
    write_error(err, e);
    return kExitInvalid;
  }
  return run(config, out, err);
}

}  // namespace galois_arrow::cli
