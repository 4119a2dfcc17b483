#pragma once

#include <ostream>
#include <span>

#include <json.hpp>

#include "galois_arrow/arrow.hpp"

namespace galois_arrow {

using Json = nlohmann::ordered_json;

Json to_json(const Theta& theta);
Json to_json(const Conic& conic);
Json to_json(const PointSet& points);

Json field_report(const Field& field);
Json plane_report(const Plane& plane);
/// The canonical conic: coefficients, class, points, tangents, line census.
Json conic_report(const Plane& plane);
/// Members serialized as {theta, conic, class, size}.
Json pencil_report(const TimePencil& pencil);
/// {q, Linf, Lstar, A, Qstar_theta, members: [{theta, points, is_conic}]}.
Json family_report(const ArcFamily& family);
/// {q, mode, ideal_line, tallies: {past, present, future},
///  members: [{id, theta, class, witnesses}]} plus arc-mode fields.
Json arrow_report(const ArrowReport& report);
/// {q, mode, exhaustive, reports, summary}.
Json arrow_scan_report(std::uint32_t q, ArrowMode mode, std::span<const ArrowReport> reports);

/// Structural checks on re-parsed reports. Throw InvariantViolation with the
/// offending path.
void validate_arrow_json(const Json& report);
void validate_family_json(const Json& report);

/// Columns q, mode, member_id, theta, class (plus linf, lstar after mode when
/// with_configuration is set).
void write_arrow_csv(std::ostream& out, std::span<const ArrowReport> reports,
                     bool with_configuration, bool header = true);

}  // namespace galois_arrow
