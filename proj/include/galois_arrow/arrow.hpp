#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "galois_arrow/arc.hpp"

namespace galois_arrow {

/// Secant ideal line -> Past, tangent -> Present, external -> Future.
enum class TemporalClass { Past, Present, Future };
enum class ArrowMode { Conic, Arc };

std::string_view to_string(TemporalClass c) noexcept;
std::string_view to_string(ArrowMode m) noexcept;

struct Tallies {
  std::size_t past = 0;
  std::size_t present = 0;
  std::size_t future = 0;

  std::size_t total() const noexcept { return past + present + future; }
  void add(TemporalClass c) noexcept;
  friend bool operator==(const Tallies&, const Tallies&) = default;
};

struct ArrowEntry {
  std::size_t id = 0;
  Theta theta;
  TemporalClass temporal = TemporalClass::Future;
  /// Points of the member on the ideal line, in plane order.
  std::vector<ProjPoint> witnesses;
};

struct ArrowReport {
  std::uint32_t q = 0;
  ArrowMode mode = ArrowMode::Conic;
  ProjLine ideal_line;
  /// Arc mode only.
  std::optional<ProjLine> tangent_line;
  std::optional<ProjPoint> contact;
  std::optional<std::size_t> present_member;
  std::vector<ArrowEntry> members;
  Tallies tallies;
};

/// Throws HitsBasePoint or HitsNucleus when the line passes through
/// (0,1,0), (1,0,0) or (0,0,1).
void validate_ideal_line(const ProjLine& line, const Plane& plane);
bool is_valid_ideal_line(const ProjLine& line);

/// Lines with all three coefficients nonzero, in plane order.
std::vector<ProjLine> valid_ideal_lines(const Plane& plane);

/// Throws IntersectionTooLarge.
TemporalClass classify_member(const PointSet& points, const ProjLine& ideal_line);

/// Classifies the proper members of the time pencil. For q even the Present
/// tally is always zero; a nonzero count throws InvariantViolation.
/// Throws OddCharacteristic, InvalidIdealLine.
ArrowReport conic_arrow(const TimePencil& pencil, const ProjLine& ideal_line);
ArrowReport conic_arrow(const Plane& plane, const ProjLine& ideal_line);

/// Classifies every family arc. Exactly one arc, the one built from the
/// member through the contact point, is Present; anything else throws
/// InvariantViolation.
ArrowReport arc_arrow(const ArcFamily& family);

struct ArcConfiguration {
  ProjLine ideal_line;
  ProjLine tangent_line;
};

/// Every (ideal line, tangent line) pair build_time_family accepts, ordered
/// by ideal line then tangent line in plane order.
std::vector<ArcConfiguration> valid_arc_configurations(const TimePencil& pencil);

/// One report per valid ideal line.
std::vector<ArrowReport> conic_arrow_scan(const TimePencil& pencil,
                                          Execution exec = Execution::Parallel);
std::vector<ArrowReport> arc_arrow_scan(const TimePencil& pencil,
                                        std::span<const ArcConfiguration> configs,
                                        Execution exec = Execution::Parallel);

}  // namespace galois_arrow
