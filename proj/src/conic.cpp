#include "galois_arrow/conic.hpp"

#include <algorithm>

#include "galois_arrow/linalg.hpp"

namespace galois_arrow {

std::string_view to_string(DegeneracyClass c) noexcept {
  switch (c) {
    case DegeneracyClass::Proper: return "Proper";
    case DegeneracyClass::DoubleLine: return "DoubleLine";
    case DegeneracyClass::RealLinePair: return "RealLinePair";
    case DegeneracyClass::ConjugateLinePair: return "ConjugateLinePair";
  }
  return "Unknown";
}

std::string_view to_string(LineClass c) noexcept {
  switch (c) {
    case LineClass::Secant: return "Secant";
    case LineClass::Tangent: return "Tangent";
    case LineClass::External: return "External";
  }
  return "Unknown";
}

Conic Conic::make(const Coefficients& c) {
  for (std::size_t i = 1; i < kTerms; ++i) common_field(c[0], c[i]);
  Conic out;
  out.c_ = c;
  for (const auto& x : out.c_) {
    if (x.is_zero()) continue;
    if (!x.is_one()) {
      const Element scale = x.inv();
      for (auto& y : out.c_) y *= scale;
    }
    return out;
  }
  fail(ErrorCode::ZeroConic, "all conic coefficients are zero");
}

Conic Conic::from_codes(const Field& field, const std::array<std::uint32_t, kTerms>& codes) {
  Coefficients c;
  for (std::size_t i = 0; i < kTerms; ++i) c[i] = field.element(codes[i]);
  return make(c);
}

std::string to_string(const Conic& c) {
  const Field& f = c.field();
  std::string out = "[";
  for (std::size_t i = 0; i < Conic::kTerms; ++i) {
    if (i > 0) out += ",";
    out += f.format(c.coefficients()[i]);
  }
  return out + "]";
}

Conic::Coefficients monomials(const ProjPoint& p) {
  return {p[0] * p[0], p[0] * p[1], p[0] * p[2], p[1] * p[1], p[1] * p[2], p[2] * p[2]};
}

Element evaluate(const Conic& c, const ProjPoint& p) {
  const auto m = monomials(p);
  Element sum = c.coefficients()[0] * m[0];
  for (std::size_t i = 1; i < Conic::kTerms; ++i) sum += c.coefficients()[i] * m[i];
  return sum;
}

PointSet point_set(const Conic& c, const Plane& plane, Execution exec) {
  if (!c.field().same_as(plane.field())) fail(ErrorCode::MixedFields, "conic from another field");
  std::vector<std::uint8_t> zero(plane.size(), 0);
  parallel_for(plane.size(), exec, [&](std::size_t i) {
    zero[i] = evaluate(c, plane.points()[i]).is_zero() ? 1 : 0;
  });
  std::vector<std::uint32_t> ids;
  for (std::uint32_t i = 0; i < zero.size(); ++i) {
    if (zero[i] != 0) ids.push_back(i);
  }
  return PointSet(plane, std::move(ids));
}

DegeneracyClass classify_zero_set(const PointSet& zeros) {
  const std::size_t q = zeros.plane().order();
  const std::size_t n = zeros.size();
  if (n == 1) return DegeneracyClass::ConjugateLinePair;
  const auto counts = line_census(zeros);
  const auto full = static_cast<std::size_t>(
      std::count(counts.begin(), counts.end(), static_cast<std::uint32_t>(q + 1)));
  const std::uint32_t widest = *std::max_element(counts.begin(), counts.end());
  if (n == q + 1 && full == 1) return DegeneracyClass::DoubleLine;
  if (n == 2 * q + 1 && full == 2) return DegeneracyClass::RealLinePair;
  if (n == q + 1 && widest <= 2) return DegeneracyClass::Proper;
  fail(ErrorCode::UnclassifiableConic,
       "zero set of " + std::to_string(n) + " points matches no conic class");
}

DegeneracyClass classify(const Conic& c, const Plane& plane) {
  return classify_zero_set(point_set(c, plane));
}

Conic canonical_conic(const Field& field) {
  const Element z = field.zero();
  return Conic::make({z, field.one(), z, z, z, -field.one()});
}

std::vector<ProjPoint> parametrize_canonical(const Field& field) {
  std::vector<ProjPoint> out;
  out.push_back(ProjPoint::make(field.one(), field.zero(), field.zero()));
  for (const auto& s : field.elements()) out.push_back(ProjPoint::make(s * s, field.one(), s));
  return out;
}

LineClass classify_line(const PointSet& set, const ProjLine& line) {
  const Plane& plane = set.plane();
  std::uint32_t n = 0;
  for (auto id : plane.points_on(plane.index(line))) n += set.contains(id) ? 1 : 0;
  switch (n) {
    case 0: return LineClass::External;
    case 1: return LineClass::Tangent;
    case 2: return LineClass::Secant;
    default:
      fail(ErrorCode::IntersectionTooLarge,
           "line " + to_string(line) + " meets the set in " + std::to_string(n) + " points");
  }
}

std::vector<ProjLine> tangent_lines(const Conic& c, const Plane& plane) {
  const PointSet zeros = point_set(c, plane);
  if (classify_zero_set(zeros) != DegeneracyClass::Proper) {
    fail(ErrorCode::DegenerateConic, "tangent_lines needs a proper conic");
  }
  const auto counts = line_census(zeros);
  std::vector<ProjLine> out;
  for (std::uint32_t l = 0; l < counts.size(); ++l) {
    if (counts[l] == 1) out.push_back(plane.line(l));
  }
  return out;
}

std::optional<ProjPoint> common_point(std::span<const ProjLine> lines, const Plane& plane) {
  if (lines.empty()) return std::nullopt;
  std::vector<std::uint32_t> hits(plane.size(), 0);
  for (const auto& l : lines) {
    for (auto id : plane.points_on(plane.index(l))) ++hits[id];
  }
  std::optional<ProjPoint> found;
  for (std::uint32_t id = 0; id < hits.size(); ++id) {
    if (hits[id] != lines.size()) continue;
    if (found) return std::nullopt;
    found = plane.point(id);
  }
  return found;
}

ProjPoint nucleus(const Conic& c, const Plane& plane) {
  if (plane.field().characteristic() != 2) {
    fail(ErrorCode::OddCharacteristic, "the tangents of a conic are concurrent only for q even");
  }
  const auto tangents = tangent_lines(c, plane);
  const auto point = common_point(tangents, plane);
  if (!point) fail(ErrorCode::InvariantViolation, "tangents of a proper conic are not concurrent");
  return *point;
}

ProjPoint nucleus_by_polarity(const Conic& c) {
  if (c.field().characteristic() != 2) {
    fail(ErrorCode::OddCharacteristic, "nucleus_by_polarity requires characteristic 2");
  }
  if (c.c23().is_zero() && c.c13().is_zero() && c.c12().is_zero()) {
    fail(ErrorCode::DegenerateConic, "polar form of the conic is identically zero");
  }
  return ProjPoint::make(c.c23(), c.c13(), c.c12());
}

Conic fit_conic(std::span<const ProjPoint> points) {
  if (points.size() != 5) fail(ErrorCode::UsageError, "fit_conic needs exactly five points");
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      for (std::size_t k = j + 1; k < 5; ++k) {
        if (collinear(points[i], points[j], points[k])) {
          fail(ErrorCode::CollinearTriple, "fit_conic points " + to_string(points[i]) + ", " +
                                               to_string(points[j]) + ", " +
                                               to_string(points[k]) + " are collinear");
        }
      }
    }
  }
  Matrix system(5, Conic::kTerms, points[0].field().zero());
  for (std::size_t r = 0; r < 5; ++r) {
    const auto m = monomials(points[r]);
    for (std::size_t c = 0; c < Conic::kTerms; ++c) system(r, c) = m[c];
  }
  const auto solution = solve_homogeneous(system);
  if (solution.basis.size() != 1) {
    fail(ErrorCode::AmbiguousFit, "conic fit has a " + std::to_string(solution.basis.size()) +
                                      "-dimensional solution space");
  }
  Conic::Coefficients coeffs;
  std::copy(solution.basis[0].begin(), solution.basis[0].end(), coeffs.begin());
  return Conic::make(coeffs);
}

std::vector<Conic> conics_through(std::span<const ProjPoint> points) {
  if (points.empty()) fail(ErrorCode::EmptyMatrix, "conics_through needs at least one point");
  const Field& field = points[0].field();
  Matrix system(points.size(), Conic::kTerms, field.zero());
  for (std::size_t r = 0; r < points.size(); ++r) {
    const auto m = monomials(points[r]);
    for (std::size_t c = 0; c < Conic::kTerms; ++c) system(r, c) = m[c];
  }
  const auto basis = solve_homogeneous(system).basis;
  std::vector<Conic> out;
  const std::size_t k = basis.size();
  if (k == 0) return out;
  // Combinations with first nonzero weight 1, one per projective class.
  const auto elements = field.elements();
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    std::size_t lead = 0;
    while (lead < k && digits[lead] == 0) ++lead;
    if (lead < k && digits[lead] == 1) {
      Conic::Coefficients c;
      c.fill(field.zero());
      for (std::size_t b = 0; b < k; ++b) {
        for (std::size_t t = 0; t < Conic::kTerms; ++t) c[t] += elements[digits[b]] * basis[b][t];
      }
      out.push_back(Conic::make(c));
    }
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < elements.size()) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

}  // namespace galois_arrow
