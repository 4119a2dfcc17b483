#include "galois_arrow/pencil.hpp"

#include <optional>

namespace galois_arrow {

Theta Theta::make(const Element& first, const Element& second) {
  common_field(first, second);
  if (!first.is_zero()) return {first.field()->one(), second / first};
  if (!second.is_zero()) return {first, second.field()->one()};
  fail(ErrorCode::ZeroTriple, "pencil parameter (0, 0)");
}

std::string to_string(const Theta& t) {
  const Field& f = *t.first.field();
  return "[" + f.format(t.first) + "," + f.format(t.second) + "]";
}

Pencil::Pencil(const Conic& generator1, const Conic& generator2) : g1_(generator1), g2_(generator2) {
  common_field(g1_.c11(), g2_.c11());
  // Conics are stored normalized, so proportional generators are equal.
  if (g1_ == g2_) fail(ErrorCode::DependentGenerators, "pencil generators are proportional");
}

Conic Pencil::combine(const Theta& theta) const {
  Conic::Coefficients c;
  for (std::size_t i = 0; i < Conic::kTerms; ++i) {
    c[i] = theta.first * g1_.coefficients()[i] + theta.second * g2_.coefficients()[i];
  }
  return Conic::make(c);
}

Pencil time_pencil(const Field& field) {
  return Pencil(Conic::from_codes(field, {0, 1, 0, 0, 0, 0}),
                Conic::from_codes(field, {0, 0, 0, 0, 0, 1}));
}

PencilMember member_at(const Pencil& pencil, const Theta& theta, const Plane& plane) {
  Conic conic = pencil.combine(theta);
  PointSet points = point_set(conic, plane, Execution::Serial);
  const DegeneracyClass degeneracy = classify_zero_set(points);
  return {theta, std::move(conic), degeneracy, std::move(points)};
}

std::vector<PencilMember> members(const Pencil& pencil, const Plane& plane, Execution exec) {
  const Field& field = pencil.field();
  std::vector<Theta> thetas;
  for (const auto& t : field.elements()) thetas.push_back({field.one(), t});
  thetas.push_back({field.zero(), field.one()});
  std::vector<PencilMember> out(thetas.size());
  parallel_for(thetas.size(), exec,
               [&](std::size_t i) { out[i] = member_at(pencil, thetas[i], plane); });
  return out;
}

PointSet base_points(const Pencil& pencil, const Plane& plane) {
  const PointSet a = point_set(pencil.generator1(), plane);
  const PointSet b = point_set(pencil.generator2(), plane);
  std::vector<std::uint32_t> ids;
  for (auto id : a.ids()) {
    if (b.contains(id)) ids.push_back(id);
  }
  return PointSet(plane, std::move(ids));
}

PencilMember member_through(const Pencil& pencil, const ProjPoint& p, const Plane& plane) {
  const Element a = evaluate(pencil.generator1(), p);
  const Element b = evaluate(pencil.generator2(), p);
  if (a.is_zero() && b.is_zero()) {
    fail(ErrorCode::BasePoint, "point " + to_string(p) + " is a base point of the pencil");
  }
  // theta1 a + theta2 b = 0.
  return member_at(pencil, Theta::make(b, -a), plane);
}

ProjPoint common_nucleus(const Pencil& pencil, const Plane& plane) {
  if (plane.field().characteristic() != 2) {
    fail(ErrorCode::OddCharacteristic, "common_nucleus requires characteristic 2");
  }
  std::optional<ProjPoint> common;
  for (const auto& m : members(pencil, plane)) {
    if (m.degeneracy != DegeneracyClass::Proper) continue;
    const ProjPoint n = nucleus(m.conic, plane);
    if (common && !(*common == n)) {
      fail(ErrorCode::NucleiDiffer, "proper members have nuclei " + to_string(*common) + " and " +
                                        to_string(n));
    }
    common = n;
  }
  if (!common) fail(ErrorCode::NoProperMember, "pencil has no proper member");
  return *common;
}

TimePencil::TimePencil(const Plane& plane, Execution exec)
    : plane_(&plane), pencil_(time_pencil(plane.field())) {
  const Field& f = plane.field();
  members_ = galois_arrow::members(pencil_, plane, exec);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i].degeneracy == DegeneracyClass::Proper) proper_.push_back(i);
  }
  b1_ = ProjPoint::make(f.zero(), f.one(), f.zero());
  b2_ = ProjPoint::make(f.one(), f.zero(), f.zero());
  vertex_ = ProjPoint::make(f.zero(), f.zero(), f.one());
  if (f.characteristic() == 2) nucleus_ = common_nucleus(pencil_, plane);
}

const ProjPoint& TimePencil::nucleus() const {
  if (!nucleus_) fail(ErrorCode::OddCharacteristic, "the time pencil has a nucleus only for q even");
  return *nucleus_;
}

std::size_t TimePencil::member_index_through(const ProjPoint& p) const {
  const Element a = evaluate(pencil_.generator1(), p);
  const Element b = evaluate(pencil_.generator2(), p);
  if (a.is_zero() && b.is_zero()) {
    fail(ErrorCode::BasePoint, "point " + to_string(p) + " is a base point of the pencil");
  }
  const Theta theta = Theta::make(b, -a);
  // Members are ordered (1, t) by the code of t, then (0, 1).
  return theta.is_infinite() ? members_.size() - 1 : theta.second.code();
}

}  // namespace galois_arrow
