#include <gtest/gtest.h>

#include <random>

#include "galois_arrow/plane.hpp"
#include "oracles.hpp"

using namespace galois_arrow;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvariantViolation;
}

ProjPoint pt(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return ProjPoint::from_codes(f, a, b, c);
}
ProjLine ln(const Field& f, std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return ProjLine::from_codes(f, a, b, c);
}

std::vector<FieldPtr> plane_fields() {
  return {make_field(2, 1), make_field(3, 1), make_field(2, 2), make_field(5, 1),
          make_field(2, 3), make_field(3, 2, Poly{1, 0, 1}), make_field(2, 4), make_field(2, 5)};
}

}  // namespace

TEST(Plane, Sizes) {
  EXPECT_EQ(Plane(make_field(2, 1)).size(), 7u);
  EXPECT_EQ(Plane(make_field(2, 2)).size(), 21u);
  EXPECT_EQ(Plane(make_field(2, 3)).size(), 73u);
}

TEST(Plane, SizeMatchesClassEnumeration) {
  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {2u, 3u}}) {
    const auto f = make_field(p, n);
    EXPECT_EQ(Plane(f).size(), oracle::count_projective_points(*f));
  }
}

TEST(Plane, NormalizationAndOrder) {
  const auto f = make_field(3, 1);
  const ProjPoint p = ProjPoint::make(f->zero(), f->element(2), f->element(1));
  EXPECT_EQ(p, pt(*f, 0, 1, 2));
  const auto points = enumerate_points(*f);
  ASSERT_EQ(points.size(), 13u);
  EXPECT_EQ(points.front(), pt(*f, 1, 0, 0));
  EXPECT_EQ(points[1], pt(*f, 1, 0, 1));
  EXPECT_EQ(points[9], pt(*f, 0, 1, 0));
  EXPECT_EQ(points.back(), pt(*f, 0, 0, 1));
  for (std::size_t i = 0; i < points.size(); ++i) EXPECT_EQ(canonical_index(points[i]), i);
}

TEST(Plane, IncidenceExamples) {
  const auto f = make_field(2, 1);
  const Plane plane(f);
  EXPECT_TRUE(incident(pt(*f, 1, 1, 0), ln(*f, 1, 1, 0)));
  EXPECT_FALSE(incident(pt(*f, 1, 0, 0), ln(*f, 1, 1, 1)));
  const auto on = points_on(ln(*f, 0, 0, 1), plane);
  EXPECT_EQ(on, (std::vector<ProjPoint>{pt(*f, 1, 0, 0), pt(*f, 1, 1, 0), pt(*f, 0, 1, 0)}));
}

TEST(Plane, JoinAndMeetExamples) {
  const auto f2 = make_field(2, 1);
  EXPECT_EQ(line_through(pt(*f2, 1, 0, 0), pt(*f2, 0, 1, 0)), ln(*f2, 0, 0, 1));
  EXPECT_EQ(meet(ln(*f2, 1, 0, 0), ln(*f2, 0, 1, 0)), pt(*f2, 0, 0, 1));

  // GF(4) with gamma = x, gamma^2 = gamma + 1.
  const auto f4 = make_field(2, 2);
  const ProjPoint m = meet(ln(*f4, 1, 1, 1), ln(*f4, 1, 2, 0));
  EXPECT_EQ(m, pt(*f4, 2, 1, 3));
  EXPECT_TRUE(incident(m, ln(*f4, 1, 1, 1)));
  EXPECT_TRUE(incident(m, ln(*f4, 1, 2, 0)));
}

TEST(Plane, Errors) {
  const auto f = make_field(2, 2);
  const auto g = make_field(2, 3);
  EXPECT_EQ(code_of([&] { ProjPoint::make(f->zero(), f->zero(), f->zero()); }), ErrorCode::ZeroTriple);
  EXPECT_EQ(code_of([&] { line_through(pt(*f, 1, 2, 3), pt(*f, 1, 2, 3)); }),
            ErrorCode::CoincidentPoints);
  EXPECT_EQ(code_of([&] { meet(ln(*f, 0, 1, 1), ln(*f, 0, 1, 1)); }), ErrorCode::CoincidentLines);
  EXPECT_EQ(code_of([&] { ProjPoint::make(f->one(), g->one(), f->one()); }), ErrorCode::MixedFields);
  EXPECT_EQ(code_of([&] { Plane(f).index(pt(*g, 1, 0, 0)); }), ErrorCode::MixedFields);
}

TEST(Plane, ParseAndFormat) {
  const auto f = make_field(2, 4);
  EXPECT_EQ(to_string(pt(*f, 1, 10, 15)), "(1:a:f)");
  EXPECT_EQ(parse_point(*f, "(1:a:f)"), pt(*f, 1, 10, 15));
  EXPECT_EQ(parse_line(*f, "2,0,0"), ln(*f, 1, 0, 0));
  EXPECT_EQ(code_of([&] { parse_point(*f, "1,2"); }), ErrorCode::UsageError);
  EXPECT_EQ(code_of([&] { parse_point(*f, "1,2,zz"); }), ErrorCode::UsageError);
  EXPECT_EQ(code_of([&] { parse_point(*f, "0,0,0"); }), ErrorCode::UsageError);
  const auto f5 = make_field(5, 1);
  EXPECT_EQ(to_string(parse_point(*f5, "2,4,1")), "(1:2:3)");
}

TEST(Collinear, Examples) {
  const auto f = make_field(2, 3);
  // The three points of the line x3 = 0 at parameters 0, 1, infinity.
  EXPECT_TRUE(collinear(pt(*f, 1, 0, 0), pt(*f, 1, 1, 0), pt(*f, 0, 1, 0)));
  EXPECT_FALSE(collinear(pt(*f, 1, 0, 0), pt(*f, 0, 1, 0), pt(*f, 0, 0, 1)));
  EXPECT_TRUE(collinear(pt(*f, 1, 2, 3), pt(*f, 1, 2, 3), pt(*f, 0, 0, 1)));
}

// (s^2, 1, s) for three distinct s: the determinant is a Vandermonde product.
TEST(Collinear, ConicParametrizationNeverCollinearGF8) {
  const auto f = make_field(2, 3);
  const auto el = f->elements();
  auto on_conic = [&](const Element& s) { return ProjPoint::make(s * s, f->one(), s); };
  for (const auto& a : el) {
    for (const auto& b : el) {
      for (const auto& c : el) {
        if (a == b || b == c || a == c) continue;
        EXPECT_FALSE(collinear(on_conic(a), on_conic(b), on_conic(c)));
      }
    }
  }
}

TEST(PlaneProperty, CachedIncidenceMatchesDotProduct) {
  for (const auto& f : plane_fields()) {
    const Plane plane(f);
    const auto ref = incidence_by_dot_product(plane.points(), plane.lines(), Execution::Serial);
    for (std::uint32_t l = 0; l < plane.size(); ++l) {
      const auto cached = plane.points_on(l);
      ASSERT_EQ(std::vector<std::uint32_t>(cached.begin(), cached.end()), ref[l]);
    }
  }
}

TEST(PlaneProperty, EveryLineAndPointHasQPlusOne) {
  for (const auto& f : plane_fields()) {
    const Plane plane(f);
    for (std::uint32_t i = 0; i < plane.size(); ++i) {
      ASSERT_EQ(plane.points_on(i).size(), f->order() + 1);
      ASSERT_EQ(plane.lines_through(i).size(), f->order() + 1);
      for (auto pid : plane.points_on(i)) ASSERT_TRUE(incident(plane.point(pid), plane.line(i)));
    }
  }
}

TEST(PlaneProperty, Duality) {
  for (const auto& f : plane_fields()) {
    const Plane plane(f);
    for (const auto& p : plane.points()) {
      const ProjLine dual_p = ProjLine::make(p[0], p[1], p[2]);
      for (const auto& l : plane.lines()) {
        const ProjPoint dual_l = ProjPoint::make(l[0], l[1], l[2]);
        ASSERT_EQ(incident(p, l), incident(dual_l, dual_p));
      }
    }
    if (f->order() >= 8) break;
  }
}

TEST(PlaneProperty, JoinAndMeetAreIncident) {
  std::mt19937 rng(3);
  for (const auto& f : plane_fields()) {
    const Plane plane(f);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(plane.size() - 1));
    for (int i = 0; i < 300; ++i) {
      const std::uint32_t a = pick(rng), b = pick(rng);
      if (a == b) continue;
      const ProjLine l = line_through(plane.point(a), plane.point(b));
      EXPECT_TRUE(incident(plane.point(a), l));
      EXPECT_TRUE(incident(plane.point(b), l));
      const ProjPoint m = meet(plane.line(a), plane.line(b));
      EXPECT_TRUE(incident(m, plane.line(a)));
      EXPECT_TRUE(incident(m, plane.line(b)));
    }
  }
}

TEST(PlaneProperty, CollinearInvariantUnderPermutationAndScaling) {
  std::mt19937 rng(5);
  for (const auto& f : plane_fields()) {
    const Plane plane(f);
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(plane.size() - 1));
    std::uniform_int_distribution<std::uint32_t> scalar(1, f->order() - 1);
    for (int i = 0; i < 300; ++i) {
      std::array<ProjPoint, 3> t{plane.point(pick(rng)), plane.point(pick(rng)), plane.point(pick(rng))};
      const bool base = collinear(t[0], t[1], t[2]);
      EXPECT_EQ(base, oracle::det3(t[0], t[1], t[2]).is_zero());
      std::array<int, 3> idx{0, 1, 2};
      do {
        EXPECT_EQ(collinear(t[idx[0]], t[idx[1]], t[idx[2]]), base);
      } while (std::next_permutation(idx.begin(), idx.end()));
      // Normalization absorbs any nonzero rescaling of the input triple.
      const Element k = f->element(scalar(rng));
      const ProjPoint scaled = ProjPoint::make(t[0][0] * k, t[0][1] * k, t[0][2] * k);
      EXPECT_EQ(scaled, t[0]);
      EXPECT_EQ(collinear(scaled, t[1], t[2]), base);
    }
  }
}

TEST(PlaneProperty, TwoLinesMeetInOnePoint) {
  for (const auto& f : {make_field(2, 2), make_field(3, 1)}) {
    const Plane plane(f);
    for (std::uint32_t a = 0; a < plane.size(); ++a) {
      for (std::uint32_t b = a + 1; b < plane.size(); ++b) {
        std::size_t common = 0;
        for (auto x : plane.points_on(a)) {
          for (auto y : plane.points_on(b)) common += x == y;
        }
        ASSERT_EQ(common, 1u);
      }
    }
  }
}
