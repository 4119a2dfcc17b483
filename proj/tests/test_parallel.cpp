#include <gtest/gtest.h>

#include <atomic>

#include "galois_arrow/arrow.hpp"
#include "galois_arrow/report.hpp"

using namespace galois_arrow;

namespace {

class ThreadCaps : public testing::TestWithParam<int> {
 protected:
  void SetUp() override { set_thread_cap(GetParam()); }
};

}  // namespace

TEST_P(ThreadCaps, IncidencePathsAgree) {
  for (auto [p, n] : {std::pair{2u, 3u}, {5u, 1u}, {2u, 4u}}) {
    const auto f = make_field(p, n);
    const auto points = enumerate_points(*f);
    std::vector<ProjLine> lines;
    for (const auto& pt : points) lines.push_back(ProjLine::make(pt[0], pt[1], pt[2]));
    const auto ref = incidence_by_dot_product(points, lines, Execution::Serial);
    EXPECT_EQ(incidence_by_dot_product(points, lines, Execution::Parallel), ref);
    EXPECT_EQ(incidence_by_parametrization(*f, lines, Execution::Serial), ref);
    EXPECT_EQ(incidence_by_parametrization(*f, lines, Execution::Parallel), ref);
  }
}

TEST_P(ThreadCaps, PlaneBuildIsExecutionIndependent) {
  const auto f = make_field(2, 4);
  const Plane serial(f, Execution::Serial);
  const Plane parallel(f, Execution::Parallel);
  ASSERT_EQ(serial.points(), parallel.points());
  for (std::uint32_t i = 0; i < serial.size(); ++i) {
    ASSERT_TRUE(std::ranges::equal(serial.points_on(i), parallel.points_on(i)));
    ASSERT_TRUE(std::ranges::equal(serial.lines_through(i), parallel.lines_through(i)));
  }
}

TEST_P(ThreadCaps, ConicKernelsAgree) {
  const auto f = make_field(2, 5);
  const Plane plane(f);
  const PointSet s = point_set(canonical_conic(*f), plane, Execution::Serial);
  EXPECT_EQ(point_set(canonical_conic(*f), plane, Execution::Parallel), s);
  EXPECT_EQ(line_census(s, Execution::Serial), line_census(s, Execution::Parallel));
  EXPECT_EQ(max_line_intersection(s, Execution::Serial), max_line_intersection(s, Execution::Parallel));
}

TEST_P(ThreadCaps, PencilMembersAgree) {
  const auto f = make_field(2, 4);
  const Plane plane(f);
  const auto a = members(time_pencil(*f), plane, Execution::Serial);
  const auto b = members(time_pencil(*f), plane, Execution::Parallel);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].theta, b[i].theta);
    EXPECT_EQ(a[i].conic, b[i].conic);
    EXPECT_EQ(a[i].degeneracy, b[i].degeneracy);
    EXPECT_EQ(a[i].points, b[i].points);
  }
}

TEST_P(ThreadCaps, ArrowScansSerializeIdentically) {
  for (std::uint32_t n : {2u, 3u}) {
    const auto f = make_field(2, n);
    const Plane plane(f);
    const TimePencil tp(plane);
    const auto conic_s = conic_arrow_scan(tp, Execution::Serial);
    const auto conic_p = conic_arrow_scan(tp, Execution::Parallel);
    EXPECT_EQ(arrow_scan_report(f->order(), ArrowMode::Conic, conic_s).dump(),
              arrow_scan_report(f->order(), ArrowMode::Conic, conic_p).dump());
    const auto configs = valid_arc_configurations(tp);
    const auto arc_s = arc_arrow_scan(tp, configs, Execution::Serial);
    const auto arc_p = arc_arrow_scan(tp, configs, Execution::Parallel);
    EXPECT_EQ(arrow_scan_report(f->order(), ArrowMode::Arc, arc_s).dump(),
              arrow_scan_report(f->order(), ArrowMode::Arc, arc_p).dump());
  }
}

TEST_P(ThreadCaps, LowestFailingIndexIsRethrown) {
  for (auto exec : {Execution::Serial, Execution::Parallel}) {
    std::atomic<int> ran{0};
    try {
      parallel_for(64, exec, [&](std::size_t i) {
        ++ran;
        if (i % 10 == 7) throw Error(ErrorCode::InvariantViolation, std::to_string(i));
      });
      FAIL();
    } catch (const Error& e) {
      EXPECT_STREQ(e.what(), "7");
    }
    EXPECT_GE(ran.load(), 8);
  }
}

INSTANTIATE_TEST_SUITE_P(Caps, ThreadCaps, testing::Values(1, 2, 8));
