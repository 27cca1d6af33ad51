#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"
#include "trigpatch/skeleton.hpp"

using namespace trigpatch;
using namespace trigpatch::test;

namespace {

std::size_t first_plain(const GraphSkeleton& g, EventKind kind) {
  for (std::size_t k = 0; k < g.events.size(); ++k)
    if (g.events[k].kind == kind) return k;
  ADD_FAILURE() << "no " << to_string(kind) << " event";
  return 0;
}

std::size_t count_events(const GraphSkeleton& g, EventKind kind) {
  return static_cast<std::size_t>(
      std::count_if(g.events.begin(), g.events.end(), [&](const BoundaryEvent& e) { return e.kind == kind; }));
}

BoundaryArc& arc_before(GraphSkeleton& g, std::size_t k) { return g.arcs[(k + g.arcs.size() - 1) % g.arcs.size()]; }

}  // namespace

TEST(Skeleton, EventAndIntervalNames) {
  for (auto k : {EventKind::ZeroPre, EventKind::PolePre, EventKind::OnePre, EventKind::Mark0, EventKind::MarkInf})
    EXPECT_EQ(event_kind_from_string(to_string(k)), k);
  for (auto i : {Interval::InfZero, Interval::ZeroOne, Interval::OneInf}) EXPECT_EQ(interval_from_string(to_string(i)), i);
  EXPECT_EQ(to_string(Interval::OneInf), "]1,inf[");
}

TEST(Skeleton, CrossingParity) {
  EXPECT_EQ(cross_event(Interval::ZeroOne, EventKind::OnePre, 1), Interval::OneInf);
  EXPECT_EQ(cross_event(Interval::OneInf, EventKind::OnePre, 1), Interval::ZeroOne);
  EXPECT_EQ(cross_event(Interval::ZeroOne, EventKind::OnePre, 2), Interval::ZeroOne);
  EXPECT_EQ(cross_event(Interval::InfZero, EventKind::ZeroPre, 1), Interval::ZeroOne);
  EXPECT_EQ(cross_event(Interval::OneInf, EventKind::PolePre, 1), Interval::InfZero);
  EXPECT_EQ(cross_event(Interval::InfZero, EventKind::PolePre, 2), Interval::InfZero);
  EXPECT_FALSE(cross_event(Interval::ZeroOne, EventKind::PolePre, 2).has_value());
  EXPECT_FALSE(cross_event(Interval::InfZero, EventKind::OnePre, 1).has_value());
}

TEST(Skeleton, RunningExample) {
  const auto g = skeleton_of_trigonal(running_curve(), 1);
  EXPECT_TRUE(validate_skeleton(g).ok());
  EXPECT_EQ(skeleton_degree(g), 6);
  // Two real and four non-real roots of D.
  EXPECT_EQ(g.total_order(EventKind::OnePre), 2);
  EXPECT_EQ(g.interior_one, 2);
  // Three real roots of Q = X^3 - 2X + 1/4 give double poles.
  EXPECT_EQ(count_events(g, EventKind::PolePre), 3U);
  EXPECT_TRUE(check_trigonal_criteria(g, 1).ok());
  EXPECT_EQ(extract_sign_array(g).str(), "[-,-+]");
}

TEST(Skeleton, IdenticallyDegenerate) {
  EXPECT_EQ(error_code([] { skeleton_of_trigonal(curve({{0, 3, 1}, {1, 1, 1}}), 1); }), "IdenticallyDegenerate");
}

TEST(Skeleton, ConicWithTwoRealDiscriminantRoots) {
  // a1 = 1, a2 = X, a3 = 1: the discriminant X^2 - 4 has roots +-2.
  const auto g = skeleton_of_bidegree2(curve({{0, 2, 1}, {1, 1, 1}, {0, 0, 1}}), 1);
  EXPECT_EQ(count_events(g, EventKind::OnePre), 2U);
  EXPECT_EQ(g.find_mark(EventKind::Mark0), std::optional<std::size_t>(0));
  EXPECT_TRUE(g.find_mark(EventKind::MarkInf).has_value());
}

TEST(Skeleton, OnePreParityViolation) {
  auto g = skeleton_of_trigonal(running_curve(), 1);
  g.events[first_plain(g, EventKind::OnePre)].order = 2;
  EXPECT_FALSE(validate_boundary(g).ok());
}

TEST(Skeleton, PoleSignRuleViolation) {
  auto g = skeleton_of_trigonal(running_curve(), 1);
  const std::size_t k = first_plain(g, EventKind::PolePre);
  ASSERT_EQ(g.events[k].order, 2);
  ASSERT_TRUE(arc_before(g, k).signs && g.arcs[k].signs);
  EXPECT_NE(arc_before(g, k).signs->q, g.arcs[k].signs->q);
  g.arcs[k].signs->q = arc_before(g, k).signs->q;
  EXPECT_FALSE(validate_boundary(g).ok());
}

TEST(Skeleton, DiscriminantSignFollowsInterval) {
  auto g = skeleton_of_trigonal(running_curve(), 1);
  for (const auto& a : g.arcs) {
    ASSERT_TRUE(a.signs.has_value());
    EXPECT_EQ(a.signs->d, a.interval == Interval::OneInf ? 1 : -1);
  }
  g.arcs[0].signs->d = -g.arcs[0].signs->d;
  EXPECT_FALSE(validate_boundary(g).ok());
}

TEST(Skeleton, Degrees) {
  EXPECT_EQ(skeleton_degree(GraphSkeleton{}), 0);
  auto g = skeleton_of_trigonal(running_curve(), 1);
  g.interior_one -= 1;
  EXPECT_FALSE(validate_skeleton(g).ok());
  EXPECT_EQ(error_code([&] { skeleton_degree(g); }), "Unbalanced");
}

TEST(Criteria, RejectsWrongDegree) {
  const auto g = skeleton_of_trigonal(running_curve(), 1);
  EXPECT_FALSE(check_trigonal_criteria(g, 2).ok());
}

TEST(Criteria, RejectsZeroOfOrderTwo) {
  // P = X^2 - 4 has real roots, where f has zeros of order 3.
  const BivarPoly c = curve({{0, 3, 1}, {2, 1, 1}, {0, 1, -4}, {3, 0, 1}, {1, 0, -2}, {0, 0, Rational(1, 4)}});
  auto g = skeleton_of_trigonal(c, 1);
  ASSERT_TRUE(check_trigonal_criteria(g, 1).ok());
  const std::size_t k = first_plain(g, EventKind::ZeroPre);
  ASSERT_EQ(g.events[k].order, 3);
  g.events[k].order = 2;
  EXPECT_FALSE(check_trigonal_criteria(g, 1).ok());
}

TEST(Extract, ConstantSigns) {
  // Y^3 + Y + X: D = -4 - 27X^2 < 0 everywhere.
  const auto neg = skeleton_of_trigonal(curve({{0, 3, 1}, {0, 1, 1}, {1, 0, 1}}), 1);
  EXPECT_EQ(count_events(neg, EventKind::OnePre), 0U);
  EXPECT_EQ(extract_sign_array(neg).str(), "[-]");
  // Y^3 - (X^2 + 3)Y + X: D = 4(X^2 + 3)^3 - 27X^2 > 0 everywhere.
  const auto pos = skeleton_of_trigonal(curve({{0, 3, 1}, {2, 1, -1}, {0, 1, -3}, {1, 0, 1}}), 1);
  EXPECT_EQ(extract_sign_array(pos).str(), "[+]");
}

TEST(Extract, AgreesWithCurveOnHigherDegree) {
  // Y^3 - 3X^2 Y + X^6 - 5X^3 + 1 on the degree-two triangle.
  const BivarPoly c = curve({{0, 3, 1}, {2, 1, -3}, {6, 0, 1}, {3, 0, -5}, {0, 0, 1}});
  const auto g = skeleton_of_trigonal(c, 2);
  EXPECT_TRUE(check_trigonal_criteria(g, 2).ok());
  EXPECT_EQ(extract_sign_array(g), curve_sign_array(c));
}
