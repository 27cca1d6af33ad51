#include <gtest/gtest.h>

#include "support.hpp"

using namespace trigpatch;
using namespace trigpatch::test;

namespace {

BivarPoly with_coefficient(const BivarPoly& c, int i, int j, const Rational& v) {
  std::vector<Term> terms;
  for (const auto& [a, b] : c.support())
    if (a != i || b != j) terms.emplace_back(a, b, c.coefficient(a, b));
  terms.emplace_back(i, j, v);
  return curve(terms);
}

bool mentions(const CheckReport& r, const std::string& text) {
  for (const auto& f : r.failures)
    if (f.subject.find(text) != std::string::npos || f.detail.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST(Truncation, EdgesOfRunningExample) {
  const BivarPoly c = running_curve();
  EXPECT_EQ(truncation(c, {{3, 0}, {0, 3}}), curve({{0, 3, 1}, {3, 0, 1}}));
  EXPECT_EQ(truncation(c, {{0, 0}, {3, 0}}), curve({{3, 0, 1}, {1, 0, -2}, {0, 0, Rational(1, 4)}}));
  EXPECT_EQ(truncation(c, {{0, 3}, {0, 3}}), curve({{0, 3, 1}}));
  EXPECT_EQ(truncation(c, {{0, 0}, {0, 0}}), curve({{0, 0, Rational(1, 4)}}));
  EXPECT_THROW(truncation(c, {{0, 1}, {0, 1}}), Error);
  EXPECT_EQ(edge_polynomial(c, {{0, 0}, {3, 0}}), poly({Rational(1, 4), -2, 0, 1}));
}

TEST(Truncation, NewtonPolygon) {
  EXPECT_EQ(newton_polygon(running_curve()), trigonal_triangle(1));
  EXPECT_EQ(newton_polygon(curve({{0, 2, 1}, {2, 0, -1}, {1, 0, -1}})), hull({{0, 2}, {1, 0}, {2, 0}}));
}

TEST(Compatibility, SharedEdgesMustAgree) {
  EXPECT_TRUE(check_compatibility(single_cell_patchwork()).ok());
  const Patchwork p = fixture("horizontal_split").patchwork;
  EXPECT_TRUE(check_compatibility(p).ok());
  auto cells = p.cells();
  cells[0].curve = with_coefficient(cells[0].curve, 1, 2, cells[0].curve.coefficient(1, 2) + Rational(1));
  const auto report = check_compatibility(Patchwork::build(1, cells));
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(mentions(report, "(0,2)-(1,2)") || mentions(report, "(1,2)-(0,2)"));
}

TEST(Condition1, RunningExamplePasses) { EXPECT_TRUE(check_cell_condition1(running_curve(), trigonal_triangle(1), "c").ok()); }

TEST(Condition1, SingularPointInTheTorus) {
  // (X-1)^2 + (Y-1)^2 is singular at (1,1); its edges are fine.
  const BivarPoly c = curve({{2, 0, 1}, {1, 0, -2}, {0, 2, 1}, {0, 1, -2}, {0, 0, 2}});
  const auto r = check_cell_condition1(c, newton_polygon(c), "c");
  ASSERT_EQ(r.failures.size(), 1U);
}

TEST(Condition1, DoubleRootOnAnEdge) {
  // Bottom-row truncation Y(1 + X)^2 once the curve is read on its polygon.
  const BivarPoly c = curve({{0, 1, 1}, {1, 1, 2}, {2, 1, 1}, {0, 3, 1}});
  EXPECT_FALSE(check_cell_condition1(c, newton_polygon(c), "c").ok());
}

TEST(Condition2, TangencyCounts) {
  // Y^2 + XY - X^2 - X: the discriminant X(5X + 4) has one root in C*.
  const BivarPoly c = curve({{0, 2, 1}, {1, 1, 1}, {2, 0, -1}, {1, 0, -1}});
  EXPECT_EQ(tangency_bound(newton_polygon(c)), 1);
  EXPECT_TRUE(check_cell_condition2(c, newton_polygon(c), "c").ok());
  EXPECT_TRUE(check_cell_condition2(running_curve(), trigonal_triangle(1), "c").ok());
  EXPECT_EQ(tangency_bound(trigonal_triangle(1)), 6);
  // Y^2 - X^2 has discriminant 4X^2 and no tangency in the torus.
  EXPECT_FALSE(check_cell_condition2(curve({{0, 2, 1}, {2, 0, -1}}), hull({{0, 2}, {1, 0}, {2, 0}}), "c").ok());
}

TEST(Condition2, TangencyOnHorizontalEdgeDivisor) {
  // Y^2 - X^2 - X has the right count, but its tangency at X = -1 sits at Y = 0.
  const BivarPoly c = curve({{0, 2, 1}, {2, 0, -1}, {1, 0, -1}});
  EXPECT_EQ(count_distinct_cstar_roots(discriminant_y(c)), tangency_bound(newton_polygon(c)));
  const auto r = check_cell_condition2(c, newton_polygon(c), "c");
  ASSERT_EQ(r.failures.size(), 1U);
  EXPECT_NE(r.failures[0].detail.find("rows 0 and 1"), std::string::npos);
}

TEST(LeadingFiber, RunningExample) {
  const auto b = leading_fiber_cubic(single_cell_patchwork()).b;
  EXPECT_EQ(b[0], Rational(1));
  EXPECT_EQ(b[1], Rational(0));
  EXPECT_EQ(b[2], Rational(0));
  EXPECT_EQ(b[3], Rational(1));
}

TEST(LeadingFiber, FullHypotenuse) {
  const Patchwork p = fixture("edge_split").patchwork;
  for (const auto& v : leading_fiber_cubic(p).b) EXPECT_FALSE(v.is_zero());
}

TEST(Perturb, NoOpOnValidInput) {
  const Patchwork p = single_cell_patchwork();
  const auto r = perturb(p, 3);
  EXPECT_TRUE(r.offsets.empty());
  EXPECT_EQ(r.patchwork.coefficient_map(), p.coefficient_map());
}

TEST(Perturb, RepairsDegenerateCell) {
  // Y^3 - 3Y + 2 + X^3: the left edge has a double root and D has a triple root at 0.
  const BivarPoly c = curve({{0, 3, 1}, {0, 1, -3}, {0, 0, 2}, {3, 0, 1}});
  const Patchwork p = Patchwork::build(1, {{trigonal_triangle(1), c}});
  ASSERT_FALSE(check_all(p).ok());
  const auto r = perturb(p, 5);
  EXPECT_TRUE(check_all(r.patchwork).ok());
  EXPECT_FALSE(r.offsets.empty());
  EXPECT_EQ(r.patchwork.coefficient({0, 3}), Rational(1));
}

TEST(Perturb, KeepsSharedEdgesCompatible) {
  const Patchwork p = fixture("edge_split").patchwork;
  auto cells = p.cells();
  // Make the shared edge degenerate in both cells at once.
  for (auto& cell : cells) {
    cell.curve = with_coefficient(cell.curve, 1, 2, 3);
    cell.curve = with_coefficient(cell.curve, 2, 1, 3);
    cell.curve = with_coefficient(cell.curve, 3, 0, 1);
  }
  const Patchwork bad = Patchwork::build(2, cells);
  ASSERT_TRUE(check_compatibility(bad).ok());
  ASSERT_FALSE(check_all(bad).ok());
  const auto r = perturb(bad, 1);
  EXPECT_TRUE(check_compatibility(r.patchwork).ok());
  EXPECT_TRUE(check_all(r.patchwork).ok());
}
