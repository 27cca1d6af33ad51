#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"
#include "trigpatch/assembly.hpp"
#include "trigpatch/generate.hpp"

using namespace trigpatch;
using namespace trigpatch::test;

namespace {

std::size_t count_events(const GraphSkeleton& g, EventKind kind, int order) {
  return static_cast<std::size_t>(std::count_if(g.events.begin(), g.events.end(), [&](const BoundaryEvent& e) {
    return e.kind == kind && e.order == order;
  }));
}

long ones(const GraphSkeleton& g) { return g.total_order(EventKind::OnePre) + 2 * g.interior_one; }

// Preimages of 1 recorded at a mark; they leave the torus when two groups are glued there.
long ones_at(const GraphSkeleton& g, EventKind mark) {
  const auto k = g.find_mark(mark);
  if (!k) return 0;
  const auto& at = g.events[*k].at_mark;
  return at && at->kind == EventKind::OnePre ? at->order : 0;
}

IsolatingInterval root_of(const Poly1& p) { return isolate_real_roots(p).at(0); }

// a1 = 1, a2 = 2(X - 1), a3 = (X - 1)^2 / 2: the discriminant 2(X - 1)^2 has a double root at 1.
GraphSkeleton double_one_skeleton() {
  const BivarPoly c = curve({{0, 2, 1}, {1, 1, 2}, {0, 1, -2}, {2, 0, Rational(1, 2)}, {1, 0, -1}, {0, 0, Rational(1, 2)}});
  return normalize_height2(skeleton_of_bidegree2(c, 1));
}

// a1 = X - 1 vanishes at 1.
GraphSkeleton a1_root_skeleton() {
  const BivarPoly c = curve({{1, 2, 1}, {0, 2, -1}, {0, 1, 1}, {0, 0, 1}});
  return normalize_height2(skeleton_of_bidegree2(c, 1));
}

}  // namespace

TEST(Smoothing, RealSmoothingSplitsDoubleOne) {
  const GraphSkeleton g = double_one_skeleton();
  ASSERT_EQ(count_events(g, EventKind::OnePre, 2), 1U);
  const SurgerySite site{SurgeryKind::DoubleOneSmoothing, root_of(poly({-1, 1})), 1, 0, 1};
  const GraphSkeleton h = smooth_double_one(g, site);
  EXPECT_EQ(count_events(h, EventKind::OnePre, 2), 0U);
  EXPECT_EQ(count_events(h, EventKind::OnePre, 1), count_events(g, EventKind::OnePre, 1) + 2);
  EXPECT_EQ(ones(h), ones(g));
  EXPECT_TRUE(validate_boundary(h, false).ok());
}

TEST(Smoothing, ComplexSmoothingMovesDoubleOneInside) {
  const GraphSkeleton g = double_one_skeleton();
  const SurgerySite site{SurgeryKind::DoubleOneSmoothing, root_of(poly({-1, 1})), 1, 0, -1};
  const GraphSkeleton h = smooth_double_one(g, site);
  EXPECT_EQ(count_events(h, EventKind::OnePre, 2), 0U);
  EXPECT_EQ(h.interior_one, g.interior_one + 1);
  EXPECT_EQ(ones(h), ones(g));
  EXPECT_TRUE(validate_boundary(h, false).ok());
}

TEST(Smoothing, MissingSiteIsReported) {
  const GraphSkeleton g = double_one_skeleton();
  const SurgerySite site{SurgeryKind::DoubleOneSmoothing, root_of(poly({-1, 1})), -1, 0, 1};
  EXPECT_NE(error_code([&] { smooth_double_one(g, site); }), "");
}

TEST(A1Root, PositiveA2AddsTwoSimpleOnes) {
  const GraphSkeleton g = a1_root_skeleton();
  ASSERT_EQ(count_events(g, EventKind::PolePre, 4), 1U);
  const SurgerySite site{SurgeryKind::A1RootPerturbation, root_of(poly({-1, 1})), 1, 0, 1};
  const GraphSkeleton h = perturb_a1_root(g, site);
  EXPECT_EQ(count_events(h, EventKind::OnePre, 1), count_events(g, EventKind::OnePre, 1) + 2);
  EXPECT_EQ(count_events(h, EventKind::PolePre, 4), 0U);
  EXPECT_EQ(ones(h), ones(g) + 2);
  EXPECT_TRUE(validate_boundary(h, false).ok());
}

TEST(A1Root, NegativeA2AddsNoBoundaryOnes) {
  const GraphSkeleton g = a1_root_skeleton();
  const SurgerySite site{SurgeryKind::A1RootPerturbation, root_of(poly({-1, 1})), 1, 0, -1};
  const GraphSkeleton h = perturb_a1_root(g, site);
  EXPECT_EQ(count_events(h, EventKind::OnePre, 1), count_events(g, EventKind::OnePre, 1));
  EXPECT_EQ(ones(h), ones(g) + 2);
  EXPECT_TRUE(validate_boundary(h, false).ok());
}

TEST(A1Root, ConjugatePairLeavesBoundary) {
  const GraphSkeleton g = a1_root_skeleton();
  const SurgerySite site{SurgeryKind::A1RootPerturbation, std::nullopt, 1, 0, 1};
  const GraphSkeleton h = perturb_a1_root(g, site);
  EXPECT_EQ(h.events, g.events);
  EXPECT_EQ(h.arcs, g.arcs);
  EXPECT_EQ(h.interior_one, g.interior_one + 2);
}

TEST(Gluing, EdgeSplitIsTransverse) {
  const Patchwork p = fixture("edge_split").patchwork;
  const auto result = assemble(p);
  ASSERT_EQ(result.order.groups.size(), 2U);
  const auto c = gluing_case(result.order.groups[0], result.order.groups[1], p.subdivision());
  EXPECT_EQ(c.kind, GluingKind::Transverse);
  ASSERT_TRUE(c.edge.has_value());
  EXPECT_EQ(*c.edge, (LatticeSegment{{0, 3}, {3, 0}}));

  const auto left = build_group_skeleton(result.order.groups[0], p, 0).skeleton;
  const auto right = build_group_skeleton(result.order.groups[1], p, 1).skeleton;
  const auto glued = glue_groups(left, right, c);
  EXPECT_EQ(glued.total_order(EventKind::OnePre), left.total_order(EventKind::OnePre) + right.total_order(EventKind::OnePre));
  EXPECT_EQ(skeleton_degree(result.skeleton), 12);
}

TEST(Gluing, ClassifiesByEdgeEndpoint) {
  const Subdivision zero{trigonal_triangle(2), {hull({{0, 0}, {0, 3}, {2, 0}}), hull({{0, 3}, {2, 0}, {6, 0}})}};
  const auto oz = compute_scan_order(zero);
  ASSERT_EQ(oz.groups.size(), 2U);
  EXPECT_EQ(gluing_case(oz.groups[0], oz.groups[1], zero).kind, GluingKind::ZeroJunction);

  const Subdivision pole{trigonal_triangle(1),
                         {hull({{0, 0}, {1, 1}, {0, 3}}), hull({{1, 1}, {3, 0}, {0, 3}}), hull({{0, 0}, {3, 0}, {1, 1}})}};
  const auto op = compute_scan_order(pole);
  ASSERT_EQ(op.groups.size(), 2U);
  EXPECT_EQ(gluing_case(op.groups[0], op.groups[1], pole).kind, GluingKind::PoleJunction);
}

TEST(Gluing, OnesAddAwayFromTheJunction) {
  std::set<GluingKind> seen;
  for (long n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Patchwork p = generate_patchwork(n, seed).patchwork;
      const auto order = compute_scan_order(p.subdivision());
      GraphSkeleton acc = build_group_skeleton(order.groups[0], p, 0).skeleton;
      for (std::size_t k = 1; k < order.groups.size(); ++k) {
        const auto next = build_group_skeleton(order.groups[k], p, k).skeleton;
        const auto c = gluing_case(order.groups[k - 1], order.groups[k], p.subdivision());
        seen.insert(c.kind);
        const auto glued = glue_groups(acc, next, c);
        EXPECT_EQ(ones(glued), ones(acc) + ones(next) - ones_at(acc, EventKind::MarkInf) - ones_at(next, EventKind::Mark0));
        acc = glued;
      }
    }
  EXPECT_TRUE(seen.count(GluingKind::Transverse));
}

TEST(Assemble, SingleCellIsTheCurveSkeleton) {
  const auto r = assemble(single_cell_patchwork());
  EXPECT_TRUE(r.report.ok());
  EXPECT_EQ(r.skeleton, skeleton_of_trigonal(running_curve(), 1));
  EXPECT_EQ(r.extracted, r.combinatorial);
  EXPECT_EQ(r.extracted.str(), "[-,-+]");
}

TEST(Assemble, HorizontalSplit) {
  const auto r = assemble(fixture("horizontal_split").patchwork);
  EXPECT_TRUE(r.report.ok());
  EXPECT_EQ(skeleton_degree(r.skeleton), 6);
  EXPECT_EQ(r.extracted, r.combinatorial);
  EXPECT_TRUE(std::any_of(r.log.begin(), r.log.end(), [](const SurgeryLogEntry& e) { return e.action == "height2"; }));
}

TEST(Assemble, ModesAgreeOnValidInput) {
  const Patchwork p = fixture("edge_split").patchwork;
  const auto a = assemble(p, {true, true});
  const auto b = assemble(p, {false, false});
  EXPECT_EQ(a.skeleton, b.skeleton);
  EXPECT_EQ(a.extracted, b.extracted);
}
