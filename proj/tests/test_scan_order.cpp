#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "support.hpp"
#include "trigpatch/harness.hpp"
#include "trigpatch/scan_order.hpp"

using namespace trigpatch;
using namespace trigpatch::test;

namespace {

const Subdivision horizontal_split{trigonal_triangle(1),
                                   {hull({{0, 2}, {0, 3}, {1, 2}}), hull({{0, 0}, {0, 2}, {1, 2}, {3, 0}})}};
const Subdivision edge_split{trigonal_triangle(2), {hull({{0, 0}, {0, 3}, {3, 0}}), hull({{0, 3}, {3, 0}, {6, 0}})}};

std::set<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ScanOrder, TrivialSubdivision) {
  const auto o = compute_scan_order({trigonal_triangle(3), {trigonal_triangle(3)}});
  ASSERT_EQ(o.groups.size(), 1U);
  EXPECT_EQ(o.groups[0].cells, std::vector<std::size_t>{0});
  EXPECT_TRUE(o.discarded.empty());
}

TEST(ScanOrder, HorizontalSplitIsOneGroup) {
  const auto o = compute_scan_order(horizontal_split);
  ASSERT_EQ(o.groups.size(), 1U);
  EXPECT_EQ(o.groups[0].cells, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(o.discarded.empty());
}

TEST(ScanOrder, EdgeSplitIsTwoGroups) {
  const auto o = compute_scan_order(edge_split);
  ASSERT_EQ(o.groups.size(), 2U);
  EXPECT_EQ(o.groups[0].cells, std::vector<std::size_t>{0});
  EXPECT_EQ(o.groups[1].cells, std::vector<std::size_t>{1});
  EXPECT_TRUE(o.discarded.empty());
}

TEST(ScanOrder, GroupHeights) {
  EXPECT_EQ(group_height(compute_scan_order(horizontal_split).groups[0], horizontal_split), 3);
  EXPECT_EQ(group_height({{1}, {0, 2}}, horizontal_split), 2);
  EXPECT_EQ(group_height({{0}, {0, 3}}, Subdivision{trigonal_triangle(2), {trigonal_triangle(2)}}), 3);
}

TEST(ScanOrder, FixturesPartitionAndRepeat) {
  for (const auto& entry : std::filesystem::directory_iterator(TRIGPATCH_FIXTURES)) {
    const auto doc = load_document(entry.path().string());
    const Subdivision& s = doc.patchwork.subdivision();
    EXPECT_TRUE(scan_order_violations(s).empty()) << doc.name;
    const auto a = compute_scan_order(s);
    const auto b = compute_scan_order(s);
    ASSERT_EQ(a.groups.size(), b.groups.size());
    std::set<std::size_t> seen(a.discarded.begin(), a.discarded.end());
    for (std::size_t k = 0; k < a.groups.size(); ++k) {
      EXPECT_EQ(a.groups[k].cells, b.groups[k].cells);
      EXPECT_EQ(a.groups[k].distinguished_vertex, b.groups[k].distinguished_vertex);
      for (auto c : a.groups[k].cells) EXPECT_TRUE(seen.insert(c).second) << doc.name;
      EXPECT_GE(group_height(a.groups[k], s), 2);
    }
    EXPECT_EQ(seen.size(), s.cells.size()) << doc.name;
    for (auto c : a.discarded) EXPECT_EQ(height(s.cells[c]) - s.cells[c].min_y(), 1) << doc.name;
  }
}

TEST(Classify, TrivialIsH3) {
  const Patchwork p = single_cell_patchwork();
  const auto g = classify_group(compute_scan_order(p.subdivision()).groups[0], p);
  EXPECT_EQ(g.profile, GroupProfile::H3);
  EXPECT_EQ(g.rows.at(0), poly({Rational(1, 4), -2, 0, 1}));
  EXPECT_EQ(g.rows.at(1), Poly1::constant(-3));
  EXPECT_EQ(g.rows.at(3), Poly1::constant(1));
}

TEST(Classify, HorizontalSplitIsH3H2) {
  const Patchwork p = fixture("horizontal_split").patchwork;
  const auto g = classify_group(compute_scan_order(p.subdivision()).groups[0], p);
  EXPECT_EQ(g.profile, GroupProfile::H3_H2);
  EXPECT_EQ(g.top_cell, 0U);
  EXPECT_EQ(g.height2_cell, std::optional<std::size_t>(1));
  EXPECT_FALSE(g.height1_cell.has_value());
  // The Y^2 row is shared by both cells along the horizontal edge.
  EXPECT_EQ(g.rows.at(2), p.cells()[0].curve.row(2));
  EXPECT_EQ(g.rows.at(2), p.cells()[1].curve.row(2));
  EXPECT_EQ(g.rows.at(1), p.cells()[1].curve.row(1));
  EXPECT_EQ(g.rows.at(0), p.cells()[1].curve.row(0));
}

TEST(Classify, ProfileNames) {
  EXPECT_EQ(to_string(GroupProfile::H3_H2_H1), "H3+H2+H1");
  EXPECT_EQ(to_string(GroupProfile::H2_H1), "H2+H1");
}
