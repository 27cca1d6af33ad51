#include <gtest/gtest.h>

#include "support.hpp"

using namespace trigpatch;
using namespace trigpatch::test;

TEST(Lattice, InteriorPoints) {
  EXPECT_EQ(interior_count(trigonal_triangle(1)), 1);
  EXPECT_EQ(interior_count(hull({{0, 0}, {1, 0}, {0, 1}})), 0);
  for (long n = 1; n <= 8; ++n) {
    // Pick: A = I + B/2 - 1 with A = 9n/2 and B = 3n + 6.
    const long pick = (9 * n - (3 * n + 6)) / 2 + 1;
    EXPECT_EQ(interior_count(trigonal_triangle(n)), pick) << n;
    EXPECT_EQ(interior_count(trigonal_triangle(n)), 3 * n - 2);
  }
}

TEST(Lattice, BoundaryMiddlePoints) {
  EXPECT_EQ(boundary_middle_count(trigonal_triangle(1)), 4);
  EXPECT_EQ(boundary_middle_count(hull({{0, 2}, {1, 0}, {2, 0}})), 1);
  for (long n = 1; n <= 6; ++n) EXPECT_EQ(boundary_middle_count(trigonal_triangle(n)), 4);
}

TEST(Lattice, Height) {
  EXPECT_EQ(height(hull({{0, 0}, {0, 3}, {1, 2}})), 3);
  EXPECT_EQ(height(hull({{0, 0}, {0, 2}, {1, 2}, {3, 0}})), 2);
  EXPECT_EQ(height(hull({{0, 1}, {2, 1}})), 1);
}

TEST(Lattice, HullNormalizesVertices) {
  const auto h = hull({{3, 0}, {0, 0}, {1, 1}, {0, 3}, {2, 1}});
  EXPECT_EQ(h.vertices().size(), 3U);
  EXPECT_EQ(h, trigonal_triangle(1));
  EXPECT_EQ(h.doubled_area(), 9);
  EXPECT_TRUE(LatticePolygon::from_vertices({{0, 0}, {2, 2}, {2, 0}, {0, 2}}).has_value());
  EXPECT_FALSE(LatticePolygon::from_vertices({{0, 0}, {1, 0}, {2, 0}, {0, 2}}).has_value());
  EXPECT_FALSE(LatticePolygon::from_vertices({{0, 0}, {3, 0}, {0, 3}, {1, 1}}).has_value());
}

TEST(Subdivision, SingleCell) {
  const auto r = validate_subdivision({trigonal_triangle(1), {trigonal_triangle(1)}});
  EXPECT_EQ(r.degree, 1);
  EXPECT_TRUE(r.shared_edges.empty());
}

TEST(Subdivision, HorizontalSplit) {
  const Subdivision s{trigonal_triangle(1), {hull({{0, 2}, {0, 3}, {1, 2}}), hull({{0, 0}, {0, 2}, {1, 2}, {3, 0}})}};
  const auto r = validate_subdivision(s);
  ASSERT_EQ(r.shared_edges.size(), 1U);
  const auto& e = r.shared_edges[0];
  EXPECT_TRUE(e.horizontal);
  EXPECT_EQ(e.height, 2);
  EXPECT_EQ(e.upper, 0U);
  EXPECT_EQ(e.lower, 1U);
}

TEST(Subdivision, RejectsBadTilings) {
  EXPECT_EQ(error_code([] { validate_subdivision({trigonal_triangle(1), {trigonal_triangle(1), trigonal_triangle(1)}}); }),
            "Overlap");
  EXPECT_EQ(error_code([] { validate_subdivision({trigonal_triangle(1), {hull({{0, 0}, {0, 3}, {1, 2}})}}); }), "Gap");
  EXPECT_EQ(error_code([] { validate_subdivision({hull({{0, 0}, {0, 3}, {2, 0}}), {hull({{0, 0}, {0, 3}, {2, 0}})}}); }),
            "NotTrigonalSupport");
  // A vertex of one cell in the middle of the other's edge.
  const Subdivision t{trigonal_triangle(2),
                      {hull({{0, 0}, {0, 3}, {2, 0}}), hull({{0, 3}, {2, 0}, {6, 0}})}};
  EXPECT_NO_THROW(validate_subdivision(t));
  const Subdivision u{trigonal_triangle(2),
                      {hull({{0, 0}, {0, 3}, {2, 0}}), hull({{0, 3}, {1, 1}, {2, 0}, {6, 0}})}};
  EXPECT_NE(error_code([&] { validate_subdivision(u); }), "");
}

TEST(MomentMap, UnitPointIsCentroid) {
  for (long n = 1; n <= 2; ++n) {
    const auto d = trigonal_triangle(n);
    double sx = 0, sy = 0;
    const auto pts = d.lattice_points();
    for (const auto& p : pts) {
      sx += static_cast<double>(p.x);
      sy += static_cast<double>(p.y);
    }
    const auto m = moment_map(d, 1.0, 1.0);
    EXPECT_NEAR(m.x, sx / static_cast<double>(pts.size()), 1e-12);
    EXPECT_NEAR(m.y, sy / static_cast<double>(pts.size()), 1e-12);
  }
  EXPECT_EQ(trigonal_triangle(1).lattice_points().size(), 10U);
}

TEST(MomentMap, LargeArgumentApproachesDominantEdge) {
  const auto square = hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_GT(moment_map(square, 1e6, 1.0).x, 0.999);
  EXPECT_NEAR(moment_map(square, 1e6, 1.0).y, 0.5, 1e-9);
}
