#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trigpatch {

struct LatticePoint {
  long x = 0;
  long y = 0;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

struct LatticeSegment {
  LatticePoint a;
  LatticePoint b;
  bool is_horizontal() const { return a.y == b.y; }
  // Same segment regardless of orientation.
  friend bool operator==(const LatticeSegment& s, const LatticeSegment& t) {
    return (s.a == t.a && s.b == t.b) || (s.a == t.b && s.b == t.a);
  }
  LatticeSegment normalized() const { return a < b ? *this : LatticeSegment{b, a}; }
  std::string str() const { return a.str() + "-" + b.str(); }
};

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b);

// Convex lattice polygon, counterclockwise, no three consecutive vertices collinear.
class LatticePolygon {
 public:
  LatticePolygon() = default;
  // Builds the convex hull of the given points.
  static LatticePolygon hull_of(std::vector<LatticePoint> points);
  // Accepts a point list only if every point is a vertex of its convex hull; order is ignored.
  static std::optional<LatticePolygon> from_vertices(const std::vector<LatticePoint>& vertices);

  const std::vector<LatticePoint>& vertices() const noexcept { return vertices_; }
  std::vector<LatticeSegment> edges() const;
  long doubled_area() const;
  bool contains(const LatticePoint& p) const;           // closed polygon
  bool strictly_contains(const LatticePoint& p) const;  // interior
  bool has_vertex(const LatticePoint& p) const;
  bool has_edge(const LatticeSegment& e) const;
  std::vector<LatticePoint> lattice_points() const;
  long min_y() const;
  long max_y() const;
  long min_x() const;
  std::optional<LatticeSegment> top_horizontal_edge() const;
  std::optional<LatticeSegment> bottom_horizontal_edge() const;
  std::string str() const;

  friend bool operator==(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  explicit LatticePolygon(std::vector<LatticePoint> v) : vertices_(std::move(v)) {}
  std::vector<LatticePoint> vertices_;
};

LatticePolygon trigonal_triangle(long n);

long interior_count(const LatticePolygon& p);
long boundary_middle_count(const LatticePolygon& p);
long height(const LatticePolygon& p);
// 2 I(delta) + boundary_middle(delta): the maximal number of tangency points.
long tangency_bound(const LatticePolygon& p);

struct Subdivision {
  LatticePolygon support;
  std::vector<LatticePolygon> cells;
};

struct SharedEdge {
  LatticeSegment segment;
  std::size_t first = 0;
  std::size_t second = 0;
  bool horizontal = false;
  long height = 0;
  // For horizontal edges: the cell lying above and the one below.
  std::size_t upper = 0;
  std::size_t lower = 0;
};

struct SubdivisionReport {
  long degree = 0;
  std::vector<SharedEdge> shared_edges;
};

// Throws NotTrigonalSupport, Overlap, Gap or NonFaceIntersection.
SubdivisionReport validate_subdivision(const Subdivision& s);

struct MomentPoint {
  double x;
  double y;
};
MomentPoint moment_map(const LatticePolygon& polygon, double x, double y);

}  // namespace trigpatch
