#include "trigpatch/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "trigpatch/error.hpp"

namespace trigpatch {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

LatticePolygon LatticePolygon::hull_of(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return LatticePolygon(pts);
  std::vector<LatticePoint> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return LatticePolygon(std::move(h));
}

std::optional<LatticePolygon> LatticePolygon::from_vertices(const std::vector<LatticePoint>& vertices) {
  LatticePolygon h = hull_of(vertices);
  auto sorted_in = vertices;
  std::sort(sorted_in.begin(), sorted_in.end());
  auto sorted_h = h.vertices_;
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_in != sorted_h) return std::nullopt;
  return h;
}

std::vector<LatticeSegment> LatticePolygon::edges() const {
  std::vector<LatticeSegment> e;
  const std::size_t n = vertices_.size();
  if (n < 2) return e;
  for (std::size_t k = 0; k < n; ++k) {
    if (n == 2 && k == 1) break;
    e.push_back({vertices_[k], vertices_[(k + 1) % n]});
  }
  return e;
}

long LatticePolygon::doubled_area() const {
  long a = 0;
  const std::size_t n = vertices_.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& p = vertices_[k];
    const auto& q = vertices_[(k + 1) % n];
    a += p.x * q.y - q.x * p.y;
  }
  return a;
}

bool LatticePolygon::contains(const LatticePoint& p) const {
  const std::size_t n = vertices_.size();
  if (n < 3) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (cross(vertices_[k], vertices_[(k + 1) % n], p) < 0) return false;
  return true;
}

bool LatticePolygon::strictly_contains(const LatticePoint& p) const {
  const std::size_t n = vertices_.size();
  if (n < 3) return false;
  for (std::size_t k = 0; k < n; ++k)
    if (cross(vertices_[k], vertices_[(k + 1) % n], p) <= 0) return false;
  return true;
}

bool LatticePolygon::has_vertex(const LatticePoint& p) const {
  return std::find(vertices_.begin(), vertices_.end(), p) != vertices_.end();
}

bool LatticePolygon::has_edge(const LatticeSegment& e) const {
  for (const auto& f : edges())
    if (f == e) return true;
  return false;
}

std::vector<LatticePoint> LatticePolygon::lattice_points() const {
  std::vector<LatticePoint> pts;
  if (vertices_.empty()) return pts;
  long x0 = vertices_[0].x, x1 = x0, y0 = vertices_[0].y, y1 = y0;
  for (const auto& v : vertices_) {
    x0 = std::min(x0, v.x), x1 = std::max(x1, v.x);
    y0 = std::min(y0, v.y), y1 = std::max(y1, v.y);
  }
  for (long y = y0; y <= y1; ++y)
    for (long x = x0; x <= x1; ++x)
      if (contains({x, y})) pts.push_back({x, y});
  return pts;
}

long LatticePolygon::min_y() const {
  long m = vertices_.at(0).y;
  for (const auto& v : vertices_) m = std::min(m, v.y);
  return m;
}

long LatticePolygon::max_y() const {
  long m = vertices_.at(0).y;
  for (const auto& v : vertices_) m = std::max(m, v.y);
  return m;
}

long LatticePolygon::min_x() const {
  long m = vertices_.at(0).x;
  for (const auto& v : vertices_) m = std::min(m, v.x);
  return m;
}

std::optional<LatticeSegment> LatticePolygon::top_horizontal_edge() const {
  const long h = max_y();
  for (const auto& e : edges())
    if (e.is_horizontal() && e.a.y == h) return e.normalized();
  return std::nullopt;
}

std::optional<LatticeSegment> LatticePolygon::bottom_horizontal_edge() const {
  const long h = min_y();
  for (const auto& e : edges())
    if (e.is_horizontal() && e.a.y == h) return e.normalized();
  return std::nullopt;
}

std::string LatticePolygon::str() const {
  std::string s = "[";
  for (std::size_t k = 0; k < vertices_.size(); ++k) s += (k ? "," : "") + vertices_[k].str();
  return s + "]";
}

LatticePolygon trigonal_triangle(long n) { return LatticePolygon::hull_of({{0, 0}, {0, 3}, {3 * n, 0}}); }

namespace {

void require_area(const LatticePolygon& p) {
  if (p.doubled_area() <= 0)
    throw validation_error("DegeneratePolygon", "polygon has no interior", {{"polygon", p.str()}});
}


bool in_open_segment(const LatticeSegment& e, const LatticePoint& p) {
  if (cross(e.a, e.b, p) != 0) return false;
  if (p == e.a || p == e.b) return false;
  return std::min(e.a.x, e.b.x) <= p.x && p.x <= std::max(e.a.x, e.b.x) && std::min(e.a.y, e.b.y) <= p.y &&
         p.y <= std::max(e.a.y, e.b.y);
}

bool interiors_overlap(const LatticePolygon& a, const LatticePolygon& b) {
  auto separated_along = [](const LatticePolygon& p, const LatticePolygon& q, const LatticeSegment& e) {
    const long nx = e.b.y - e.a.y, ny = -(e.b.x - e.a.x);
    auto project = [&](const LatticePolygon& poly) {
      long lo = nx * poly.vertices()[0].x + ny * poly.vertices()[0].y, hi = lo;
      for (const auto& v : poly.vertices()) {
        const long d = nx * v.x + ny * v.y;
        lo = std::min(lo, d), hi = std::max(hi, d);
      }
      return std::pair{lo, hi};
    };
    const auto [plo, phi] = project(p);
    const auto [qlo, qhi] = project(q);
    return phi <= qlo || qhi <= plo;
  };
  for (const auto& e : a.edges())
    if (separated_along(a, b, e)) return false;
  for (const auto& e : b.edges())
    if (separated_along(a, b, e)) return false;
  return true;
}

}  // namespace

long interior_count(const LatticePolygon& p) {
  require_area(p);
  long c = 0;
  for (const auto& q : p.lattice_points())
    if (p.strictly_contains(q)) ++c;
  return c;
}

long boundary_middle_count(const LatticePolygon& p) {
  require_area(p);
  const long lo = p.min_y(), hi = p.max_y();
  long c = 0;
  for (const auto& q : p.lattice_points())
    if (!p.strictly_contains(q) && q.y > lo && q.y < hi) ++c;
  return c;
}

long height(const LatticePolygon& p) { return p.vertices().empty() ? 0 : p.max_y(); }

long tangency_bound(const LatticePolygon& p) { return 2 * interior_count(p) + boundary_middle_count(p); }

SubdivisionReport validate_subdivision(const Subdivision& s) {
  SubdivisionReport report;
  const auto& sv = s.support.vertices();
  std::vector<LatticePoint> all;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    require_area(s.cells[i]);
    all.insert(all.end(), s.cells[i].vertices().begin(), s.cells[i].vertices().end());
  }
  if (s.cells.empty()) throw validation_error("Gap", "subdivision has no cells");
  const LatticePolygon hull = LatticePolygon::hull_of(all);
  long maxx = 0;
  for (const auto& v : sv) maxx = std::max(maxx, v.x);
  if (maxx <= 0 || maxx % 3 != 0 || s.support != trigonal_triangle(maxx / 3))
    throw validation_error("NotTrigonalSupport", "support is not a trigonal triangle", {{"support", s.support.str()}});
  report.degree = maxx / 3;
  if (hull != s.support) {
    for (std::size_t i = 0; i < s.cells.size(); ++i)
      for (const auto& v : s.cells[i].vertices())
        if (!s.support.contains(v))
          throw validation_error("NotTrigonalSupport", "cell leaves the support",
                                 {{"cell", std::to_string(i)}, {"vertex", v.str()}});
  }
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (std::size_t j = i + 1; j < s.cells.size(); ++j)
      if (interiors_overlap(s.cells[i], s.cells[j]))
        throw validation_error("Overlap", "cells overlap", {{"first", std::to_string(i)}, {"second", std::to_string(j)}});
  long area = 0;
  for (const auto& c : s.cells) area += c.doubled_area();
  if (area != s.support.doubled_area())
    throw validation_error("Gap", "cells do not cover the support",
                           {{"covered_doubled_area", std::to_string(area)},
                            {"support_doubled_area", std::to_string(s.support.doubled_area())}});
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (std::size_t j = 0; j < s.cells.size(); ++j) {
      if (i == j) continue;
      for (const auto& v : s.cells[i].vertices())
        for (const auto& e : s.cells[j].edges())
          if (in_open_segment(e, v))
            throw validation_error("NonFaceIntersection", "vertex lies inside an edge of another cell",
                                   {{"cell", std::to_string(i)}, {"vertex", v.str()}, {"other", std::to_string(j)},
                                    {"edge", e.str()}});
    }
  const auto support_edges = s.support.edges();
  auto on_support_boundary = [&](const LatticeSegment& e) {
    for (const auto& f : support_edges)
      if (cross(f.a, f.b, e.a) == 0 && cross(f.a, f.b, e.b) == 0) return true;
    return false;
  };
  for (std::size_t i = 0; i < s.cells.size(); ++i)
    for (const auto& e : s.cells[i].edges()) {
      if (on_support_boundary(e)) continue;
      std::vector<std::size_t> owners;
      for (std::size_t j = 0; j < s.cells.size(); ++j)
        if (j != i && s.cells[j].has_edge(e)) owners.push_back(j);
      if (owners.size() != 1)
        throw validation_error("NonFaceIntersection", "interior edge is not shared by exactly two cells",
                               {{"cell", std::to_string(i)}, {"edge", e.str()}});
      const std::size_t j = owners[0];
      if (j < i) continue;
      SharedEdge se;
      se.segment = e.normalized();
      se.first = i;
      se.second = j;
      se.horizontal = e.is_horizontal();
      if (se.horizontal) {
        se.height = e.a.y;
        const bool i_above = s.cells[i].min_y() == e.a.y;
        se.upper = i_above ? i : j;
        se.lower = i_above ? j : i;
      }
      report.shared_edges.push_back(se);
    }
  return report;
}

MomentPoint moment_map(const LatticePolygon& polygon, double x, double y) {
  if (!(x > 0) || !(y > 0)) throw validation_error("NonPositiveInput", "moment map needs positive coordinates");
  if (polygon.doubled_area() <= 0) throw validation_error("DegeneratePolygon", "moment map needs a 2-cell");
  const auto pts = polygon.lattice_points();
  // Work in log space to stay finite for extreme inputs.
  const double lx = std::log(x), ly = std::log(y);
  double top = -INFINITY;
  for (const auto& p : pts) top = std::max(top, static_cast<double>(p.x) * lx + static_cast<double>(p.y) * ly);
  double w = 0, sx = 0, sy = 0;
  for (const auto& p : pts) {
    const double e = std::exp(static_cast<double>(p.x) * lx + static_cast<double>(p.y) * ly - top);
    w += e, sx += e * static_cast<double>(p.x), sy += e * static_cast<double>(p.y);
  }
  return {sx / w, sy / w};
}

}  // namespace trigpatch
