#include "trigpatch/patchwork.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "trigpatch/error.hpp"
#include "trigpatch/roots.hpp"

namespace trigpatch {

BivarPoly curve_from_points(const std::vector<std::pair<LatticePoint, Rational>>& terms) {
  std::vector<std::pair<std::pair<int, int>, Rational>> t;
  for (const auto& [p, c] : terms) t.push_back({{static_cast<int>(p.x), static_cast<int>(p.y)}, c});
  return BivarPoly::from_terms(t);
}

LatticePolygon newton_polygon(const BivarPoly& c) {
  std::vector<LatticePoint> pts;
  for (const auto& [i, j] : c.support()) pts.push_back({i, j});
  return LatticePolygon::hull_of(pts);
}

Patchwork Patchwork::build(long degree, std::vector<PatchCell> cells) {
  Patchwork p;
  p.degree_ = degree;
  p.subdivision_.support = trigonal_triangle(degree);
  for (const auto& c : cells) p.subdivision_.cells.push_back(c.polygon);
  p.layout_ = validate_subdivision(p.subdivision_);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const auto& cell = cells[k];
    if (newton_polygon(cell.curve) != cell.polygon) {
      for (const auto& [i, j] : cell.curve.support())
        if (!cell.polygon.contains({i, j}))
          throw validation_error("MonomialOutsideCell", "monomial lies outside its cell",
                                 {{"cell", std::to_string(k)},
                                  {"monomial", LatticePoint{i, j}.str()}});
      throw validation_error("NewtonPolygonMismatch", "a cell vertex carries no coefficient",
                             {{"cell", std::to_string(k)}, {"polygon", cell.polygon.str()}});
    }
    const Rational y3 = cell.curve.coefficient(0, 3);
    if (!y3.is_zero() && y3 != Rational(1))
      throw validation_error("NotNormalized", "coefficient of Y^3 must be 0 or 1", {{"cell", std::to_string(k)}});
  }
  p.cells_ = std::move(cells);
  return p;
}

Patchwork Patchwork::from_coefficients(long degree, const std::vector<LatticePolygon>& polygons,
                                       const CoefficientMap& coefficients) {
  std::vector<PatchCell> cells;
  for (const auto& poly : polygons) {
    std::vector<std::pair<LatticePoint, Rational>> terms;
    for (const auto& q : poly.lattice_points()) {
      auto it = coefficients.find(q);
      if (it != coefficients.end() && !it->second.is_zero()) terms.emplace_back(q, it->second);
    }
    cells.push_back({poly, curve_from_points(terms)});
  }
  return build(degree, std::move(cells));
}

Rational Patchwork::coefficient(const LatticePoint& p) const {
  for (const auto& c : cells_)
    if (c.polygon.contains(p)) return c.curve.coefficient(static_cast<int>(p.x), static_cast<int>(p.y));
  return Rational(0);
}

CoefficientMap Patchwork::coefficient_map() const {
  CoefficientMap m;
  for (const auto& c : cells_)
    for (const auto& q : c.polygon.lattice_points()) {
      const Rational v = c.curve.coefficient(static_cast<int>(q.x), static_cast<int>(q.y));
      if (!v.is_zero()) m.emplace(q, v);
    }
  return m;
}

namespace {

bool is_face(const LatticePolygon& poly, const LatticeSegment& f) {
  if (f.a == f.b) return poly.has_vertex(f.a);
  return poly.has_edge(f);
}

std::vector<LatticePoint> segment_points(const LatticeSegment& f) {
  const long g = std::gcd(std::labs(f.b.x - f.a.x), std::labs(f.b.y - f.a.y));
  if (g == 0) return {f.a};
  const long sx = (f.b.x - f.a.x) / g, sy = (f.b.y - f.a.y) / g;
  std::vector<LatticePoint> pts;
  for (long k = 0; k <= g; ++k) pts.push_back({f.a.x + k * sx, f.a.y + k * sy});
  return pts;
}

Rational coeff_at(const BivarPoly& c, const LatticePoint& p) {
  return c.coefficient(static_cast<int>(p.x), static_cast<int>(p.y));
}

}  // namespace

BivarPoly truncation(const BivarPoly& c, const LatticeSegment& face) {
  if (!is_face(newton_polygon(c), face))
    throw validation_error("NotAFace", "segment is not a face of the Newton polygon", {{"face", face.str()}});
  std::vector<std::pair<LatticePoint, Rational>> terms;
  for (const auto& q : segment_points(face)) {
    const Rational v = coeff_at(c, q);
    if (!v.is_zero()) terms.emplace_back(q, v);
  }
  return curve_from_points(terms);
}

Poly1 edge_polynomial(const BivarPoly& c, const LatticeSegment& face) {
  std::vector<Rational> v;
  for (const auto& q : segment_points(face)) v.push_back(coeff_at(c, q));
  return Poly1(std::move(v));
}

CheckReport check_compatibility(const Patchwork& p) {
  CheckReport r;
  for (const auto& e : p.layout().shared_edges) {
    const auto& a = p.cells()[e.first].curve;
    const auto& b = p.cells()[e.second].curve;
    if (!(truncation(a, e.segment) == truncation(b, e.segment)))
      r.failures.push_back({"compatibility", "edge " + e.segment.str(),
                            "cells " + std::to_string(e.first) + " and " + std::to_string(e.second) +
                                " disagree on the edge"});
  }
  return r;
}

CheckReport check_cell_condition1(const BivarPoly& c, const LatticePolygon& polygon, const std::string& name) {
  CheckReport r;
  for (const auto& e : polygon.edges()) {
    const Poly1 ep = edge_polynomial(c, e);
    if (ep.is_zero() || ep.valuation() != 0 || ep.leading().is_zero()) {
      r.failures.push_back({"condition1", name, "edge " + e.str() + " lacks a vertex coefficient"});
      continue;
    }
    if (gcd(ep, ep.derivative()).degree() > 0)
      r.failures.push_back({"condition1", name, "edge " + e.str() + " truncation has a repeated root"});
  }
  const BivarPoly red = c.torus_reduced();
  if (red.degree_y() >= 1) {
    const Poly1 r1 = resultant_y(red, red.derivative_x());
    const Poly1 r2 = resultant_y(red, red.derivative_y());
    const Poly1 g = gcd(r1, r2);
    if (g.is_zero() || count_cstar_roots(g) > 0)
      r.failures.push_back({"condition1", name, "curve may be singular in the torus"});
  }
  return r;
}

CheckReport check_cell_condition2(const BivarPoly& c, const LatticePolygon& polygon, const std::string& name) {
  CheckReport r;
  const BivarPoly red = c.torus_reduced();
  if (red.degree_y() >= 2) {
    const Poly1 d = discriminant_y(red);
    const long want = tangency_bound(polygon);
    const long got = d.is_zero() ? -1 : count_distinct_cstar_roots(d);
    if (got != want)
      r.failures.push_back({"condition2", name,
                            "discriminant has " + std::to_string(got) + " distinct nonzero roots, expected " +
                                std::to_string(want)});
  }
  const int top = red.degree_y();
  for (auto [row, adjacent] : {std::pair{top, top - 1}, std::pair{0, 1}}) {
    if (top < 1) break;
    const Poly1 g = gcd(red.row(row), red.row(adjacent));
    if (g.degree() > 0 && !isolate_nonzero_real_roots(g).empty())
      r.failures.push_back({"condition2", name,
                            "rows " + std::to_string(row) + " and " + std::to_string(adjacent) +
                                " share a real nonzero root"});
  }
  return r;
}

CheckReport check_condition1(const Patchwork& p) {
  CheckReport r;
  for (std::size_t k = 0; k < p.cells().size(); ++k)
    r.merge(check_cell_condition1(p.cells()[k].curve, p.cells()[k].polygon, "cell " + std::to_string(k)));
  return r;
}

CheckReport check_condition2(const Patchwork& p) {
  CheckReport r;
  for (std::size_t k = 0; k < p.cells().size(); ++k)
    r.merge(check_cell_condition2(p.cells()[k].curve, p.cells()[k].polygon, "cell " + std::to_string(k)));
  return r;
}

CheckReport check_all(const Patchwork& p) {
  CheckReport r = check_compatibility(p);
  if (!r.ok()) return r;
  r.merge(check_condition1(p));
  if (!r.ok()) return r;
  r.merge(check_condition2(p));
  return r;
}

LeadingFiberCubic leading_fiber_cubic(const Patchwork& p) {
  LeadingFiberCubic c;
  for (int i = 0; i <= 3; ++i) c.b[static_cast<std::size_t>(i)] = p.coefficient({(3 - i) * p.degree(), i});
  return c;
}

PerturbResult perturb(const Patchwork& p, std::uint64_t seed, int max_attempts) {
  if (check_all(p).ok()) return {p, 0, {}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-16, 16);
  const CoefficientMap base = p.coefficient_map();
  std::vector<LatticePoint> points = p.subdivision().support.lattice_points();
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    const Rational scale = Rational(1) / pow(Rational(2), static_cast<unsigned>(2 + attempt / 3));
    CoefficientMap m = base;
    std::vector<std::pair<LatticePoint, Rational>> offsets;
    for (const auto& q : points) {
      if (q == LatticePoint{0, 3}) continue;
      long k = 0;
      while (k == 0) k = pick(rng);
      const Rational off = scale * Rational(k, 16);
      Rational v = base.count(q) ? base.at(q) : Rational(0);
      v += off;
      if (v.is_zero()) v += off;
      m[q] = v;
      offsets.emplace_back(q, off);
    }
    Patchwork candidate;
    try {
      candidate = Patchwork::from_coefficients(p.degree(), p.subdivision().cells, m);
    } catch (const Error&) {
      continue;
    }
    if (check_all(candidate).ok()) return {candidate, attempt, offsets};
  }
  throw validation_error("PerturbationFailed", "no admissible perturbation found",
                         {{"attempts", std::to_string(max_attempts)}});
}

}  // namespace trigpatch
