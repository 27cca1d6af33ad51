#include "trigpatch/generate.hpp"

#include <algorithm>
#include <random>
#include <numeric>

#include "trigpatch/error.hpp"
#include "trigpatch/scan_order.hpp"
#include "trigpatch/sign_array.hpp"

namespace trigpatch {

namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Rational random_coefficient(Rng& rng) {
  long num = 0;
  while (num == 0) num = uniform(rng, -9, 9);
  return Rational(num, uniform(rng, 1, 4));
}

bool on_segment(const LatticePoint& p, const LatticeSegment& s) {
  if (cross(s.a, s.b, p) != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

bool on_support_boundary(const LatticePoint& p, const LatticePolygon& support) {
  for (const auto& e : support.edges())
    if (on_segment(p, e)) return true;
  return false;
}

}  // namespace

std::vector<LatticePolygon> random_subdivision(long n, std::uint64_t seed, std::size_t max_cells) {
  Rng rng(seed);
  const LatticePolygon support = trigonal_triangle(n);
  std::vector<LatticePolygon> cells{support};
  const std::size_t target = static_cast<std::size_t>(uniform(rng, 1, static_cast<long>(max_cells)));
  for (int tries = 0; cells.size() < target && tries < 64; ++tries) {
    const std::size_t k = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(cells.size()) - 1));
    const LatticePolygon& cell = cells[k];
    // Split points: cell vertices, or boundary points on the outer boundary where no neighbour can see them.
    std::vector<LatticePoint> ends;
    for (const auto& q : cell.lattice_points())
      if (!cell.strictly_contains(q) && (cell.has_vertex(q) || on_support_boundary(q, support))) ends.push_back(q);
    std::vector<LatticeSegment> chords, flat;
    for (std::size_t i = 0; i < ends.size(); ++i)
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        const LatticeSegment s{ends[i], ends[j]};
        bool along_edge = false;
        for (const auto& e : cell.edges())
          if (on_segment(s.a, e) && on_segment(s.b, e)) along_edge = true;
        if (along_edge) continue;
        chords.push_back(s);
        if (s.is_horizontal()) flat.push_back(s);
      }
    if (chords.empty()) continue;
    const auto& pool = (!flat.empty() && uniform(rng, 0, 1) == 0) ? flat : chords;
    const LatticeSegment chord = pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))];
    std::vector<LatticePoint> left{chord.a, chord.b}, right{chord.a, chord.b};
    for (const auto& q : cell.vertices()) {
      const long side = cross(chord.a, chord.b, q);
      if (side > 0) left.push_back(q);
      if (side < 0) right.push_back(q);
    }
    const LatticePolygon l = LatticePolygon::hull_of(left), r = LatticePolygon::hull_of(right);
    if (l.doubled_area() == 0 || r.doubled_area() == 0) continue;
    cells[k] = l;
    cells.push_back(r);
  }
  return cells;
}

bool crosses(const LatticeSegment& s, const LatticeSegment& t) {
  const long d1 = cross(s.a, s.b, t.a), d2 = cross(s.a, s.b, t.b);
  const long d3 = cross(t.a, t.b, s.a), d4 = cross(t.a, t.b, s.b);
  if (d1 == 0 && d2 == 0) return on_segment(t.a, s) || on_segment(t.b, s) || on_segment(s.a, t);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Splits the cell through which the chord runs.
void split_along(std::vector<LatticePolygon>& cells, const LatticeSegment& chord) {
  for (std::size_t k = 0; k < cells.size(); ++k) {
    const LatticePolygon& cell = cells[k];
    if (!cell.contains(chord.a) || !cell.contains(chord.b)) continue;
    std::vector<LatticePoint> left{chord.a, chord.b}, right{chord.a, chord.b};
    for (const auto& q : cell.vertices()) {
      const long side = cross(chord.a, chord.b, q);
      if (side > 0) left.push_back(q);
      if (side < 0) right.push_back(q);
    }
    if (left.size() == 2 || right.size() == 2) continue;  // chord runs along an edge
    cells[k] = LatticePolygon::hull_of(left);
    cells.push_back(LatticePolygon::hull_of(right));
    return;
  }
}

ConvexSubdivision random_convex_subdivision(long n, std::uint64_t seed, std::size_t max_cells) {
  Rng rng(seed);
  const LatticePolygon support = trigonal_triangle(n);
  std::vector<LatticePoint> rim;
  for (const auto& q : support.lattice_points())
    if (!support.strictly_contains(q)) rim.push_back(q);
  // A sum of tents max(0, l) over non-crossing chords is convex and bends exactly along the chords.
  std::vector<LatticeSegment> chords;
  const long wanted = uniform(rng, 1, static_cast<long>(max_cells) - 1);
  for (int tries = 0; static_cast<long>(chords.size()) < wanted && tries < 200; ++tries) {
    const LatticePoint a = rim[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rim.size()) - 1))];
    std::vector<LatticePoint> ends;
    for (const auto& b : rim) {
      bool along = false;
      for (const auto& e : support.edges())
        if (on_segment(a, e) && on_segment(b, e)) along = true;
      if (!along && (uniform(rng, 0, 2) > 0 || b.y == a.y)) ends.push_back(b);
    }
    std::vector<LatticePoint> flat;
    for (const auto& b : ends)
      if (b.y == a.y) flat.push_back(b);
    const auto& pool = (!flat.empty() && uniform(rng, 0, 1) == 0) ? flat : ends;
    if (pool.empty()) continue;
    const LatticeSegment c{a, pool[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(pool.size()) - 1))]};
    if (std::any_of(chords.begin(), chords.end(), [&](const LatticeSegment& o) { return o == c || crosses(o, c); })) continue;
    chords.push_back(c);
  }
  ConvexSubdivision out;
  out.cells = {support};
  for (const auto& c : chords) split_along(out.cells, c);
  for (const auto& q : support.lattice_points()) {
    long value = 0;
    for (const auto& c : chords) {
      const long dx = c.b.x - c.a.x, dy = c.b.y - c.a.y, g = std::gcd(std::abs(dx), std::abs(dy));
      const long l = (dx * (q.y - c.a.y) - dy * (q.x - c.a.x)) / g;
      value += std::max(0L, l);
    }
    out.lifting.emplace(q, Rational(value));
  }
  if (!certify_convexity(Subdivision{support, out.cells}, out.lifting).convex)
    throw internal_error("GenerationFailed", "tent lifting failed to certify", {{"seed", std::to_string(seed)}});
  return out;
}

GeneratedPatchwork generate_patchwork(long n, std::uint64_t seed, const GeneratorOptions& options) {
  if (n < 1 || n > 4) throw validation_error("GenerationFailed", "degree must lie in 1..4", {{"n", std::to_string(n)}});
  const std::uint64_t base = seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n);
  for (int retry = 0; retry < options.max_retries; ++retry) {
    const std::uint64_t s = base + static_cast<std::uint64_t>(retry) * 7919;
    GeneratedPatchwork out;
    std::vector<LatticePolygon> cells;
    if (options.convex) {
      ConvexSubdivision cs = random_convex_subdivision(n, s, options.max_cells);
      cells = std::move(cs.cells);
      out.lifting = std::move(cs.lifting);
    } else {
      cells = random_subdivision(n, s, options.max_cells);
    }
    Rng rng(s ^ 0xC0FFEEULL);
    CoefficientMap coefficients;
    for (const auto& q : trigonal_triangle(n).lattice_points())
      coefficients.emplace(q, q == LatticePoint{0, 3} ? Rational(1) : random_coefficient(rng));
    try {
      const Patchwork raw = Patchwork::from_coefficients(n, cells, coefficients);
      out.patchwork = perturb(raw, s).patchwork;
      // Reject configurations outside the supported group profiles or with degenerate sites.
      const ScanOrder order = compute_scan_order(out.patchwork.subdivision());
      patchwork_sign_array(out.patchwork, order);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Internal) throw;
      continue;
    }
    out.retries = retry;
    return out;
  }
  throw validation_error("GenerationFailed", "retries exhausted", {{"n", std::to_string(n)}, {"seed", std::to_string(seed)}});
}

RandomCell random_cell(std::uint64_t seed, long max_doubled_area) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    std::vector<LatticePoint> pts;
    const long count = uniform(rng, 3, 5);
    for (long i = 0; i < count; ++i) pts.push_back({uniform(rng, 0, 4), uniform(rng, 0, 3)});
    const LatticePolygon poly = LatticePolygon::hull_of(pts);
    if (poly.vertices().size() < 3 || poly.doubled_area() == 0 || poly.doubled_area() > max_doubled_area) continue;
    std::vector<std::pair<LatticePoint, Rational>> terms;
    for (const auto& q : poly.lattice_points()) terms.emplace_back(q, random_coefficient(rng));
    BivarPoly c = curve_from_points(terms);
    if (!check_cell_condition1(c, poly, "cell").ok()) continue;
    return {poly, std::move(c)};
  }
  throw validation_error("GenerationFailed", "no nondegenerate cell found", {{"seed", std::to_string(seed)}});
}

}  // namespace trigpatch
