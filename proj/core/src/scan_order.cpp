#include "trigpatch/scan_order.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "trigpatch/error.hpp"
#include "trigpatch/patchwork.hpp"
#include "trigpatch/rational.hpp"

namespace trigpatch {

namespace {

// Minimal abscissa of the polygon's horizontal slice at ordinate y, if any.
std::optional<Rational> slice_left(const LatticePolygon& poly, const Rational& y) {
  std::optional<Rational> best;
  for (const auto& e : poly.edges()) {
    const Rational ya(e.a.y), yb(e.b.y);
    std::optional<Rational> x;
    if (e.a.y == e.b.y) {
      if (ya == y) x = Rational(std::min(e.a.x, e.b.x));
    } else if ((ya <= y && y <= yb) || (yb <= y && y <= ya)) {
      x = Rational(e.a.x) + Rational(e.b.x - e.a.x) * (y - ya) / Rational(e.b.y - e.a.y);
    }
    if (x && (!best || *x < *best)) best = x;
  }
  return best;
}

std::optional<Rational> left_boundary(const std::vector<const LatticePolygon*>& cells, const Rational& y) {
  std::optional<Rational> best;
  for (const auto* c : cells) {
    auto x = slice_left(*c, y);
    if (x && (!best || *x < *best)) best = x;
  }
  return best;
}

bool edge_on_left_boundary(const LatticeSegment& e, const std::vector<const LatticePolygon*>& cells) {
  if (e.is_horizontal()) return false;
  const long lo = std::min(e.a.y, e.b.y), hi = std::max(e.a.y, e.b.y);
  for (long k = lo; k < hi; ++k) {
    const Rational y = Rational(2 * k + 1, 2);
    const Rational xe = Rational(e.a.x) + Rational(e.b.x - e.a.x) * (y - Rational(e.a.y)) / Rational(e.b.y - e.a.y);
    const auto lb = left_boundary(cells, y);
    if (!lb || *lb != xe) return false;
  }
  return true;
}

std::vector<LatticeSegment> horizontal_edges(const LatticePolygon& p) {
  std::vector<LatticeSegment> h;
  for (const auto& e : p.edges())
    if (e.is_horizontal()) h.push_back(e.normalized());
  return h;
}

}  // namespace

ScanOrder compute_scan_order(const Subdivision& s) {
  ScanOrder order;
  std::vector<std::size_t> remaining(s.cells.size());
  for (std::size_t k = 0; k < remaining.size(); ++k) remaining[k] = k;
  while (!remaining.empty()) {
    std::vector<const LatticePolygon*> rem;
    for (auto k : remaining) rem.push_back(&s.cells[k]);
    using Candidate = std::tuple<long, long, std::size_t>;
    std::vector<Candidate> cand;
    for (auto k : remaining) {
      const auto& cell = s.cells[k];
      bool leftmost = false;
      for (const auto& e : cell.edges())
        if (edge_on_left_boundary(e, rem)) leftmost = true;
      if (!leftmost) continue;
      const long h = cell.max_y();
      std::vector<LatticePoint> top;
      for (const auto& v : cell.vertices())
        if (v.y == h) top.push_back(v);
      if (top.size() != 1) continue;
      const auto lb = left_boundary(rem, Rational(top[0].y));
      if (lb && *lb == Rational(top[0].x)) cand.emplace_back(top[0].y, top[0].x, k);
    }
    if (cand.empty())
      throw validation_error("NoCandidate", "no cell offers a top vertex on the left boundary",
                             {{"remaining", std::to_string(remaining.size())}});
    std::sort(cand.begin(), cand.end());
    if (cand.size() > 1 && std::get<0>(cand[0]) == std::get<0>(cand[1]))
      order.ties.push_back("cells " + std::to_string(std::get<2>(cand[0])) + " and " +
                           std::to_string(std::get<2>(cand[1])) + " tie at ordinate " +
                           std::to_string(std::get<0>(cand[0])));
    ScanGroup g;
    g.distinguished_vertex = {std::get<1>(cand[0]), std::get<0>(cand[0])};
    g.cells.push_back(std::get<2>(cand[0]));
    while (true) {
      const std::size_t cur = g.cells.back();
      const std::size_t prev = g.cells.size() > 1 ? g.cells[g.cells.size() - 2] : cur;
      std::optional<std::size_t> next;
      for (const auto& he : horizontal_edges(s.cells[cur]))
        for (auto j : remaining) {
          if (j == cur || j == prev) continue;
          if (s.cells[j].has_edge(he)) next = j;
        }
      if (!next) break;
      if (std::find(g.cells.begin(), g.cells.end(), *next) != g.cells.end())
        throw validation_error("NonTerminatingChain", "horizontal chain revisits a cell",
                               {{"cell", std::to_string(*next)}});
      g.cells.push_back(*next);
    }
    std::erase_if(remaining, [&](std::size_t k) { return std::find(g.cells.begin(), g.cells.end(), k) != g.cells.end(); });
    if (group_height(g, s) >= 2) order.groups.push_back(std::move(g));
    else order.discarded.insert(order.discarded.end(), g.cells.begin(), g.cells.end());
  }
  return order;
}

long group_height(const ScanGroup& g, const Subdivision& s) {
  long h = 0;
  for (auto k : g.cells) h = std::max(h, height(s.cells[k]));
  return h;
}

std::string to_string(GroupProfile p) {
  switch (p) {
    case GroupProfile::H3: return "H3";
    case GroupProfile::H3_H1: return "H3+H1";
    case GroupProfile::H3_H2: return "H3+H2";
    case GroupProfile::H3_H2_H1: return "H3+H2+H1";
    case GroupProfile::H2: return "H2";
    case GroupProfile::H2_H1: return "H2+H1";
  }
  return "?";
}

GroupPolynomials classify_group(const ScanGroup& g, const Patchwork& p) {
  const auto& cells = p.subdivision().cells;
  GroupPolynomials out;
  std::vector<long> heights;
  for (auto k : g.cells) heights.push_back(height(cells[k]));
  auto count = [&](long h) { return std::count(heights.begin(), heights.end(), h); };
  const auto n3 = count(3), n2 = count(2), n1 = count(1);
  if (n3 > 1 || n2 > 1 || n1 > 1 || n3 + n2 == 0 || heights.size() != static_cast<std::size_t>(n3 + n2 + n1))
    throw validation_error("UnsupportedProfile", "scan group outside the supported profiles",
                           {{"cells", std::to_string(g.cells.size())}});
  for (auto k : g.cells) {
    const long h = height(cells[k]);
    if (h == 2) out.height2_cell = k;
    if (h == 1) out.height1_cell = k;
    if (h == (n3 ? 3 : 2)) out.top_cell = k;
  }
  out.top_cell_min_y = cells[out.top_cell].min_y();
  if (n3) {
    out.profile = n2 ? (n1 ? GroupProfile::H3_H2_H1 : GroupProfile::H3_H2) : (n1 ? GroupProfile::H3_H1 : GroupProfile::H3);
  } else {
    out.profile = n1 ? GroupProfile::H2_H1 : GroupProfile::H2;
  }
  const int top = static_cast<int>(n3 ? 3 : 2);
  out.rows.assign(static_cast<std::size_t>(top) + 1, Poly1());
  for (int j = 0; j <= top; ++j)
    for (auto k : g.cells)
      if (cells[k].min_y() <= j && j <= cells[k].max_y()) {
        out.rows[static_cast<std::size_t>(j)] = p.cells()[k].curve.row(j);
        break;
      }
  return out;
}

}  // namespace trigpatch
