#include "trigpatch/sign_array.hpp"

#include <algorithm>

#include "trigpatch/error.hpp"
#include "trigpatch/patchwork.hpp"
#include "trigpatch/scan_order.hpp"

namespace trigpatch {

PQDTriple pqd_from_coefficients(const Poly1& a1, const Poly1& a2, const Poly1& a3) {
  const Poly1 P = a2 - Rational(1, 3) * (a1 * a1);
  const Poly1 Q = a3 - Rational(1, 3) * (a1 * a2) + Rational(2, 27) * (a1 * a1 * a1);
  const Poly1 D = Rational(-4) * (P * P * P) - Rational(27) * (Q * Q);
  return {P, Q, D};
}

PQDTriple pqd(const BivarPoly& c) {
  if (c.degree_y() != 3 || c.row(3) != Poly1::constant(Rational(1)))
    throw validation_error("NotMonicCubic", "expected a monic cubic in Y", {{"curve", c.str()}});
  return pqd_from_coefficients(c.row(2), c.row(1), c.row(0));
}

std::string SignArray::str() const {
  auto ch = [](int s) { return s > 0 ? '+' : '-'; };
  std::string s = "[";
  s += ch(leading);
  if (!entries.empty()) s += ',';
  for (int e : entries) s += ch(e);
  return s + "]";
}

SignArray SignArray::parse(std::string_view text) {
  auto bad = [&] { return validation_error("ParseError", "malformed sign array '" + std::string(text) + "'"); };
  if (text.size() < 3 || text.front() != '[' || text.back() != ']') throw bad();
  const std::string_view body = text.substr(1, text.size() - 2);
  auto sign_of = [&](char c) {
    if (c == '+') return 1;
    if (c == '-') return -1;
    throw bad();
  };
  SignArray sa;
  sa.leading = sign_of(body[0]);
  if (body.size() == 1) return sa;
  if (body[1] != ',') throw bad();
  for (char c : body.substr(2)) sa.entries.push_back(sign_of(c));
  return sa;
}

SignArray curve_sign_array(const BivarPoly& c) {
  const PQDTriple t = pqd(c);
  if (t.D.is_zero()) throw validation_error("NotLNonsingular", "discriminant vanishes identically");
  SignArray sa;
  sa.leading = t.D.sign_at_minus_infinity();
  for (const auto& r : isolate_real_roots(t.D)) {
    if (r.multiplicity > 1)
      throw validation_error("NotLNonsingular", "discriminant has a repeated real root", {{"near", std::to_string(r.approx())}});
    const int s = sign_at_root_or_zero(t.Q, r);
    if (s == 0) throw validation_error("TripleRootFiber", "Q vanishes at a root of D", {{"near", std::to_string(r.approx())}});
    sa.entries.push_back(s);
  }
  return sa;
}

BivarPoly negate_y(const BivarPoly& c) {
  std::vector<Poly1> rows = c.rows();
  const int d = c.degree_y();
  for (int j = 0; j <= d; ++j)
    if ((j + d) % 2 == 1) rows[static_cast<std::size_t>(j)] = -rows[static_cast<std::size_t>(j)];
  return BivarPoly(std::move(rows));
}

namespace {

Error degenerate(const std::string& what, const IsolatingInterval& r) {
  return validation_error("DegenerateSite", what, {{"near", std::to_string(r.approx())}});
}

}  // namespace

GroupSignLists group_sign_lists(const ScanGroup& g, const Patchwork& p) {
  const GroupPolynomials gp = classify_group(g, p);
  const auto& cells = p.cells();
  std::vector<Site> sites;
  for (auto k : g.cells) {
    const BivarPoly red = cells[k].curve.torus_reduced();
    if (red.degree_y() < 2) continue;
    for (auto& r : isolate_nonzero_real_roots(discriminant_y(red))) {
      if (r.multiplicity > 1) throw degenerate("repeated discriminant root", r);
      sites.push_back({std::move(r), SiteKind::Discriminant, 0, {}});
    }
  }
  // Horizontal edge at height 1 between the member above and the height-1 member.
  if (gp.height1_cell) {
    std::optional<std::size_t> upper;
    for (auto k : g.cells)
      if (k != *gp.height1_cell && p.subdivision().cells[k].min_y() == 1) upper = k;
    if (upper) {
      const Poly1 a1 = cells[*upper].curve.row(2);
      const Poly1 a2 = cells[*upper].curve.row(1);
      const Poly1 a3 = cells[*gp.height1_cell].curve.row(0);
      for (auto& r : isolate_nonzero_real_roots(a2)) {
        const int s1 = sign_at_root_or_zero(a1, r), s3 = sign_at_root_or_zero(a3, r);
        if (s1 == 0 || s3 == 0) throw degenerate("neighbouring row vanishes at a root of the shared row", r);
        if (s1 * s3 > 0) sites.push_back({std::move(r), SiteKind::DoubleOne, 0, {}});
      }
    }
  }
  // Horizontal edge at height 2 between the cubic member and the height-2 member.
  if (gp.height2_cell && (gp.profile == GroupProfile::H3_H2 || gp.profile == GroupProfile::H3_H2_H1)) {
    const Poly1 a1 = cells[*gp.height2_cell].curve.row(2);
    const Poly1 a2 = cells[*gp.height2_cell].curve.row(1);
    for (auto& r : isolate_nonzero_real_roots(a1)) {
      const int s2 = sign_at_root_or_zero(a2, r);
      if (s2 == 0) throw degenerate("row below vanishes at a root of the shared row", r);
      if (s2 > 0) sites.push_back({std::move(r), SiteKind::A1Root, 0, {}});
    }
  }
  std::sort(sites.begin(), sites.end(), [](const Site& a, const Site& b) { return compare_roots(a.where, b.where) < 0; });
  for (std::size_t k = 1; k < sites.size(); ++k)
    if (compare_roots(sites[k - 1].where, sites[k].where) == 0) throw degenerate("two sites coincide", sites[k].where);

  const bool has_height2 = gp.height2_cell.has_value();
  GroupSignLists out;
  if (!has_height2) {
    const PQDTriple t = pqd(cells[gp.top_cell].curve);
    for (auto& s : sites) {
      s.side = compare_root_with(s.where, Rational(0));
      const int q = sign_at_root_or_zero(t.Q, s.where);
      if (q == 0) throw degenerate("Q vanishes at a site", s.where);
      s.signs = s.kind == SiteKind::Discriminant ? std::vector<int>{q} : std::vector<int>{q, q};
    }
  } else {
    const Poly1 a1 = cells[*gp.height2_cell].curve.row(2);
    for (auto& s : sites) {
      s.side = compare_root_with(s.where, Rational(0));
      const int sigma = a1.sign_near_zero(s.side);
      const int between = count_roots_between_zero_and(a1, s.where);
      const int prime = between % 2 == 0 ? sigma : -sigma;
      const int second = -prime;
      switch (s.kind) {
        case SiteKind::Discriminant: s.signs = {prime}; break;
        case SiteKind::DoubleOne: s.signs = {prime, prime}; break;
        case SiteKind::A1Root: s.signs = s.side > 0 ? std::vector<int>{second, prime} : std::vector<int>{prime, second}; break;
      }
    }
  }
  for (const auto& s : sites) {
    auto& list = s.side < 0 ? out.negative : out.positive;
    list.insert(list.end(), s.signs.begin(), s.signs.end());
  }
  out.sites = std::move(sites);
  return out;
}

int leading_fiber_sign(const Patchwork& p) {
  const LeadingFiberCubic c = leading_fiber_cubic(p);
  std::vector<int> breaks;
  for (int y = 0; y <= 3; ++y) {
    const LatticePoint q{(3 - y) * p.degree(), y};
    for (const auto& cell : p.subdivision().cells)
      if (cell.has_vertex(q)) {
        breaks.push_back(y);
        break;
      }
  }
  int real = 0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    std::vector<Rational> seg;
    for (int y = breaks[k]; y <= breaks[k + 1]; ++y) seg.push_back(c.b[static_cast<std::size_t>(y)]);
    const Poly1 s(std::move(seg));
    if (s.is_zero() || s.coefficient(0).is_zero() || gcd(s, s.derivative()).degree() > 0)
      throw validation_error("DegenerateLeadingFiber", "fiber at infinity is not transverse",
                             {{"segment_start", std::to_string(breaks[k])}});
    real += static_cast<int>(isolate_real_roots(s).size());
  }
  return ((3 - real) / 2) % 2 == 0 ? 1 : -1;
}

SignArray patchwork_sign_array(const Patchwork& p, const ScanOrder& order) {
  SignArray sa;
  sa.leading = leading_fiber_sign(p);
  std::vector<GroupSignLists> lists;
  for (const auto& g : order.groups) lists.push_back(group_sign_lists(g, p));
  for (auto it = lists.rbegin(); it != lists.rend(); ++it)
    sa.entries.insert(sa.entries.end(), it->negative.begin(), it->negative.end());
  for (const auto& l : lists) sa.entries.insert(sa.entries.end(), l.positive.begin(), l.positive.end());
  return sa;
}

LScheme sign_array_to_lscheme(const SignArray& sa) {
  LScheme l;
  int d = sa.leading;
  l.branches.push_back(d > 0 ? 3 : 1);
  for (int e : sa.entries) {
    d = -d;
    l.branches.push_back(d > 0 ? 3 : 1);
    l.tangencies.push_back(e);
  }
  return l;
}

}  // namespace trigpatch
