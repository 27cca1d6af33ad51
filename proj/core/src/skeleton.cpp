#include "trigpatch/skeleton.hpp"

#include <algorithm>

#include "trigpatch/error.hpp"
#include "trigpatch/roots.hpp"

namespace trigpatch {

std::string to_string(EventKind k) {
  switch (k) {
    case EventKind::ZeroPre: return "zero";
    case EventKind::PolePre: return "pole";
    case EventKind::OnePre: return "one";
    case EventKind::Mark0: return "mark0";
    case EventKind::MarkInf: return "markinf";
  }
  return "?";
}

std::string to_string(Interval i) {
  switch (i) {
    case Interval::InfZero: return "]inf,0[";
    case Interval::ZeroOne: return "]0,1[";
    case Interval::OneInf: return "]1,inf[";
  }
  return "?";
}

EventKind event_kind_from_string(const std::string& s) {
  for (auto k : {EventKind::ZeroPre, EventKind::PolePre, EventKind::OnePre, EventKind::Mark0, EventKind::MarkInf})
    if (to_string(k) == s) return k;
  throw validation_error("ParseError", "unknown event kind '" + s + "'");
}

Interval interval_from_string(const std::string& s) {
  for (auto i : {Interval::InfZero, Interval::ZeroOne, Interval::OneInf})
    if (to_string(i) == s) return i;
  throw validation_error("ParseError", "unknown interval '" + s + "'");
}

std::optional<LocalEvent> BoundaryEvent::effective() const {
  if (is_mark()) return at_mark;
  return LocalEvent{kind, order};
}

std::optional<std::size_t> GraphSkeleton::find_mark(EventKind mark) const {
  for (std::size_t k = 0; k < events.size(); ++k)
    if (events[k].kind == mark) return k;
  return std::nullopt;
}

long GraphSkeleton::total_order(EventKind kind) const {
  long t = 0;
  for (const auto& e : events) {
    const auto le = e.effective();
    if (le && le->kind == kind) t += le->order;
  }
  return t;
}

std::optional<Interval> cross_event(Interval before, EventKind kind, int order) {
  Interval a{}, b{};
  switch (kind) {
    case EventKind::ZeroPre: a = Interval::InfZero, b = Interval::ZeroOne; break;
    case EventKind::PolePre: a = Interval::InfZero, b = Interval::OneInf; break;
    case EventKind::OnePre: a = Interval::ZeroOne, b = Interval::OneInf; break;
    default: return before;
  }
  if (before != a && before != b) return std::nullopt;
  if (order % 2 == 0) return before;
  return before == a ? b : a;
}

namespace {

struct Breakpoint {
  IsolatingInterval where;
  EventKind kind;
  int order;
};

Interval classify(const Rational& r, const Rational& s) {
  const Rational f = r / s;
  if (f.sign() < 0) return Interval::InfZero;
  if (f < Rational(1)) return Interval::ZeroOne;
  return Interval::OneInf;
}

std::optional<LocalEvent> local_at(int vr, int vs, int vrs) {
  if (vr > 0) return LocalEvent{EventKind::ZeroPre, vr};
  if (vs > 0) return LocalEvent{EventKind::PolePre, vs};
  if (vrs > 0) return LocalEvent{EventKind::OnePre, vrs};
  return std::nullopt;
}

// Skeleton of the map R/S (coprime, homogeneous of degree `degree`), with arc signs
// read from the two sign polynomials.
GraphSkeleton skeleton_of_map(const Poly1& R, const Poly1& S, long degree, const Poly1& d_sign, const Poly1& q_sign) {
  const Poly1 one = R - S;
  std::vector<Breakpoint> pts;
  for (auto [poly, kind] : {std::pair{&R, EventKind::ZeroPre}, std::pair{&S, EventKind::PolePre},
                            std::pair{&one, EventKind::OnePre}})
    for (auto& r : isolate_nonzero_real_roots(*poly)) {
      const int m = r.multiplicity;
      pts.push_back({std::move(r), kind, m});
    }
  std::sort(pts.begin(), pts.end(), [](const Breakpoint& a, const Breakpoint& b) { return compare_roots(a.where, b.where) < 0; });
  std::vector<Breakpoint> neg, pos;
  for (auto& b : pts) (compare_root_with(b.where, Rational(0)) < 0 ? neg : pos).push_back(std::move(b));

  Rational bound(1);
  for (const Poly1* p : {&R, &S, &one})
    if (p->degree() > 0) bound = std::max(bound, root_bound(*p));
  bound += Rational(1);

  GraphSkeleton g;
  auto val = [](const Poly1& p) { return p.valuation(); };
  auto inf = [&](const Poly1& p) { return static_cast<int>(degree - p.degree()); };
  g.events.push_back({EventKind::Mark0, 0, local_at(val(R), val(S), val(one))});
  for (const auto& b : pos) g.events.push_back({b.kind, b.order, std::nullopt});
  g.events.push_back({EventKind::MarkInf, 0, local_at(inf(R), inf(S), inf(one))});
  for (const auto& b : neg) g.events.push_back({b.kind, b.order, std::nullopt});

  const IsolatingInterval zero{Rational(0), Rational(0), Poly1::x(), Poly1::x(), 1};
  auto sample_between = [&](const IsolatingInterval* lo, const IsolatingInterval* hi, const Rational& outer) {
    if (lo && hi) return rational_between(*lo, *hi);
    if (lo) return outer;
    return outer;
  };
  auto arc_at = [&](Rational x) {
    // Nudge off accidental zeros of the sign polynomials.
    while (d_sign.sign_at(x) == 0 || q_sign.sign_at(x) == 0 || S.sign_at(x) == 0) x = x * Rational(1001, 1000);
    return BoundaryArc{classify(R.eval(x), S.eval(x)), SignPair{d_sign.sign_at(x), q_sign.sign_at(x)}};
  };
  // Positive side: 0 = p_0 < p_1 < ... < +inf.
  std::vector<const IsolatingInterval*> chain{&zero};
  for (const auto& b : pos) chain.push_back(&b.where);
  for (std::size_t k = 0; k < chain.size(); ++k) {
    const Rational x = k + 1 < chain.size() ? sample_between(chain[k], chain[k + 1], bound) : bound;
    g.arcs.push_back(arc_at(x));
  }
  // Negative side: -inf < n_1 < ... < 0.
  std::vector<const IsolatingInterval*> nchain;
  for (const auto& b : neg) nchain.push_back(&b.where);
  nchain.push_back(&zero);
  for (std::size_t k = 0; k < nchain.size(); ++k) {
    const Rational x = k == 0 ? -bound : sample_between(nchain[k - 1], nchain[k], -bound);
    g.arcs.push_back(arc_at(x));
  }

  auto real_total = [&](EventKind kind) { return g.total_order(kind); };
  auto interior = [&](EventKind kind) {
    const long rest = degree - real_total(kind);
    if (rest < 0 || rest % 2 != 0)
      throw internal_error("OddInteriorCount", "non-real preimages do not pair up", {{"kind", to_string(kind)}});
    return rest / 2;
  };
  g.interior_zero = interior(EventKind::ZeroPre);
  g.interior_pole = interior(EventKind::PolePre);
  g.interior_one = interior(EventKind::OnePre);
  return g;
}

// Reduces num/den to lowest terms and returns the homogeneous degree of the reduced map.
struct ReducedMap {
  Poly1 R;
  Poly1 S;
  long degree;
};

ReducedMap reduce(const Poly1& num, const Poly1& den, long form_degree) {
  const Poly1 g = gcd(num, den);
  ReducedMap m{exact_quotient(num, g), exact_quotient(den, g), 0};
  const long z = std::min(form_degree - num.degree(), form_degree - den.degree());
  m.degree = form_degree - g.degree() - z;
  return m;
}

// Row j of a curve inside the trigonal triangle has degree at most (3 - j) n.
void require_degrees(const BivarPoly& c, long n, int top) {
  for (int j = 0; j <= top; ++j) {
    const long allowed = static_cast<long>(3 - j) * n;
    if (c.row(j).degree() > allowed)
      throw validation_error("DegreeTooHigh", "coefficient degree exceeds the bidegree",
                             {{"row", std::to_string(j)}, {"n", std::to_string(n)}});
  }
}

}  // namespace

GraphSkeleton skeleton_of_trigonal(const BivarPoly& c, long n) {
  const PQDTriple t = pqd(c);
  require_degrees(c, n, 3);
  if (t.Q.is_zero() || t.P.is_zero())
    throw validation_error("IdenticallyDegenerate", "the trigonal map is constant", {{"curve", c.str()}});
  const Poly1 num = Rational(-4) * (t.P * t.P * t.P);
  const Poly1 den = Rational(27) * (t.Q * t.Q);
  const ReducedMap m = reduce(num, den, 6 * n);
  if (m.R.degree() <= 0 && m.S.degree() <= 0 && m.degree == 0)
    throw validation_error("IdenticallyDegenerate", "the trigonal map is constant", {{"curve", c.str()}});
  return skeleton_of_map(m.R, m.S, m.degree, t.D, t.Q);
}

GraphSkeleton skeleton_of_bidegree2(const BivarPoly& c, long n) {
  if (c.degree_y() != 2) throw validation_error("DegenerateConic", "expected degree 2 in Y", {{"curve", c.str()}});
  require_degrees(c, n, 2);
  const Poly1 a1 = c.row(2), a2 = c.row(1), a3 = c.row(0);
  const Poly1 delta = a2 * a2 - Rational(4) * (a1 * a3);
  const Poly1 a1_4 = a1.pow(4);
  const Poly1 den = delta - a1_4;
  if (den.is_zero()) throw validation_error("DegenerateConic", "the map has no finite values", {{"curve", c.str()}});
  const ReducedMap m = reduce(-a1_4, den, 4 * n);
  if (m.degree == 0) throw validation_error("DegenerateConic", "the map is constant", {{"curve", c.str()}});
  return skeleton_of_map(m.R, m.S, m.degree, delta, a1);
}

SkeletonReport validate_boundary(const GraphSkeleton& g, bool check_marks) {
  SkeletonReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  const std::size_t m = g.events.size();
  if (g.arcs.size() != m) {
    bad("arc count differs from event count");
    return rep;
  }
  int marks0 = 0, marksinf = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const auto& e = g.events[k];
    if (e.kind == EventKind::Mark0) ++marks0;
    if (e.kind == EventKind::MarkInf) ++marksinf;
    if (!e.is_mark() && e.order <= 0) bad("event " + std::to_string(k) + " has nonpositive order");
    if (e.is_mark() && !check_marks) continue;
    const BoundaryArc& before = g.arcs[(k + m - 1) % m];
    const BoundaryArc& after = g.arcs[k];
    const auto le = e.effective();
    const auto next = le ? cross_event(before.interval, le->kind, le->order) : std::optional<Interval>(before.interval);
    if (!next || *next != after.interval)
      bad("interval inconsistency at event " + std::to_string(k) + " (" + to_string(e.kind) + ")");
    if (before.signs && after.signs && !e.is_mark() && le) {
      const bool flipped = before.signs->q != after.signs->q;
      if (le->kind == EventKind::PolePre && le->order % 2 == 0) {
        const bool expect = (le->order / 2) % 2 == 1;
        if (flipped != expect) bad("pole sign rule violated at event " + std::to_string(k));
      } else if (le->kind != EventKind::PolePre && flipped) {
        bad("Q sign changes across a non-pole event " + std::to_string(k));
      }
    }
  }
  if (marks0 > 1 || marksinf > 1 || marks0 != marksinf) bad("marks must appear once each");
  for (std::size_t k = 0; k < m; ++k) {
    const auto& a = g.arcs[k];
    if (!a.signs) {
      bad("arc " + std::to_string(k) + " lacks a sign pair");
      continue;
    }
    const bool plus = a.interval == Interval::OneInf;
    if ((a.signs->d > 0) != plus) bad("D sign does not match the interval on arc " + std::to_string(k));
  }
  return rep;
}

SkeletonReport validate_skeleton(const GraphSkeleton& g) {
  SkeletonReport rep = validate_boundary(g);
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  const long z = g.total_order(EventKind::ZeroPre) + 2 * g.interior_zero;
  const long p = g.total_order(EventKind::PolePre) + 2 * g.interior_pole;
  const long o = g.total_order(EventKind::OnePre) + 2 * g.interior_one;
  if (z != p || p != o)
    bad("degree balance fails: zeros " + std::to_string(z) + ", poles " + std::to_string(p) + ", ones " + std::to_string(o));
  if (g.interior_zero < 0 || g.interior_pole < 0 || g.interior_one < 0) bad("negative interior count");
  return rep;
}

long skeleton_degree(const GraphSkeleton& g) {
  const long z = g.total_order(EventKind::ZeroPre) + 2 * g.interior_zero;
  const long p = g.total_order(EventKind::PolePre) + 2 * g.interior_pole;
  const long o = g.total_order(EventKind::OnePre) + 2 * g.interior_one;
  if (z != p || p != o) throw validation_error("Unbalanced", "preimage totals differ");
  return o;
}

SkeletonReport check_trigonal_criteria(const GraphSkeleton& g, long n) {
  SkeletonReport rep = validate_skeleton(g);
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };
  const long z = g.total_order(EventKind::ZeroPre) + 2 * g.interior_zero;
  const long o = g.total_order(EventKind::OnePre) + 2 * g.interior_one;
  if (o != 6 * n || z != 6 * n) bad("degree is " + std::to_string(o) + ", expected " + std::to_string(6 * n));
  for (std::size_t k = 0; k < g.events.size(); ++k) {
    const auto le = g.events[k].effective();
    if (!le) continue;
    if (le->kind == EventKind::ZeroPre && le->order % 3 != 0)
      bad("preimage of 0 of order " + std::to_string(le->order) + " at event " + std::to_string(k));
    if (le->kind == EventKind::PolePre && le->order % 2 != 0)
      bad("preimage of infinity of order " + std::to_string(le->order) + " at event " + std::to_string(k));
    if (le->kind == EventKind::OnePre && le->order != 1)
      bad("preimage of 1 of order " + std::to_string(le->order) + " at event " + std::to_string(k));
  }
  if (g.interior_zero % 3 != 0) bad("non-real preimages of 0 are not of order divisible by 3");
  if (g.interior_pole % 2 != 0) bad("non-real preimages of infinity are not of even order");
  return rep;
}

SignArray extract_sign_array(const GraphSkeleton& g) {
  const auto inf = g.find_mark(EventKind::MarkInf);
  if (!inf || !g.find_mark(EventKind::Mark0)) throw validation_error("UnmarkedSkeleton", "skeleton carries no marks");
  const std::size_t m = g.events.size();
  SignArray sa;
  const auto& first = g.arcs[*inf];
  if (!first.signs) throw validation_error("UnsignedArc", "arc after the mark at infinity has no signs");
  sa.leading = first.signs->d;
  for (std::size_t step = 1; step < m; ++step) {
    const std::size_t k = (*inf + step) % m;
    const auto le = g.events[k].effective();
    if (!le || le->kind != EventKind::OnePre) continue;
    const auto& before = g.arcs[(k + m - 1) % m];
    if (!before.signs) throw validation_error("UnsignedArc", "arc before a preimage of 1 has no signs");
    for (int r = 0; r < le->order; ++r) sa.entries.push_back(before.signs->q);
  }
  return sa;
}

}  // namespace trigpatch
