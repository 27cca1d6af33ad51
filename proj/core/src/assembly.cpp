#include "trigpatch/assembly.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "trigpatch/error.hpp"
#include "trigpatch/patchwork.hpp"

namespace trigpatch {

std::string to_string(SurgeryKind k) {
  switch (k) {
    case SurgeryKind::DoubleOneSmoothing: return "DoubleOneSmoothing";
    case SurgeryKind::A1RootPerturbation: return "A1RootPerturbation";
    case SurgeryKind::EndNormalization: return "EndNormalization";
  }
  return "?";
}

std::string to_string(GluingKind k) {
  switch (k) {
    case GluingKind::Transverse: return "Transverse";
    case GluingKind::ZeroJunction: return "ZeroJunction";
    case GluingKind::PoleJunction: return "PoleJunction";
    case GluingKind::Height2Junction: return "Height2Junction";
  }
  return "?";
}

namespace {

BoundaryArc arc(Interval i, int q) { return {i, SignPair{i == Interval::OneInf ? 1 : -1, q}}; }
BoundaryEvent event(EventKind k, int order) { return {k, order, std::nullopt}; }

std::size_t mark_index(const GraphSkeleton& g, EventKind mark) {
  const auto k = g.find_mark(mark);
  if (!k) throw internal_error("UnmarkedSkeleton", "skeleton carries no " + to_string(mark));
  return *k;
}

// Index of the ordinal-th event of the given kind and order in one half.
std::optional<std::size_t> locate(const GraphSkeleton& g, int side, std::size_t ordinal, EventKind kind, int order) {
  const std::size_t inf = mark_index(g, EventKind::MarkInf);
  const std::size_t first = side > 0 ? 1 : inf + 1;
  const std::size_t last = side > 0 ? inf : g.events.size();
  std::size_t seen = 0;
  for (std::size_t k = first; k < last; ++k) {
    const auto& e = g.events[k];
    if (e.kind == kind && e.order == order && seen++ == ordinal) return k;
  }
  return std::nullopt;
}

// Replaces events[k] by a word; `between` holds the arcs joining consecutive new events.
GraphSkeleton splice(const GraphSkeleton& g, std::size_t k, const std::vector<BoundaryEvent>& word,
                     const std::vector<BoundaryArc>& between) {
  GraphSkeleton out = g;
  out.events.erase(out.events.begin() + static_cast<long>(k));
  out.events.insert(out.events.begin() + static_cast<long>(k), word.begin(), word.end());
  if (word.empty()) {
    if (g.arcs[k - 1] != g.arcs[k])
      throw internal_error("AssemblyInvariantViolated", "removing an event would join unequal arcs",
                           {{"event", std::to_string(k)}});
    out.arcs.erase(out.arcs.begin() + static_cast<long>(k));
  } else {
    out.arcs.insert(out.arcs.begin() + static_cast<long>(k), between.begin(), between.end());
  }
  return out;
}

Error site_not_found(const SurgerySite& s) {
  return internal_error("SiteNotFound", "no boundary event matches the surgery site",
                        {{"kind", to_string(s.kind)}, {"side", std::to_string(s.side)}, {"ordinal", std::to_string(s.ordinal)}});
}

std::string where(const SurgerySite& s) {
  return s.location ? std::to_string(s.location->approx()) : std::string("conjugate pair");
}

std::vector<IsolatingInterval> side_roots(const std::vector<IsolatingInterval>& roots, int side) {
  std::vector<IsolatingInterval> out;
  for (const auto& r : roots)
    if (compare_root_with(r, Rational(0)) == side) out.push_back(r);
  return out;
}

}  // namespace

GraphSkeleton normalize_height2(const GraphSkeleton& g) {
  GraphSkeleton out;
  auto recolor = [](BoundaryArc a) {
    if (a.signs) a.interval = a.signs->d > 0 ? Interval::OneInf : Interval::ZeroOne;
    return a;
  };
  auto remap = [](std::optional<LocalEvent> e) -> std::optional<LocalEvent> {
    if (!e || e->kind == EventKind::PolePre) return std::nullopt;
    if (e->kind == EventKind::ZeroPre) return LocalEvent{EventKind::PolePre, e->order};
    return e;
  };
  const std::size_t m = g.events.size();
  for (std::size_t k = 0; k < m; ++k) {
    BoundaryEvent e = g.events[k];
    if (e.is_mark()) {
      e.at_mark = remap(e.at_mark);
    } else if (e.kind == EventKind::PolePre) {
      continue;  // f = 1 + c u with u = 1 is not special in the trigonal limit
    } else if (e.kind == EventKind::ZeroPre) {
      e.kind = EventKind::PolePre;
    }
    out.events.push_back(e);
    out.arcs.push_back(recolor(g.arcs[k]));
  }
  out.interior_one = g.interior_one;
  out.interior_pole = g.interior_zero;
  out.interior_zero = 0;
  return out;
}

GraphSkeleton perturb_a1_root(const GraphSkeleton& g, const SurgerySite& site) {
  if (site.kind != SurgeryKind::A1RootPerturbation) throw site_not_found(site);
  if (!site.location) {
    GraphSkeleton out = g;
    out.interior_one += 2;
    return out;
  }
  const auto k = locate(g, site.side, site.ordinal, EventKind::PolePre, 4);
  if (!k) throw site_not_found(site);
  if (site.decision < 0) {
    GraphSkeleton out = splice(g, *k, {event(EventKind::PolePre, 2)}, {});
    out.interior_one += 1;
    return out;
  }
  const int s = g.arcs[*k - 1].signs ? g.arcs[*k - 1].signs->q : 1;
  const std::vector<BoundaryEvent> word{event(EventKind::PolePre, 2), event(EventKind::OnePre, 1),
                                        event(EventKind::ZeroPre, 3), event(EventKind::PolePre, 2),
                                        event(EventKind::ZeroPre, 3), event(EventKind::OnePre, 1),
                                        event(EventKind::PolePre, 2)};
  const std::vector<BoundaryArc> between{arc(Interval::OneInf, -s), arc(Interval::ZeroOne, -s),
                                         arc(Interval::InfZero, -s), arc(Interval::InfZero, s),
                                         arc(Interval::ZeroOne, s), arc(Interval::OneInf, s)};
  return splice(g, *k, word, between);
}

GraphSkeleton smooth_double_one(const GraphSkeleton& g, const SurgerySite& site) {
  if (site.kind != SurgeryKind::DoubleOneSmoothing || !site.location) throw site_not_found(site);
  const auto k = locate(g, site.side, site.ordinal, EventKind::OnePre, 2);
  if (!k) throw site_not_found(site);
  if (site.decision < 0) {
    GraphSkeleton out = splice(g, *k, {}, {});
    out.interior_one += 1;
    return out;
  }
  const int q = g.arcs[*k - 1].signs ? g.arcs[*k - 1].signs->q : 1;
  return splice(g, *k, {event(EventKind::OnePre, 1), event(EventKind::OnePre, 1)}, {arc(Interval::ZeroOne, q)});
}

GroupSkeleton build_group_skeleton(const ScanGroup& group, const Patchwork& p, std::size_t index, bool paranoid) {
  const GroupPolynomials gp = classify_group(group, p);
  const auto& cells = p.cells();
  const long n = p.degree();
  GroupSkeleton out;
  auto note = [&](std::string action, std::string detail) { out.log.push_back({index, std::move(action), std::move(detail)}); };

  GraphSkeleton& sk = out.skeleton;
  if (!gp.height2_cell) {
    sk = skeleton_of_trigonal(cells[gp.top_cell].curve, n);
    note("trigonal", "cell " + std::to_string(gp.top_cell) + ", profile " + to_string(gp.profile));
  } else {
    sk = normalize_height2(skeleton_of_bidegree2(cells[*gp.height2_cell].curve, n));
    note("height2", "cell " + std::to_string(*gp.height2_cell) + ", profile " + to_string(gp.profile));
  }

  if (gp.profile == GroupProfile::H3_H2 || gp.profile == GroupProfile::H3_H2_H1) {
    const Poly1 a1 = cells[*gp.height2_cell].curve.row(2);
    const Poly1 a2 = cells[*gp.height2_cell].curve.row(1);
    const auto roots = isolate_nonzero_real_roots(a1);
    for (int side : {1, -1}) {
      const auto here = side_roots(roots, side);
      for (std::size_t r = here.size(); r-- > 0;) {
        const SurgerySite site{SurgeryKind::A1RootPerturbation, here[r], side, r, sign_at_root(a2, here[r])};
        sk = perturb_a1_root(sk, site);
        note(to_string(site.kind), "x ~ " + where(site) + (site.decision > 0 ? ", a2 > 0" : ", a2 < 0"));
      }
    }
    const long pairs = (count_cstar_roots(a1) - static_cast<long>(roots.size())) / 2;
    for (long r = 0; r < pairs; ++r) {
      sk = perturb_a1_root(sk, SurgerySite{SurgeryKind::A1RootPerturbation, std::nullopt, 1, 0, 1});
      note(to_string(SurgeryKind::A1RootPerturbation), "conjugate pair");
    }
  }

  if (gp.height1_cell) {
    std::optional<std::size_t> upper;
    for (auto k : group.cells)
      if (k != *gp.height1_cell && p.subdivision().cells[k].min_y() == 1) upper = k;
    if (upper) {
      const Poly1 a1 = cells[*upper].curve.row(2);
      const Poly1 a2 = cells[*upper].curve.row(1);
      const Poly1 a3 = cells[*gp.height1_cell].curve.row(0);
      const auto roots = isolate_nonzero_real_roots(a2);
      for (int side : {1, -1}) {
        const auto here = side_roots(roots, side);
        for (std::size_t r = here.size(); r-- > 0;) {
          const int decision = sign_at_root(a1, here[r]) * sign_at_root(a3, here[r]);
          const SurgerySite site{SurgeryKind::DoubleOneSmoothing, here[r], side, r, decision};
          sk = smooth_double_one(sk, site);
          note(to_string(site.kind), "x ~ " + where(site) + (decision > 0 ? ", real pair" : ", conjugate pair"));
        }
      }
    }
  }

  if (paranoid) {
    const SkeletonReport rep = validate_boundary(sk, false);
    if (!rep.ok())
      throw internal_error("AssemblyInvariantViolated", "group skeleton breaks a boundary rule",
                           {{"group", std::to_string(index)}, {"violation", rep.violations.front()}});
  }
  return out;
}

GluingCase gluing_case(const ScanGroup& left, const ScanGroup& right, const Subdivision& s) {
  const LatticePoint apex{0, 3};
  for (auto a : left.cells)
    for (const auto& e : s.cells[a].edges()) {
      if (!(e.a == apex || e.b == apex)) continue;
      for (auto b : right.cells) {
        if (!s.cells[b].has_edge(e)) continue;
        const LatticePoint o = e.a == apex ? e.b : e.a;
        GluingCase c{GluingKind::Height2Junction, e};
        if (o.y == 0) c.kind = o.x % 3 == 0 ? GluingKind::Transverse : GluingKind::ZeroJunction;
        if (o.y == 1) c.kind = o.x % 2 == 0 ? GluingKind::Transverse : GluingKind::PoleJunction;
        return c;
      }
    }
  return {GluingKind::Height2Junction, std::nullopt};
}

namespace {

struct Word {
  std::vector<BoundaryEvent> events;
  std::vector<BoundaryArc> arcs;  // one more than events
};

Word slice(const GraphSkeleton& g, std::size_t from, std::size_t to) {
  // Events strictly between the marks at `from` and `to` (to may equal the size for wrap-around).
  Word w;
  for (std::size_t k = from + 1; k < to; ++k) w.events.push_back(g.events[k]);
  for (std::size_t k = from; k < to; ++k) w.arcs.push_back(g.arcs[k]);
  return w;
}

using State = std::pair<Interval, int>;

// Shortest word of triple zeros and double poles leading from one arc state to another.
std::optional<std::vector<std::pair<BoundaryEvent, State>>> connecting_word(State from, State to) {
  std::map<State, std::pair<State, BoundaryEvent>> parent;
  std::deque<State> queue{from};
  parent.emplace(from, std::pair{from, BoundaryEvent{}});
  while (!queue.empty()) {
    const State s = queue.front();
    queue.pop_front();
    if (s == to) break;
    for (auto [kind, order] : {std::pair{EventKind::ZeroPre, 3}, std::pair{EventKind::PolePre, 2}}) {
      const auto next = cross_event(s.first, kind, order);
      if (!next) continue;
      const State t{*next, kind == EventKind::PolePre ? -s.second : s.second};
      if (parent.emplace(t, std::pair{s, event(kind, order)}).second) queue.push_back(t);
    }
  }
  if (!parent.contains(to)) return std::nullopt;
  std::vector<std::pair<BoundaryEvent, State>> word;
  for (State s = to; s != from; s = parent.at(s).first) word.push_back({parent.at(s).second, s});
  std::reverse(word.begin(), word.end());
  return word;
}

State state_of(const BoundaryArc& a) { return {a.interval, a.signs ? a.signs->q : 1}; }

Word join(Word x, const Word& y, const std::string& where) {
  const State from = state_of(x.arcs.back()), to = state_of(y.arcs.front());
  const auto word = connecting_word(from, to);
  if (!word)
    throw internal_error("SignMismatch", "discriminant signs differ across a junction",
                         {{"side", where}, {"left", to_string(from.first)}, {"right", to_string(to.first)}});
  for (const auto& [e, s] : *word) {
    x.events.push_back(e);
    x.arcs.push_back(arc(s.first, s.second));
  }
  x.arcs.pop_back();
  x.events.insert(x.events.end(), y.events.begin(), y.events.end());
  x.arcs.insert(x.arcs.end(), y.arcs.begin(), y.arcs.end());
  return x;
}

}  // namespace

GraphSkeleton glue_groups(const GraphSkeleton& left, const GraphSkeleton& right, const GluingCase& c) {
  const std::size_t l0 = mark_index(left, EventKind::Mark0), linf = mark_index(left, EventKind::MarkInf);
  const std::size_t r0 = mark_index(right, EventKind::Mark0), rinf = mark_index(right, EventKind::MarkInf);
  if (l0 != 0 || r0 != 0) throw internal_error("UnmarkedSkeleton", "skeleton must start at the mark at 0");

  if (c.kind != GluingKind::Height2Junction) {
    long zeros = 0, poles = 0;
    for (const auto& e : {left.events[linf].at_mark, right.events[r0].at_mark}) {
      if (!e) continue;
      if (e->kind == EventKind::ZeroPre) zeros += e->order;
      if (e->kind == EventKind::PolePre) poles += e->order;
    }
    if (zeros % 3 != 0 || poles % 2 != 0)
      throw internal_error("OrderMismatch", "end orders at the junction do not combine",
                           {{"case", to_string(c.kind)}, {"zeros", std::to_string(zeros)}, {"poles", std::to_string(poles)}});
  }

  const Word pos = join(slice(left, 0, linf), slice(right, 0, rinf), "positive");
  const Word neg = join(slice(right, rinf, right.events.size()), slice(left, linf, left.events.size()), "negative");

  GraphSkeleton out;
  out.events.push_back(left.events[l0]);
  out.events.insert(out.events.end(), pos.events.begin(), pos.events.end());
  out.events.push_back(right.events[rinf]);
  out.events.insert(out.events.end(), neg.events.begin(), neg.events.end());
  out.arcs = pos.arcs;
  out.arcs.insert(out.arcs.end(), neg.arcs.begin(), neg.arcs.end());
  out.interior_one = left.interior_one + right.interior_one;
  out.interior_zero = left.interior_zero + right.interior_zero;
  out.interior_pole = left.interior_pole + right.interior_pole;
  return out;
}

AssemblyResult assemble(const Patchwork& p, const AssemblyOptions& options) {
  AssemblyResult res;
  res.order = compute_scan_order(p.subdivision());
  const auto& groups = res.order.groups;
  if (groups.empty()) throw internal_error("AssemblyInvariantViolated", "scan order kept no group");

  std::vector<GroupSkeleton> built;
  for (std::size_t i = 0; i < groups.size(); ++i) built.push_back(build_group_skeleton(groups[i], p, i, options.paranoid));

  GraphSkeleton acc = built.front().skeleton;
  res.log = built.front().log;
  for (std::size_t i = 1; i < groups.size(); ++i) {
    const GluingCase c = gluing_case(groups[i - 1], groups[i], p.subdivision());
    acc = glue_groups(acc, built[i].skeleton, c);
    res.log.insert(res.log.end(), built[i].log.begin(), built[i].log.end());
    res.log.push_back({i, "glue", to_string(c.kind)});
    if (options.paranoid) {
      const SkeletonReport rep = validate_boundary(acc, false);
      if (!rep.ok())
        throw internal_error("AssemblyInvariantViolated", "gluing breaks a boundary rule",
                             {{"group", std::to_string(i)}, {"violation", rep.violations.front()}});
    }
  }

  // Interior counts of 0 and infinity follow from the number of preimages of 1.
  const long ones = acc.total_order(EventKind::OnePre) + 2 * acc.interior_one;
  acc.interior_zero = (ones - acc.total_order(EventKind::ZeroPre)) / 2;
  acc.interior_pole = (ones - acc.total_order(EventKind::PolePre)) / 2;

  res.report = check_trigonal_criteria(acc, p.degree());
  res.extracted = extract_sign_array(acc);
  res.combinatorial = patchwork_sign_array(p, res.order);
  res.skeleton = std::move(acc);
  if (res.extracted != res.combinatorial)
    res.report.violations.push_back("extracted sign array " + res.extracted.str() + " differs from " + res.combinatorial.str());
  if (options.strict && !res.report.ok())
    throw internal_error("AssemblyInvariantViolated", res.report.violations.front(),
                         {{"extracted", res.extracted.str()}, {"combinatorial", res.combinatorial.str()}});
  return res;
}

}  // namespace trigpatch
