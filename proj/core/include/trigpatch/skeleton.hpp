#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigpatch/poly.hpp"
#include "trigpatch/sign_array.hpp"

namespace trigpatch {

enum class EventKind { ZeroPre, PolePre, OnePre, Mark0, MarkInf };
// Image of an arc under the map: ]inf,0[, ]0,1[, ]1,inf[.
enum class Interval { InfZero, ZeroOne, OneInf };

std::string to_string(EventKind k);
std::string to_string(Interval i);
EventKind event_kind_from_string(const std::string& s);
Interval interval_from_string(const std::string& s);

// A critical value preimage that sits at a mark.
struct LocalEvent {
  EventKind kind = EventKind::ZeroPre;
  int order = 0;
  friend bool operator==(const LocalEvent&, const LocalEvent&) = default;
};

struct BoundaryEvent {
  EventKind kind = EventKind::ZeroPre;
  int order = 0;                      // unused for marks
  std::optional<LocalEvent> at_mark;  // marks only
  friend bool operator==(const BoundaryEvent&, const BoundaryEvent&) = default;

  bool is_mark() const { return kind == EventKind::Mark0 || kind == EventKind::MarkInf; }
  // The critical event this boundary point represents, if any.
  std::optional<LocalEvent> effective() const;
};

struct SignPair {
  int d = 1;
  int q = 1;
  friend bool operator==(const SignPair&, const SignPair&) = default;
};

struct BoundaryArc {
  Interval interval = Interval::ZeroOne;
  std::optional<SignPair> signs;
  friend bool operator==(const BoundaryArc&, const BoundaryArc&) = default;
};

// Cyclic boundary word on RP^1: arcs[k] joins events[k] to events[k + 1].
// Marked skeletons list Mark0, the positive reals, MarkInf, then the negative reals,
// all in increasing order.
struct GraphSkeleton {
  std::vector<BoundaryEvent> events;
  std::vector<BoundaryArc> arcs;
  long interior_zero = 0;
  long interior_pole = 0;
  long interior_one = 0;
  friend bool operator==(const GraphSkeleton&, const GraphSkeleton&) = default;

  std::optional<std::size_t> find_mark(EventKind mark) const;
  long total_order(EventKind kind) const;
};

GraphSkeleton skeleton_of_trigonal(const BivarPoly& c, long n);
GraphSkeleton skeleton_of_bidegree2(const BivarPoly& c, long n);

struct SkeletonReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Local crossing and sign rules only; marks can be skipped while they still await gluing.
SkeletonReport validate_boundary(const GraphSkeleton& g, bool check_marks = true);
// Local rules plus the degree balance of the interior counts.
SkeletonReport validate_skeleton(const GraphSkeleton& g);
long skeleton_degree(const GraphSkeleton& g);
SkeletonReport check_trigonal_criteria(const GraphSkeleton& g, long n);
SignArray extract_sign_array(const GraphSkeleton& g);

// Interval after crossing an event of the given kind and order, if the crossing is admissible.
std::optional<Interval> cross_event(Interval before, EventKind kind, int order);

}  // namespace trigpatch
