#pragma once

#include <optional>
#include <vector>

#include "trigpatch/poly.hpp"

namespace trigpatch {

// Isolating interval for one real root of `parent`. Either low == high (exact
// rational root) or the open interval (low, high) contains exactly one root of
// `squarefree` and neither endpoint is a root.
struct IsolatingInterval {
  Rational low;
  Rational high;
  Poly1 parent;
  Poly1 squarefree;
  int multiplicity = 1;

  bool is_exact() const { return low == high; }
  // Halves the interval; exact roots stay put.
  void refine();
  double approx() const { return ((low + high) * Rational(1, 2)).to_double(); }
};

class SturmSequence {
 public:
  explicit SturmSequence(const Poly1& p);
  int sign_changes(const Rational& x) const;
  int sign_changes_at_minus_infinity() const;
  int sign_changes_at_plus_infinity() const;
  // Distinct roots in the half-open interval (a, b].
  int count(const Rational& a, const Rational& b) const;
  int count_all() const;

 private:
  std::vector<Poly1> seq_;
};

std::vector<IsolatingInterval> isolate_real_roots(const Poly1& p);
// Real roots other than 0.
std::vector<IsolatingInterval> isolate_nonzero_real_roots(const Poly1& p);

int sign_at_root(const Poly1& q, IsolatingInterval root);
int sign_at_root_or_zero(const Poly1& q, IsolatingInterval root);

// Three-way comparison of two real algebraic numbers given by isolating intervals.
int compare_roots(IsolatingInterval a, IsolatingInterval b);
int compare_root_with(IsolatingInterval a, const Rational& x);

// A rational strictly between the two (distinct, a < b) roots.
Rational rational_between(IsolatingInterval a, IsolatingInterval b);

// Number of roots of p, counted with multiplicity, strictly between 0 and the root.
int count_roots_between_zero_and(const Poly1& p, IsolatingInterval root);

// Bound B with every root of p in (-B, B).
Rational root_bound(const Poly1& p);

}  // namespace trigpatch
