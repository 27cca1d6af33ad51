#include "trigpatch/roots.hpp"

#include <algorithm>

#include "trigpatch/error.hpp"

namespace trigpatch {

namespace {

int count_sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

const Rational kHalf(1, 2);

long binary_exponent(const Rational& x) {
  return static_cast<long>(mpz_sizeinbase(x.numerator().get_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(x.denominator().get_mpz_t(), 2));
}

Rational power_of_two(long e) {
  mpz_class m = 1;
  mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(std::abs(e)));
  const Rational r{mpq_class(m)};
  return e >= 0 ? r : Rational(1) / r;
}

// Midpoint, or a power of two near the geometric mean when the interval spans several binary orders.
Rational split_point(const Rational& a, const Rational& b) {
  if (a.sign() > 0 && b > a * Rational(4)) {
    const Rational m = power_of_two((binary_exponent(a) + binary_exponent(b)) / 2);
    if (a < m && m < b) return m;
  }
  if (b.sign() < 0 && a < b * Rational(4)) return -split_point(-b, -a);
  return (a + b) * kHalf;
}

}  // namespace

SturmSequence::SturmSequence(const Poly1& p) {
  if (p.is_zero()) throw validation_error("ZeroPolynomial", "Sturm sequence of zero polynomial");
  seq_.push_back(p);
  seq_.push_back(p.derivative());
  while (!seq_.back().is_zero()) {
    Poly1 r = -divide(seq_[seq_.size() - 2], seq_.back()).remainder;
    // Positive rescaling keeps the sign pattern and tames coefficient growth.
    if (!r.is_zero()) r = r * (Rational(1) / r.leading().abs());
    seq_.push_back(std::move(r));
  }
  seq_.pop_back();
}

int SturmSequence::sign_changes(const Rational& x) const {
  std::vector<int> s;
  s.reserve(seq_.size());
  for (const auto& p : seq_) s.push_back(p.sign_at(x));
  return count_sign_changes(s);
}

int SturmSequence::sign_changes_at_minus_infinity() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.sign_at_minus_infinity());
  return count_sign_changes(s);
}

int SturmSequence::sign_changes_at_plus_infinity() const {
  std::vector<int> s;
  for (const auto& p : seq_) s.push_back(p.sign_at_plus_infinity());
  return count_sign_changes(s);
}

int SturmSequence::count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

int SturmSequence::count_all() const { return sign_changes_at_minus_infinity() - sign_changes_at_plus_infinity(); }

Rational root_bound(const Poly1& p) {
  if (p.is_zero()) throw validation_error("ZeroPolynomial", "root bound of zero polynomial");
  Rational m(0);
  for (const auto& c : p.coefficients()) m = std::max(m, (c / p.leading()).abs());
  return m + Rational(1);
}

void IsolatingInterval::refine() {
  if (is_exact()) return;
  const Rational mid = (low + high) * kHalf;
  const int sm = squarefree.sign_at(mid);
  if (sm == 0) {
    low = high = mid;
    return;
  }
  if (squarefree.sign_at(low) * sm < 0) high = mid;
  else low = mid;
}

namespace {

void isolate_in(const Poly1& sqf, const SturmSequence& sturm, const Rational& a, const Rational& b, int count,
                std::vector<std::pair<Rational, Rational>>& out) {
  // Invariant: sqf(a) != 0, sqf(b) != 0, `count` roots in (a, b).
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(a, b);
    return;
  }
  const Rational mid = split_point(a, b);
  if (sqf.sign_at(mid) != 0) {
    const int left = sturm.count(a, mid);
    isolate_in(sqf, sturm, a, mid, left, out);
    isolate_in(sqf, sturm, mid, b, count - left, out);
    return;
  }
  Rational delta = std::min(mid - a, b - mid) * kHalf;
  while (true) {
    const Rational lo = mid - delta, hi = mid + delta;
    if (sqf.sign_at(lo) != 0 && sqf.sign_at(hi) != 0 && sturm.count(lo, hi) == 1) {
      const int left = sturm.count(a, lo);
      isolate_in(sqf, sturm, a, lo, left, out);
      out.emplace_back(mid, mid);
      isolate_in(sqf, sturm, hi, b, count - left - 1, out);
      return;
    }
    delta *= kHalf;
  }
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const Poly1& p) {
  if (p.is_zero()) throw validation_error("ZeroPolynomial", "isolate_real_roots of zero polynomial");
  std::vector<IsolatingInterval> result;
  if (p.degree() == 0) return result;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t k = 0; k < factors.size(); ++k) {
    Poly1 f = factors[k];
    if (f.degree() <= 0) continue;
    if (f.coefficient(0).is_zero()) {
      result.push_back({Rational(0), Rational(0), p, Poly1::x(), static_cast<int>(k) + 1});
      f = f.divided_by_x_power(1);
      if (f.degree() <= 0) continue;
    }
    // Nonzero roots satisfy low < |x| < high; each sign is searched separately.
    SturmSequence sturm(f);
    const Rational high = root_bound(f) + Rational(1);
    const Rational low = Rational(1) / (root_bound(f.reversed(f.degree())) + Rational(1));
    std::vector<std::pair<Rational, Rational>> spans;
    isolate_in(f, sturm, -high, -low, sturm.count(-high, -low), spans);
    isolate_in(f, sturm, low, high, sturm.count(low, high), spans);
    for (auto& [lo, hi] : spans) {
      IsolatingInterval iv{lo, hi, p, f, static_cast<int>(k) + 1};
      if (!iv.is_exact() && f.degree() == 1) {
        const Rational r = -f.coefficient(0) / f.coefficient(1);
        iv.low = iv.high = r;
      }
      result.push_back(std::move(iv));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const IsolatingInterval& a, const IsolatingInterval& b) { return compare_roots(a, b) < 0; });
  return result;
}

std::vector<IsolatingInterval> isolate_nonzero_real_roots(const Poly1& p) {
  auto roots = isolate_real_roots(p);
  std::erase_if(roots, [](const IsolatingInterval& r) { return r.is_exact() && r.low.is_zero(); });
  return roots;
}

int sign_at_root_or_zero(const Poly1& q, IsolatingInterval root) {
  if (q.is_zero()) return 0;
  if (root.is_exact()) return q.sign_at(root.low);
  const Poly1 g = gcd(q, root.squarefree);
  if (g.degree() > 0) {
    // g has root.squarefree's root iff g changes sign across the interval (g is squarefree, divides it).
    if (g.sign_at(root.low) * g.sign_at(root.high) < 0) return 0;
  }
  const Poly1 qs = squarefree_part(q);
  SturmSequence sturm(qs);
  while (true) {
    if (qs.sign_at(root.low) != 0 && qs.sign_at(root.high) != 0 && sturm.count(root.low, root.high) == 0)
      return q.sign_at(root.low);
    root.refine();
    if (root.is_exact()) return q.sign_at(root.low);
  }
}

int sign_at_root(const Poly1& q, IsolatingInterval root) {
  const int s = sign_at_root_or_zero(q, std::move(root));
  if (s == 0) throw validation_error("VanishesAtRoot", "polynomial vanishes at the isolated root");
  return s;
}

int compare_root_with(IsolatingInterval a, const Rational& x) {
  while (true) {
    if (a.is_exact()) return a.low < x ? -1 : (a.low > x ? 1 : 0);
    if (a.high <= x) return -1;
    if (a.low >= x) return 1;
    if (a.squarefree.sign_at(x) == 0) {
      // x is a root inside the interval, hence the root.
      return 0;
    }
    a.refine();
  }
}

int compare_roots(IsolatingInterval a, IsolatingInterval b) {
  if (a.is_exact()) return -compare_root_with(std::move(b), a.low);
  if (b.is_exact()) return compare_root_with(std::move(a), b.low);
  const Poly1 g = gcd(a.squarefree, b.squarefree);
  if (g.degree() > 0) {
    // Any root of g inside both intervals is the isolated root of each.
    const Rational lo = std::max(a.low, b.low), hi = std::min(a.high, b.high);
    if (lo < hi && SturmSequence(g).count(lo, hi) > 0) return 0;
  }
  while (true) {
    if (a.high <= b.low) return -1;
    if (b.high <= a.low) return 1;
    if (a.is_exact() || b.is_exact()) return compare_roots(std::move(a), std::move(b));
    a.refine();
    b.refine();
  }
}

Rational rational_between(IsolatingInterval a, IsolatingInterval b) {
  while (!(a.high < b.low)) {
    a.refine();
    b.refine();
  }
  return (a.high + b.low) * kHalf;
}

int count_roots_between_zero_and(const Poly1& p, IsolatingInterval root) {
  int total = 0;
  for (const auto& r : isolate_nonzero_real_roots(p)) {
    const int vs_zero = compare_root_with(r, Rational(0));
    const int vs_site = compare_roots(r, root);
    const int site_side = compare_root_with(root, Rational(0));
    if (vs_site == 0) continue;
    if (site_side > 0 && vs_zero > 0 && vs_site < 0) total += r.multiplicity;
    if (site_side < 0 && vs_zero < 0 && vs_site > 0) total += r.multiplicity;
  }
  return total;
}

}  // namespace trigpatch
