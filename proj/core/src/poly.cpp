#include "trigpatch/poly.hpp"

#include <algorithm>
#include <sstream>

#include "trigpatch/error.hpp"

namespace trigpatch {

namespace {

Error zero_polynomial(const char* where) {
  return validation_error("ZeroPolynomial", std::string(where) + ": zero polynomial");
}

// Fraction-free determinant; div must be exact division in the coefficient ring.
template <class T, class IsZero, class Div>
T bareiss_determinant(std::vector<std::vector<T>> m, T one, IsZero is_zero, Div div) {
  const std::size_t n = m.size();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      std::size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return T{};
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = T{};
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T{} - det : det;
}

template <class T>
std::vector<std::vector<T>> sylvester(const std::vector<T>& p, const std::vector<T>& q) {
  // p, q are given lowest degree first.
  const std::size_t m = p.size() - 1, n = q.size() - 1, size = m + n;
  std::vector<std::vector<T>> s(size, std::vector<T>(size));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = p[m - k];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = q[n - k];
  return s;
}

}  // namespace

Poly1::Poly1(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void Poly1::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly1 Poly1::constant(const Rational& c) { return Poly1(std::vector<Rational>{c}); }

Poly1 Poly1::monomial(const Rational& c, int exponent) {
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return Poly1(std::move(v));
}

Rational Poly1::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const Rational& Poly1::leading() const {
  if (is_zero()) throw zero_polynomial("leading");
  return coeffs_.back();
}

int Poly1::valuation() const {
  if (is_zero()) throw zero_polynomial("valuation");
  int k = 0;
  while (coeffs_[static_cast<std::size_t>(k)].is_zero()) ++k;
  return k;
}

Rational Poly1::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int Poly1::sign_at_plus_infinity() const { return is_zero() ? 0 : leading().sign(); }

int Poly1::sign_at_minus_infinity() const {
  if (is_zero()) return 0;
  return degree() % 2 == 0 ? leading().sign() : -leading().sign();
}

int Poly1::sign_near_zero(int side) const {
  if (is_zero()) return 0;
  const int v = valuation();
  const int s = coeffs_[static_cast<std::size_t>(v)].sign();
  return (side < 0 && v % 2 == 1) ? -s : s;
}

Poly1 Poly1::derivative() const {
  if (degree() < 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return Poly1(std::move(v));
}

Poly1 Poly1::monic() const {
  if (is_zero()) throw zero_polynomial("monic");
  Poly1 r = *this;
  const Rational lc = leading();
  for (auto& c : r.coeffs_) c /= lc;
  return r;
}

Poly1 Poly1::divided_by_x_power(int k) const {
  if (k <= 0 || is_zero()) return *this;
  if (k > valuation()) throw internal_error("NotDivisible", "X power exceeds valuation");
  return Poly1(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Poly1 Poly1::reflected() const {
  Poly1 r = *this;
  for (std::size_t k = 1; k < r.coeffs_.size(); k += 2) r.coeffs_[k] = -r.coeffs_[k];
  return r;
}

Poly1 Poly1::reversed(int deg) const {
  if (is_zero()) return {};
  if (deg < degree()) throw internal_error("BadReversal", "reversal degree below polynomial degree");
  std::vector<Rational> v(static_cast<std::size_t>(deg) + 1);
  for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(deg - k)] = coeffs_[static_cast<std::size_t>(k)];
  return Poly1(std::move(v));
}

Poly1 Poly1::scaled_argument(const Rational& c) const {
  Poly1 r = *this;
  Rational f(1);
  for (auto& coef : r.coeffs_) {
    coef *= f;
    f *= c;
  }
  r.trim();
  return r;
}

Poly1 Poly1::pow(unsigned e) const {
  Poly1 result = constant(Rational(1));
  Poly1 b = *this;
  while (e) {
    if (e & 1U) result = result * b;
    b = b * b;
    e >>= 1U;
  }
  return result;
}

Poly1& Poly1::operator+=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly1& Poly1::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

Poly1 operator-(const Poly1& a) {
  Poly1 r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly1(std::move(v));
}

std::string Poly1::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    const Rational a = c.abs();
    if (k == 0 || a != Rational(1)) os << a;
    if (k > 0) {
      if (a != Rational(1)) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

DivisionResult divide(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw zero_polynomial("divide");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const Rational& lc = b.leading();
  if (a.degree() < db) return {Poly1(), a};
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree(); k >= db; --k) {
    const Rational c = rem[static_cast<std::size_t>(k)] / lc;
    quo[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly1(std::move(quo)), Poly1(std::move(rem))};
}

Poly1 exact_quotient(const Poly1& a, const Poly1& b) {
  auto [q, r] = divide(a, b);
  if (!r.is_zero()) throw internal_error("InexactDivision", "polynomial division left a remainder");
  return q;
}

Poly1 gcd(const Poly1& a, const Poly1& b) {
  Poly1 x = a, y = b;
  while (!y.is_zero()) {
    Poly1 r = divide(x, y).remainder;
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.is_zero() ? x : x.monic();
}

Poly1 squarefree_part(const Poly1& p) {
  if (p.is_zero()) throw zero_polynomial("squarefree_part");
  if (p.degree() == 0) return Poly1::constant(Rational(1));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

std::vector<Poly1> squarefree_decomposition(const Poly1& p) {
  if (p.is_zero()) throw zero_polynomial("squarefree_decomposition");
  std::vector<Poly1> factors;
  if (p.degree() == 0) return factors;
  // Yun's algorithm.
  const Poly1 dp = p.derivative();
  Poly1 a = gcd(p, dp);
  Poly1 b = exact_quotient(p, a);
  Poly1 c = exact_quotient(dp, a);
  Poly1 d = c - b.derivative();
  while (b.degree() > 0) {
    Poly1 g = gcd(b, d);
    factors.push_back(g.monic());
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
  }
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

Rational resultant(const Poly1& p, const Poly1& q) {
  if (p.is_zero() || q.is_zero()) throw zero_polynomial("resultant");
  if (p.degree() == 0) return trigpatch::pow(p.leading(), static_cast<unsigned>(q.degree()));
  if (q.degree() == 0) return trigpatch::pow(q.leading(), static_cast<unsigned>(p.degree()));
  auto m = sylvester(p.coefficients(), q.coefficients());
  return bareiss_determinant<Rational>(
      std::move(m), Rational(1), [](const Rational& r) { return r.is_zero(); },
      [](const Rational& x, const Rational& y) { return x / y; });
}

int count_cstar_roots(const Poly1& p) {
  if (p.is_zero()) throw zero_polynomial("count_cstar_roots");
  return p.degree() - p.valuation();
}

int count_distinct_cstar_roots(const Poly1& p) { return count_cstar_roots(squarefree_part(p)); }

BivarPoly::BivarPoly(std::vector<Poly1> y_coefficients) : rows_(std::move(y_coefficients)) { trim(); }

void BivarPoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BivarPoly BivarPoly::from_terms(const std::vector<std::pair<std::pair<int, int>, Rational>>& terms) {
  int maxj = -1;
  for (const auto& [ij, c] : terms) maxj = std::max(maxj, ij.second);
  std::vector<Poly1> rows(static_cast<std::size_t>(maxj + 1));
  for (const auto& [ij, c] : terms) rows[static_cast<std::size_t>(ij.second)] += Poly1::monomial(c, ij.first);
  return BivarPoly(std::move(rows));
}

Poly1 BivarPoly::row(int j) const {
  if (j < 0 || j > degree_y()) return {};
  return rows_[static_cast<std::size_t>(j)];
}

Rational BivarPoly::coefficient(int i, int j) const { return row(j).coefficient(i); }

std::vector<std::pair<int, int>> BivarPoly::support() const {
  std::vector<std::pair<int, int>> s;
  for (int j = 0; j <= degree_y(); ++j)
    for (int i = 0; i <= rows_[static_cast<std::size_t>(j)].degree(); ++i)
      if (!rows_[static_cast<std::size_t>(j)].coefficient(i).is_zero()) s.emplace_back(i, j);
  return s;
}

BivarPoly BivarPoly::derivative_y() const {
  std::vector<Poly1> r;
  for (int j = 1; j <= degree_y(); ++j) r.push_back(rows_[static_cast<std::size_t>(j)] * Rational(j));
  return BivarPoly(std::move(r));
}

BivarPoly BivarPoly::derivative_x() const {
  std::vector<Poly1> r;
  for (const auto& row : rows_) r.push_back(row.derivative());
  return BivarPoly(std::move(r));
}

int BivarPoly::min_y() const {
  if (is_zero()) throw zero_polynomial("min_y");
  int j = 0;
  while (rows_[static_cast<std::size_t>(j)].is_zero()) ++j;
  return j;
}

BivarPoly BivarPoly::torus_reduced() const {
  if (is_zero()) return {};
  const int b = min_y();
  int a = -1;
  for (const auto& row : rows_)
    if (!row.is_zero()) a = a < 0 ? row.valuation() : std::min(a, row.valuation());
  std::vector<Poly1> r;
  for (std::size_t j = static_cast<std::size_t>(b); j < rows_.size(); ++j) r.push_back(rows_[j].divided_by_x_power(
      rows_[j].is_zero() ? 0 : a));
  return BivarPoly(std::move(r));
}

Rational BivarPoly::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * y + it->eval(x);
  return acc;
}

std::string BivarPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = degree_y(); j >= 0; --j) {
    const Poly1& row = rows_[static_cast<std::size_t>(j)];
    if (row.is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << row.str() << ")";
    if (j > 0) os << "*Y" << (j > 1 ? "^" + std::to_string(j) : "");
    first = false;
  }
  return os.str();
}

Poly1 resultant_y(const BivarPoly& a, const BivarPoly& b) {
  if (a.is_zero() || b.is_zero()) throw zero_polynomial("resultant_y");
  if (a.degree_y() == 0) return a.row(0).pow(static_cast<unsigned>(b.degree_y()));
  if (b.degree_y() == 0) return b.row(0).pow(static_cast<unsigned>(a.degree_y()));
  auto m = sylvester(a.rows(), b.rows());
  return bareiss_determinant<Poly1>(
      std::move(m), Poly1::constant(Rational(1)), [](const Poly1& p) { return p.is_zero(); },
      [](const Poly1& x, const Poly1& y) { return exact_quotient(x, y); });
}

Poly1 discriminant_y(const BivarPoly& c) {
  if (c.is_zero() || c.degree_y() < 1)
    throw validation_error("ConstantInY", "discriminant of a polynomial of degree 0 in Y");
  const int m = c.degree_y();
  if (m == 1) return Poly1::constant(Rational(1));
  Poly1 r = exact_quotient(resultant_y(c, c.derivative_y()), c.row(m));
  return ((m * (m - 1) / 2) % 2 == 0) ? r : -r;
}

}  // namespace trigpatch
