#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "trigpatch/rational.hpp"

namespace trigpatch {

// Dense univariate polynomial over Q. The zero polynomial has no coefficients
// and degree() == -1; operations that need a nonzero argument say so.
class Poly1 {
 public:
  Poly1() = default;
  explicit Poly1(std::vector<Rational> coefficients);
  Poly1(std::initializer_list<Rational> coefficients) : Poly1(std::vector<Rational>(coefficients)) {}

  static Poly1 constant(const Rational& c);
  static Poly1 monomial(const Rational& c, int exponent);
  static Poly1 x() { return monomial(Rational(1), 1); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const;
  // Multiplicity of 0 as a root.
  int valuation() const;

  Rational eval(const Rational& x) const;
  int sign_at(const Rational& x) const { return eval(x).sign(); }
  int sign_at_plus_infinity() const;
  int sign_at_minus_infinity() const;
  // Sign just to the right (side=+1) or left (side=-1) of 0.
  int sign_near_zero(int side) const;

  Poly1 derivative() const;
  Poly1 monic() const;
  Poly1 divided_by_x_power(int k) const;
  Poly1 reflected() const;            // p(-X)
  Poly1 reversed(int degree) const;   // X^degree p(1/X)
  Poly1 scaled_argument(const Rational& c) const;  // p(c X)
  Poly1 pow(unsigned e) const;

  Poly1& operator+=(const Poly1& o);
  Poly1& operator-=(const Poly1& o);
  Poly1& operator*=(const Rational& c);
  friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
  friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
  friend Poly1 operator-(const Poly1& a);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(Poly1 a, const Rational& c) { return a *= c; }
  friend Poly1 operator*(const Rational& c, Poly1 a) { return a *= c; }
  friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(char var = 'X') const;
  friend std::ostream& operator<<(std::ostream& os, const Poly1& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivisionResult {
  Poly1 quotient;
  Poly1 remainder;
};

DivisionResult divide(const Poly1& a, const Poly1& b);
Poly1 exact_quotient(const Poly1& a, const Poly1& b);
Poly1 gcd(const Poly1& a, const Poly1& b);  // monic, or zero if both zero
Poly1 squarefree_part(const Poly1& p);
// factors[k] collects the roots of multiplicity k+1; each factor is monic.
std::vector<Poly1> squarefree_decomposition(const Poly1& p);
Rational resultant(const Poly1& p, const Poly1& q);
int count_cstar_roots(const Poly1& p);
int count_distinct_cstar_roots(const Poly1& p);

// Polynomial in Y whose coefficients are polynomials in X.
class BivarPoly {
 public:
  BivarPoly() = default;
  explicit BivarPoly(std::vector<Poly1> y_coefficients);

  static BivarPoly from_terms(const std::vector<std::pair<std::pair<int, int>, Rational>>& terms);

  bool is_zero() const noexcept { return rows_.empty(); }
  int degree_y() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<Poly1>& rows() const noexcept { return rows_; }
  Poly1 row(int j) const;
  Rational coefficient(int i, int j) const;
  // Monomials (i, j) carrying a nonzero coefficient.
  std::vector<std::pair<int, int>> support() const;

  BivarPoly derivative_y() const;
  BivarPoly derivative_x() const;
  // Divides by the largest monomial X^a Y^b dividing the polynomial.
  BivarPoly torus_reduced() const;
  int min_y() const;
  Rational eval(const Rational& x, const Rational& y) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) { return a.rows_ == b.rows_; }
  std::string str() const;

 private:
  void trim();
  std::vector<Poly1> rows_;
};

// Resultant with respect to Y, a polynomial in X.
Poly1 resultant_y(const BivarPoly& a, const BivarPoly& b);
Poly1 discriminant_y(const BivarPoly& c);

}  // namespace trigpatch
