#include "trigpatch/oracle.hpp"

#include "trigpatch/error.hpp"
#include "trigpatch/patchwork.hpp"

namespace trigpatch {

namespace {

const Rational& lifted(const Lifting& lambda, const LatticePoint& q) {
  const auto it = lambda.find(q);
  if (it == lambda.end()) throw validation_error("IncompleteLifting", "lifting misses a lattice point", {{"point", q.str()}});
  return it->second;
}

// Affine function through three non-collinear lifted points.
AffinePiece fit(const LatticePoint& p, const LatticePoint& q, const LatticePoint& r, const Lifting& lambda) {
  const Rational x1(q.x - p.x), y1(q.y - p.y), x2(r.x - p.x), y2(r.y - p.y);
  const Rational z1 = lifted(lambda, q) - lifted(lambda, p), z2 = lifted(lambda, r) - lifted(lambda, p);
  const Rational det = x1 * y2 - x2 * y1;
  const Rational a = (z1 * y2 - z2 * y1) / det;
  const Rational b = (x1 * z2 - x2 * z1) / det;
  const Rational c = lifted(lambda, p) - a * Rational(p.x) - b * Rational(p.y);
  return {a, b, c};
}

}  // namespace

ConvexityCertificate certify_convexity(const Subdivision& s, const Lifting& lambda) {
  const auto all = s.support.lattice_points();
  for (const auto& q : all) lifted(lambda, q);
  ConvexityCertificate cert;
  for (std::size_t k = 0; k < s.cells.size(); ++k) {
    const auto& v = s.cells[k].vertices();
    const AffinePiece piece = fit(v[0], v[1], v[2], lambda);
    for (const auto& q : all) {
      const Rational gap = lambda.at(q) - piece.at(q);
      const int cmp = gap.sign();
      const bool inside = s.cells[k].contains(q);
      if (inside && cmp != 0) {
        cert.cell = k, cert.point = q, cert.reason = "lattice point of the cell is off its affine piece";
        return cert;
      }
      if (!inside && cmp <= 0) {
        cert.cell = k, cert.point = q, cert.reason = "point outside the cell is not strictly above its affine piece";
        return cert;
      }
    }
    cert.pieces.push_back(piece);
  }
  cert.convex = true;
  return cert;
}

BivarPoly viro_polynomial(const Patchwork& p, const Lifting& lambda, const Rational& t) {
  if (t.sign() <= 0) throw validation_error("NonPositiveInput", "t must be positive");
  std::vector<std::pair<std::pair<int, int>, Rational>> terms;
  for (const auto& [q, a] : p.coefficient_map()) {
    const Rational& e = lifted(lambda, q);
    if (e.denominator() != 1 || !e.numerator().fits_slong_p())
      throw validation_error("NonIntegralLifting", "lifting values must be small integers", {{"point", q.str()}});
    const long k = e.numerator().get_si();
    const Rational w = k >= 0 ? pow(t, static_cast<unsigned>(k)) : pow(Rational(1) / t, static_cast<unsigned>(-k));
    terms.push_back({{static_cast<int>(q.x), static_cast<int>(q.y)}, a * w});
  }
  const BivarPoly c = BivarPoly::from_terms(terms);
  const Rational lead = c.coefficient(0, 3);
  if (lead.is_zero()) throw validation_error("NotNormalized", "missing Y^3 term");
  std::vector<Poly1> rows = c.rows();
  for (auto& r : rows) r *= Rational(1) / lead;
  return BivarPoly(std::move(rows));
}

OracleResult oracle_sign_array(const Patchwork& p, const Lifting& lambda, const OracleOptions& options) {
  const ConvexityCertificate cert = certify_convexity(p.subdivision(), lambda);
  if (!cert.convex)
    throw validation_error("NotConvex", cert.reason,
                           {{"cell", std::to_string(cert.cell.value_or(0))}, {"point", cert.point ? cert.point->str() : ""}});
  // Rescale to integral exponents; a positive factor keeps the subdivision.
  mpz_class den = 1;
  for (const auto& [q, v] : lambda) den = lcm(den, v.denominator());
  Lifting integral;
  for (const auto& [q, v] : lambda) integral.emplace(q, v * Rational(mpq_class(den)));

  OracleResult res;
  std::optional<SignArray> last;
  int agreeing = 0;
  // Start where one step of t outweighs the spread of the coefficients; spurious arrays can still
  // persist for a while, so the exponent of t then grows faster and faster.
  Rational total(0), smallest;
  for (const auto& [q, a] : p.coefficient_map()) {
    total += a.abs();
    if (smallest.is_zero() || a.abs() < smallest) smallest = a.abs();
  }
  const Rational spread = total / smallest;
  const auto bits = mpz_sizeinbase(spread.numerator().get_mpz_t(), 2) - mpz_sizeinbase(spread.denominator().get_mpz_t(), 2) + 1;
  Rational t = pow(Rational(1, 2), static_cast<unsigned>(bits));
  for (int k = 1; k <= options.max_steps; ++k) {
    t = t * pow(Rational(1, 2), static_cast<unsigned>(k));
    std::optional<SignArray> sa;
    try {
      sa = curve_sign_array(viro_polynomial(p, integral, t));
    } catch (const Error& e) {
      res.trace.push_back("t=" + t.str() + ": " + e.code());
      last.reset();
      agreeing = 0;
      continue;
    }
    res.trace.push_back("t=" + t.str() + ": " + sa->str());
    const bool sized = !options.expected_size || sa->entries.size() == *options.expected_size;
    agreeing = (last && *last == *sa && sized) ? agreeing + 1 : (sized ? 1 : 0);
    last = sa;
    if (agreeing >= options.agreeing_runs) {
      res.array = *sa;
      res.t = t;
      return res;
    }
  }
  std::string trace;
  for (const auto& s : res.trace) trace += s + "; ";
  throw validation_error("NoStabilization", "sign array did not stabilize", {{"trace", trace}});
}

}  // namespace trigpatch
