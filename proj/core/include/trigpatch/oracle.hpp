#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigpatch/lattice.hpp"
#include "trigpatch/poly.hpp"
#include "trigpatch/rational.hpp"
#include "trigpatch/sign_array.hpp"

namespace trigpatch {

class Patchwork;

using Lifting = std::map<LatticePoint, Rational>;

// lambda(x, y) = a x + b y + c on one cell.
struct AffinePiece {
  Rational a;
  Rational b;
  Rational c;
  Rational at(const LatticePoint& p) const { return a * Rational(p.x) + b * Rational(p.y) + c; }
};

struct ConvexityCertificate {
  bool convex = false;
  std::vector<AffinePiece> pieces;  // one per cell when convex
  std::optional<std::size_t> cell;  // offending cell otherwise
  std::optional<LatticePoint> point;
  std::string reason;
};

ConvexityCertificate certify_convexity(const Subdivision& s, const Lifting& lambda);

// Sum of a_ij t^lambda(i,j) X^i Y^j, divided by the Y^3 coefficient. Liftings must be integral.
BivarPoly viro_polynomial(const Patchwork& p, const Lifting& lambda, const Rational& t);

struct OracleResult {
  SignArray array;
  Rational t;
  std::vector<std::string> trace;
};

struct OracleOptions {
  int max_steps = 16;                        // step k uses t = 2^-(k(k+1)/2)
  int agreeing_runs = 3;                     // consecutive identical arrays required
  std::optional<std::size_t> expected_size;  // number of real roots of D_t to wait for
};

OracleResult oracle_sign_array(const Patchwork& p, const Lifting& lambda, const OracleOptions& options = {});

}  // namespace trigpatch
