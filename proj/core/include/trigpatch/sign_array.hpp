#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "trigpatch/poly.hpp"
#include "trigpatch/roots.hpp"

namespace trigpatch {

class Patchwork;
struct ScanOrder;
struct ScanGroup;

struct PQDTriple {
  Poly1 P;
  Poly1 Q;
  Poly1 D;
};

PQDTriple pqd(const BivarPoly& c);
PQDTriple pqd_from_coefficients(const Poly1& a1, const Poly1& a2, const Poly1& a3);

// [s0, s1...sl]; signs are +1 / -1.
struct SignArray {
  int leading = 1;
  std::vector<int> entries;

  std::string str() const;
  static SignArray parse(std::string_view text);
  friend bool operator==(const SignArray&, const SignArray&) = default;
};

SignArray curve_sign_array(const BivarPoly& c);
BivarPoly negate_y(const BivarPoly& c);

enum class SiteKind { Discriminant, DoubleOne, A1Root };

struct Site {
  IsolatingInterval where;
  SiteKind kind = SiteKind::Discriminant;
  int side = 1;
  std::vector<int> signs;  // emitted signs, increasing abscissa
};

struct GroupSignLists {
  std::vector<int> negative;
  std::vector<int> positive;
  std::vector<Site> sites;  // sorted by abscissa
};

GroupSignLists group_sign_lists(const ScanGroup& g, const Patchwork& p);
// Sign of the discriminant at infinity: one factor per hypotenuse segment.
int leading_fiber_sign(const Patchwork& p);
SignArray patchwork_sign_array(const Patchwork& p, const ScanOrder& order);

struct LScheme {
  std::vector<int> branches;    // real points per fiber on each window
  std::vector<int> tangencies;  // +1: double point above the simple branch, -1: below
};

LScheme sign_array_to_lscheme(const SignArray& sa);

}  // namespace trigpatch
