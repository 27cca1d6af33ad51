#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "trigpatch/document.hpp"
#include "trigpatch/error.hpp"
#include "trigpatch/patchwork.hpp"
#include "trigpatch/poly.hpp"

namespace trigpatch::test {

using Term = std::tuple<int, int, Rational>;

inline BivarPoly curve(const std::vector<Term>& terms) {
  std::vector<std::pair<std::pair<int, int>, Rational>> t;
  for (const auto& [i, j, c] : terms) t.push_back({{i, j}, c});
  return BivarPoly::from_terms(t);
}

inline Poly1 poly(std::vector<Rational> coefficients) { return Poly1(std::move(coefficients)); }

// Y^3 - 3Y + X^3 - 2X + 1/4, the running degree-one example.
inline BivarPoly running_curve() {
  return curve({{0, 3, 1}, {0, 1, -3}, {3, 0, 1}, {1, 0, -2}, {0, 0, Rational(1, 4)}});
}

inline LatticePolygon hull(std::vector<LatticePoint> points) { return LatticePolygon::hull_of(std::move(points)); }

inline Patchwork single_cell_patchwork() { return Patchwork::build(1, {{trigonal_triangle(1), running_curve()}}); }

// Code of the library error thrown by f, or empty if none.
inline std::string error_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return "";
}

inline std::string fixture_path(const std::string& name) { return std::string(TRIGPATCH_FIXTURES) + "/" + name + ".json"; }
inline PatchworkDocument fixture(const std::string& name) { return load_document(fixture_path(name)); }

}  // namespace trigpatch::test
