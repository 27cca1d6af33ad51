#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "trigpatch/lattice.hpp"
#include "trigpatch/poly.hpp"

namespace trigpatch {

struct PatchCell {
  LatticePolygon polygon;
  BivarPoly curve;
};

using CoefficientMap = std::map<LatticePoint, Rational>;

class Patchwork {
 public:
  // Validates the subdivision, Newton polygons and the Y^3 normalization.
  static Patchwork build(long degree, std::vector<PatchCell> cells);
  // One polynomial per cell obtained by restricting a global coefficient table.
  static Patchwork from_coefficients(long degree, const std::vector<LatticePolygon>& polygons,
                                     const CoefficientMap& coefficients);

  long degree() const noexcept { return degree_; }
  const Subdivision& subdivision() const noexcept { return subdivision_; }
  const std::vector<PatchCell>& cells() const noexcept { return cells_; }
  const SubdivisionReport& layout() const noexcept { return layout_; }
  // Coefficient of X^i Y^j read from the first cell containing the point.
  Rational coefficient(const LatticePoint& p) const;
  CoefficientMap coefficient_map() const;

 private:
  long degree_ = 0;
  Subdivision subdivision_;
  std::vector<PatchCell> cells_;
  SubdivisionReport layout_;
};

BivarPoly curve_from_points(const std::vector<std::pair<LatticePoint, Rational>>& terms);
LatticePolygon newton_polygon(const BivarPoly& c);

// Sub-polynomial supported on a face (edge or vertex) of the Newton polygon.
BivarPoly truncation(const BivarPoly& c, const LatticeSegment& face);
// Coefficients along an edge in primitive steps from face.a to face.b.
Poly1 edge_polynomial(const BivarPoly& c, const LatticeSegment& face);

struct Finding {
  std::string check;
  std::string subject;
  std::string detail;
};

struct CheckReport {
  std::vector<Finding> failures;
  bool ok() const { return failures.empty(); }
  void merge(const CheckReport& o) { failures.insert(failures.end(), o.failures.begin(), o.failures.end()); }
};

CheckReport check_compatibility(const Patchwork& p);
CheckReport check_condition1(const Patchwork& p);
CheckReport check_condition2(const Patchwork& p);
CheckReport check_cell_condition1(const BivarPoly& c, const LatticePolygon& polygon, const std::string& name);
CheckReport check_cell_condition2(const BivarPoly& c, const LatticePolygon& polygon, const std::string& name);
CheckReport check_all(const Patchwork& p);

// b[i] is the coefficient of X^{(3-i)n} Y^i.
struct LeadingFiberCubic {
  std::array<Rational, 4> b;
  Poly1 as_polynomial() const { return Poly1({b[0], b[1], b[2], b[3]}); }
};
LeadingFiberCubic leading_fiber_cubic(const Patchwork& p);

struct PerturbResult {
  Patchwork patchwork;
  int attempts = 0;
  std::vector<std::pair<LatticePoint, Rational>> offsets;
};

// Returns the input untouched if it already passes every check.
PerturbResult perturb(const Patchwork& p, std::uint64_t seed, int max_attempts = 24);

}  // namespace trigpatch
