#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigpatch/lattice.hpp"
#include "trigpatch/poly.hpp"

namespace trigpatch {

class Patchwork;

struct ScanGroup {
  // Cells in chain order, from the selected cell downwards along horizontal edges.
  std::vector<std::size_t> cells;
  LatticePoint distinguished_vertex;
};

struct ScanOrder {
  std::vector<ScanGroup> groups;
  std::vector<std::size_t> discarded;
  // Selections that had to be decided by a tie-break.
  std::vector<std::string> ties;
};

ScanOrder compute_scan_order(const Subdivision& s);
long group_height(const ScanGroup& g, const Subdivision& s);

enum class GroupProfile { H3, H3_H1, H3_H2, H3_H2_H1, H2, H2_H1 };
std::string to_string(GroupProfile p);

struct GroupPolynomials {
  GroupProfile profile = GroupProfile::H3;
  // rows[j] is the coefficient of Y^j collected from the member cells.
  std::vector<Poly1> rows;
  std::size_t top_cell = 0;                // the member of maximal height
  long top_cell_min_y = 0;
  std::optional<std::size_t> height2_cell;  // height-2 member
  std::optional<std::size_t> height1_cell;  // height-1 member
};

GroupPolynomials classify_group(const ScanGroup& g, const Patchwork& p);

}  // namespace trigpatch
