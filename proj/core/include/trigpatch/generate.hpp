#pragma once

#include <cstdint>
#include <optional>

#include "trigpatch/lattice.hpp"
#include "trigpatch/oracle.hpp"
#include "trigpatch/patchwork.hpp"

namespace trigpatch {

struct GeneratorOptions {
  bool convex = false;       // also emit a certified lifting
  std::size_t max_cells = 10;
  int max_retries = 200;
};

struct GeneratedPatchwork {
  Patchwork patchwork;
  std::optional<Lifting> lifting;
  int retries = 0;
};

// Deterministic per (n, seed, options). Throws GenerationFailed.
GeneratedPatchwork generate_patchwork(long n, std::uint64_t seed, const GeneratorOptions& options = {});

// Chord splits of the triangle; never inserts a vertex into another cell's edge.
std::vector<LatticePolygon> random_subdivision(long n, std::uint64_t seed, std::size_t max_cells);

struct ConvexSubdivision {
  std::vector<LatticePolygon> cells;
  Lifting lifting;
};
// Cells cut by random non-crossing chords, with a sum of integral tent functions as lifting.
ConvexSubdivision random_convex_subdivision(long n, std::uint64_t seed, std::size_t max_cells);

struct RandomCell {
  LatticePolygon polygon;
  BivarPoly curve;
};
// Totally nondegenerate curve with a random lattice polygon of doubled area at most `max_doubled_area`.
RandomCell random_cell(std::uint64_t seed, long max_doubled_area = 12);

}  // namespace trigpatch
