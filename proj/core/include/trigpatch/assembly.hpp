#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigpatch/lattice.hpp"
#include "trigpatch/roots.hpp"
#include "trigpatch/scan_order.hpp"
#include "trigpatch/sign_array.hpp"
#include "trigpatch/skeleton.hpp"

namespace trigpatch {

class Patchwork;

enum class SurgeryKind { DoubleOneSmoothing, A1RootPerturbation, EndNormalization };
std::string to_string(SurgeryKind k);

struct SurgerySite {
  SurgeryKind kind = SurgeryKind::DoubleOneSmoothing;
  std::optional<IsolatingInterval> location;  // empty for a conjugate pair
  int side = 1;                               // half of RP^1 holding the site
  std::size_t ordinal = 0;                    // rank among candidate events of that half
  int decision = 1;  // sign of a1*a3, of a2, or of a1 for the emitted word
};

enum class GluingKind { Transverse, ZeroJunction, PoleJunction, Height2Junction };
std::string to_string(GluingKind k);

struct GluingCase {
  GluingKind kind = GluingKind::Transverse;
  std::optional<LatticeSegment> edge;
};

struct SurgeryLogEntry {
  std::size_t group = 0;
  std::string action;
  std::string detail;
};

// Skeleton of one scan group together with the preimages of 1 it owns in C*.
struct GroupSkeleton {
  GraphSkeleton skeleton;
  std::vector<SurgeryLogEntry> log;
};

GroupSkeleton build_group_skeleton(const ScanGroup& g, const Patchwork& p, std::size_t index = 0, bool paranoid = true);
GraphSkeleton normalize_height2(const GraphSkeleton& g);
GraphSkeleton perturb_a1_root(const GraphSkeleton& g, const SurgerySite& site);
GraphSkeleton smooth_double_one(const GraphSkeleton& g, const SurgerySite& site);

GluingCase gluing_case(const ScanGroup& left, const ScanGroup& right, const Subdivision& s);
GraphSkeleton glue_groups(const GraphSkeleton& left, const GraphSkeleton& right, const GluingCase& c);

struct AssemblyOptions {
  bool paranoid = true;  // re-check boundary rules after every step
  bool strict = true;    // throw when a final check fails
};

struct AssemblyResult {
  ScanOrder order;
  GraphSkeleton skeleton;
  SignArray extracted;
  SignArray combinatorial;
  std::vector<SurgeryLogEntry> log;
  SkeletonReport report;
};

AssemblyResult assemble(const Patchwork& p, const AssemblyOptions& options = {});

}  // namespace trigpatch
