#pragma once

#include <string>
#include <vector>

#include "trigpatch/document.hpp"

namespace trigpatch {

struct FixtureOutcome {
  std::string name;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

struct SuiteReport {
  std::vector<FixtureOutcome> outcomes;
  std::size_t failed() const;
  bool ok() const { return failed() == 0; }
};

// Partition and repeatability of the scan order.
std::vector<std::string> scan_order_violations(const Subdivision& s);

// Runs every end-to-end invariant on one document; failures are collected, not thrown.
FixtureOutcome run_fixture(const PatchworkDocument& d);
SuiteReport run_suite(const std::vector<PatchworkDocument>& corpus);

}  // namespace trigpatch
