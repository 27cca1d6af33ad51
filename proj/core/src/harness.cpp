#include "trigpatch/harness.hpp"

#include <algorithm>
#include <future>

#include "trigpatch/error.hpp"

namespace trigpatch {

std::size_t SuiteReport::failed() const {
  return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.passed(); }));
}

std::vector<std::string> scan_order_violations(const Subdivision& s) {
  std::vector<std::string> out;
  const ScanOrder a = compute_scan_order(s), b = compute_scan_order(s);
  auto cells_of = [](const ScanOrder& o) {
    std::vector<std::size_t> all = o.discarded;
    for (const auto& g : o.groups) all.insert(all.end(), g.cells.begin(), g.cells.end());
    return all;
  };
  if (cells_of(a) != cells_of(b)) out.push_back("scan order differs between runs");
  std::vector<std::size_t> all = cells_of(a);
  std::sort(all.begin(), all.end());
  std::vector<std::size_t> expected(s.cells.size());
  for (std::size_t k = 0; k < expected.size(); ++k) expected[k] = k;
  if (all != expected) out.push_back("scan order is not a partition of the cells");
  for (const auto& g : a.groups)
    if (group_height(g, s) < 2) out.push_back("kept group of height below 2");
  return out;
}

FixtureOutcome run_fixture(const PatchworkDocument& d) {
  FixtureOutcome o{d.name, {}};
  auto fail = [&](std::string s) { o.failures.push_back(std::move(s)); };
  try {
    const CheckReport checks = check_all(d.patchwork);
    for (const auto& f : checks.failures) fail(f.check + ": " + f.subject + " " + f.detail);
    if (!checks.ok()) return o;
    for (auto& v : scan_order_violations(d.patchwork.subdivision())) fail(v);
    const AssemblyResult r = assemble(d.patchwork, AssemblyOptions{true, false});
    for (const auto& v : r.report.violations) fail(v);
    if (d.expected && *d.expected != r.combinatorial)
      fail("expected " + d.expected->str() + ", combinatorial " + r.combinatorial.str());
    if (d.lifting) {
      OracleOptions opt;
      opt.expected_size = r.combinatorial.entries.size();
      const OracleResult oracle = oracle_sign_array(d.patchwork, *d.lifting, opt);
      if (oracle.array != r.combinatorial) fail("oracle " + oracle.array.str() + ", combinatorial " + r.combinatorial.str());
    }
  } catch (const Error& e) {
    fail(e.code() + ": " + e.what());
  }
  return o;
}

SuiteReport run_suite(const std::vector<PatchworkDocument>& corpus) {
  std::vector<std::future<FixtureOutcome>> jobs;
  for (const auto& d : corpus) jobs.push_back(std::async(std::launch::async, [&d] { return run_fixture(d); }));
  SuiteReport report;
  for (auto& j : jobs) report.outcomes.push_back(j.get());
  return report;
}

}  // namespace trigpatch
