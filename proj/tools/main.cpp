#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "trigpatch/assembly.hpp"
#include "trigpatch/document.hpp"
#include "trigpatch/error.hpp"
#include "trigpatch/generate.hpp"
#include "trigpatch/harness.hpp"
#include "trigpatch/render.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace trigpatch;

namespace {

enum Exit { Ok = 0, Invalid = 1, Broken = 2, Usage = 3 };

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::vector<PatchworkDocument> load_corpus(const std::string& root) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::recursive_directory_iterator(root))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<PatchworkDocument> corpus;
  for (const auto& f : files) {
    PatchworkDocument d = load_document(f.string());
    if (d.name == f.string()) d.name = f.stem().string();
    corpus.push_back(std::move(d));
  }
  return corpus;
}

json suite_json(const SuiteReport& r) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes) outcomes.push_back({{"name", o.name}, {"passed", o.passed()}, {"failures", o.failures}});
  return {{"fixtures", r.outcomes.size()}, {"failed", r.failed()}, {"outcomes", outcomes}};
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw validation_error("IoError", "cannot write output", {{"path", path}});
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Patchworking of trigonal curves over non-convex subdivisions"};
  app.require_subcommand(1);

  std::string file, lifting_file, suite_dir, skeleton_file, output = "-", target = "chart";
  long degree = 0, n = 1;
  std::uint64_t seed = 0;
  bool convex = false;
  int cell = -1, resolution = 240;

  auto* validate = app.add_subcommand("validate", "check the subdivision, shared edges, nondegeneracy and tangency counts");
  validate->add_option("file", file, "patchwork document")->required();
  auto* order = app.add_subcommand("order", "scan order of the cells");
  order->add_option("file", file, "patchwork document")->required();
  auto* sign = app.add_subcommand("sign-array", "combinatorial sign array");
  sign->add_option("file", file, "patchwork document")->required();
  auto* assemble_cmd = app.add_subcommand("assemble", "glue the group skeletons and run every check");
  assemble_cmd->add_option("file", file, "patchwork document")->required();
  auto* verify = app.add_subcommand("verify", "run the invariant suite on a fixture tree, a document or a skeleton");
  verify->add_option("file", file, "patchwork document");
  verify->add_option("--suite", suite_dir, "directory of fixture documents");
  verify->add_option("--skeleton", skeleton_file, "skeleton JSON to check against the trigonal criteria");
  verify->add_option("--n", degree, "degree for --skeleton");
  auto* oracle = app.add_subcommand("oracle", "sign array of the Viro polynomial for small t");
  oracle->add_option("file", file, "patchwork document")->required();
  oracle->add_option("--lifting", lifting_file, "lifting JSON (defaults to the document's own)");
  auto* render = app.add_subcommand("render", "write an SVG chart, L-scheme or skeleton");
  render->add_option("file", file, "patchwork document")->required();
  render->add_option("--target", target, "chart, lscheme or skeleton")->check(CLI::IsMember({"chart", "lscheme", "skeleton"}));
  render->add_option("--cell", cell, "chart of a single cell instead of the glued curve");
  render->add_option("--resolution", resolution, "samples per axis");
  render->add_option("-o,--output", output, "output path");
  auto* generate = app.add_subcommand("generate", "random valid patchwork document");
  generate->add_option("--n", n, "degree")->check(CLI::Range(1, 4));
  generate->add_option("--seed", seed, "seed");
  generate->add_flag("--convex", convex, "emit a certified lifting as well");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << json{{"code", "UsageError"}, {"message", e.what()}, {"context", json::object()}}.dump() << '\n';
    return Usage;
  }

  try {
    if (*validate) {
      const CheckReport r = check_all(load_document(file).patchwork);
      emit(to_json(r));
      return r.ok() ? Ok : Invalid;
    }
    if (*order) {
      emit(to_json(compute_scan_order(load_document(file).patchwork.subdivision())));
      return Ok;
    }
    if (*sign) {
      const Patchwork p = load_document(file).patchwork;
      const SignArray sa = patchwork_sign_array(p, compute_scan_order(p.subdivision()));
      const LScheme l = sign_array_to_lscheme(sa);
      emit({{"sign_array", sa.str()}, {"branches", l.branches}, {"tangencies", l.tangencies}});
      return Ok;
    }
    if (*assemble_cmd) {
      const AssemblyResult r = assemble(load_document(file).patchwork, AssemblyOptions{true, false});
      emit(to_json(r));
      return r.report.ok() ? Ok : Broken;
    }
    if (*verify) {
      if (!skeleton_file.empty()) {
        if (degree < 1) throw validation_error("UsageError", "--skeleton needs --n");
        std::ifstream in(skeleton_file);
        if (!in) throw validation_error("ParseError", "cannot open file", {{"path", skeleton_file}});
        const GraphSkeleton g = skeleton_from_json(json::parse(in));
        const SkeletonReport r = check_trigonal_criteria(g, degree);
        json out = to_json(r);
        if (g.find_mark(EventKind::Mark0)) out["sign_array"] = extract_sign_array(g).str();
        emit(out);
        return r.ok() ? Ok : Invalid;
      }
      std::vector<PatchworkDocument> corpus;
      if (!suite_dir.empty()) corpus = load_corpus(suite_dir);
      if (!file.empty()) corpus.push_back(load_document(file));
      if (corpus.empty()) throw validation_error("UsageError", "verify needs a file, --suite or --skeleton");
      const SuiteReport r = run_suite(corpus);
      emit(suite_json(r));
      return r.ok() ? Ok : Invalid;
    }
    if (*oracle) {
      const PatchworkDocument d = load_document(file);
      std::optional<Lifting> lambda = d.lifting;
      if (!lifting_file.empty()) {
        std::ifstream in(lifting_file);
        if (!in) throw validation_error("ParseError", "cannot open file", {{"path", lifting_file}});
        lambda = lifting_from_json(json::parse(in));
      }
      if (!lambda) throw validation_error("UsageError", "no lifting given");
      OracleOptions opt;
      opt.expected_size = patchwork_sign_array(d.patchwork, compute_scan_order(d.patchwork.subdivision())).entries.size();
      const OracleResult r = oracle_sign_array(d.patchwork, *lambda, opt);
      emit({{"sign_array", r.array.str()}, {"t", r.t.str()}, {"trace", r.trace}});
      return Ok;
    }
    if (*render) {
      const PatchworkDocument d = load_document(file);
      RenderSpec spec;
      spec.resolution = resolution;
      std::string svg;
      if (target == "chart") {
        if (cell >= 0) {
          if (static_cast<std::size_t>(cell) >= d.patchwork.cells().size())
            throw validation_error("UsageError", "no such cell", {{"cell", std::to_string(cell)}});
          svg = render_chart(d.patchwork.cells()[static_cast<std::size_t>(cell)].curve, spec);
        } else {
          std::vector<std::pair<LatticePoint, Rational>> terms(d.patchwork.coefficient_map().begin(), d.patchwork.coefficient_map().end());
          svg = render_chart(curve_from_points(terms), spec);
        }
      } else if (target == "lscheme") {
        const SignArray sa = patchwork_sign_array(d.patchwork, compute_scan_order(d.patchwork.subdivision()));
        svg = render_lscheme(sign_array_to_lscheme(sa), spec);
      } else {
        svg = render_skeleton(assemble(d.patchwork, AssemblyOptions{true, false}).skeleton, spec);
      }
      write_text(output, svg);
      return Ok;
    }
    if (*generate) {
      GeneratedPatchwork g = generate_patchwork(n, seed, GeneratorOptions{convex, 10, 200});
      PatchworkDocument d{"generated-n" + std::to_string(n) + "-s" + std::to_string(seed), {convex ? "convex" : "non-convex"},
                          std::move(g.patchwork), std::move(g.lifting), std::nullopt};
      emit(to_json(d));
      return Ok;
    }
  } catch (const Error& e) {
    std::cerr << json{{"code", e.code()}, {"message", e.what()}, {"context", e.context()}}.dump() << '\n';
    if (e.code() == "UsageError") return Usage;
    return e.kind() == ErrorKind::Internal ? Broken : Invalid;
  } catch (const std::exception& e) {
    std::cerr << json{{"code", "InternalError"}, {"message", e.what()}, {"context", json::object()}}.dump() << '\n';
    return Broken;
  }
  return Usage;
}
