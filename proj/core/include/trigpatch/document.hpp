#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "trigpatch/assembly.hpp"
#include "trigpatch/oracle.hpp"
#include "trigpatch/patchwork.hpp"

namespace trigpatch {

struct PatchworkDocument {
  std::string name;
  std::vector<std::string> tags;
  Patchwork patchwork;
  std::optional<Lifting> lifting;
  std::optional<SignArray> expected;
};

// Throws ParseError for malformed input and the patchwork's own errors for invalid data.
PatchworkDocument parse_document(std::string_view text);
PatchworkDocument document_from_json(const nlohmann::json& j);
PatchworkDocument load_document(const std::string& path);

Lifting lifting_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Lifting& lambda);
nlohmann::json to_json(const Patchwork& p);
nlohmann::json to_json(const PatchworkDocument& d);

nlohmann::json to_json(const GraphSkeleton& g);
GraphSkeleton skeleton_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ScanOrder& order);
nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const SkeletonReport& report);
nlohmann::json to_json(const AssemblyResult& result);

}  // namespace trigpatch
