#pragma once

#include <string>

#include "trigpatch/poly.hpp"
#include "trigpatch/sign_array.hpp"
#include "trigpatch/skeleton.hpp"

namespace trigpatch {

enum class RenderTarget { Chart, LScheme, Skeleton };

struct RenderSpec {
  RenderTarget target = RenderTarget::Chart;
  int resolution = 240;  // samples per axis for charts
  int size = 480;        // pixels
};

// Approximate chart: zero set in the four open quadrants through the moment map.
std::string render_chart(const BivarPoly& c, const RenderSpec& spec = {});
std::string render_lscheme(const LScheme& l, const RenderSpec& spec = {});
std::string render_skeleton(const GraphSkeleton& g, const RenderSpec& spec = {});

}  // namespace trigpatch
