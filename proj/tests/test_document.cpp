#include <gtest/gtest.h>

#include <array>
#include <regex>

#include "support.hpp"
#include "trigpatch/harness.hpp"
#include "trigpatch/render.hpp"
#include "trigpatch/scan_order.hpp"

using namespace trigpatch;
using namespace trigpatch::test;

namespace {

const char* kSingleCell = R"({
  "degree": 1,
  "cells": [{"vertices": [[0,0],[3,0],[0,3]],
             "coefficients": [{"i":0,"j":3,"value":"1"}, {"i":0,"j":1,"value":"-3"}, {"i":3,"j":0,"value":"1"},
                              {"i":1,"j":0,"value":"-2"}, {"i":0,"j":0,"value":"1/4"}]}]
})";

// Dots per quadrant, indexed by (x > 0) + 2 (y > 0).
std::array<int, 4> dots_by_quadrant(const std::string& svg, double half) {
  std::array<int, 4> out{};
  const std::regex dot(R"re(<circle cx="([-0-9.e]+)" cy="([-0-9.e]+)")re");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), dot); it != std::sregex_iterator(); ++it) {
    const double x = std::stod((*it)[1]) - half, y = half - std::stod((*it)[2]);
    ++out[(x > 0 ? 1 : 0) + (y > 0 ? 2 : 0)];
  }
  return out;
}

}  // namespace

TEST(Document, ParsesSingleCell) {
  const auto d = parse_document(kSingleCell);
  EXPECT_EQ(d.patchwork.degree(), 1);
  ASSERT_EQ(d.patchwork.cells().size(), 1U);
  EXPECT_EQ(d.patchwork.cells()[0].curve, running_curve());
  EXPECT_FALSE(d.lifting.has_value());
}

TEST(Document, RoundTrips) {
  for (const char* name : {"single_cell", "horizontal_split", "edge_split"}) {
    const auto d = fixture(name);
    const auto e = document_from_json(to_json(d));
    EXPECT_EQ(e.name, d.name);
    EXPECT_EQ(e.patchwork.coefficient_map(), d.patchwork.coefficient_map());
    EXPECT_EQ(e.lifting, d.lifting);
    EXPECT_EQ(e.expected, d.expected);
  }
}

TEST(Document, RationalsSerializeAsStrings) {
  const auto j = to_json(parse_document(kSingleCell));
  const std::string text = j.dump();
  EXPECT_NE(text.find("\"1/4\""), std::string::npos);
}

TEST(Document, MonomialOutsideCell) {
  std::string text = kSingleCell;
  const std::string inside = R"({"i":0,"j":0,"value":"1/4"})";
  text.replace(text.find(inside), inside.size(), R"({"i":4,"j":0,"value":"1/4"})");
  EXPECT_EQ(error_code([&] { parse_document(text); }), "MonomialOutsideCell");
}

TEST(Document, MalformedInput) {
  EXPECT_EQ(error_code([] { parse_document("{"); }), "ParseError");
  EXPECT_EQ(error_code([] { parse_document(R"({"degree": "one", "cells": []})"); }), "ParseError");
  try {
    parse_document(R"({"degree": 1, "cells": [{"vertices": [[0,0],[3,0],[0,3]], "coefficients": [{"i":0,"j":3,"value":"x"}]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "ParseError");
    EXPECT_NE(e.context().at("location").find("cells"), std::string::npos);
  }
}

TEST(Document, MismatchedSharedEdgeIsSurfaced) {
  auto j = to_json(fixture("edge_split"));
  for (auto& c : j["cells"][0]["coefficients"])
    if (c["i"] == 1 && c["j"] == 2) c["value"] = "17";
  const auto d = document_from_json(j);
  EXPECT_FALSE(check_compatibility(d.patchwork).ok());
}

TEST(Document, SkeletonRoundTrip) {
  const auto g = skeleton_of_trigonal(running_curve(), 1);
  EXPECT_EQ(skeleton_from_json(to_json(g)), g);
}

TEST(Render, ChartAvoidsEmptyQuadrant) {
  // 1 + X + Y has no zero with X > 0 and Y > 0.
  const RenderSpec spec{RenderTarget::Chart, 120, 400};
  const auto q = dots_by_quadrant(render_chart(curve({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}}), spec), 200);
  EXPECT_EQ(q[3], 0);
  EXPECT_GT(q[0], 0);
  EXPECT_GT(q[1], 0);
  EXPECT_GT(q[2], 0);
}

TEST(Render, EmptyRealZeroSet) {
  const RenderSpec spec{RenderTarget::Chart, 120, 400};
  const auto q = dots_by_quadrant(render_chart(curve({{0, 0, 1}, {2, 0, 1}, {0, 2, 1}}), spec), 200);
  EXPECT_EQ(q[0] + q[1] + q[2] + q[3], 0);
}

TEST(Render, DegenerateNewtonPolygon) {
  EXPECT_EQ(error_code([] { render_chart(curve({{0, 1, 1}, {1, 0, -1}})); }), "DegenerateNewtonPolygon");
}

TEST(Render, LSchemeAndSkeletonAreSvg) {
  const auto l = render_lscheme(sign_array_to_lscheme(SignArray::parse("[-,-+]")));
  EXPECT_EQ(l.rfind("<svg", 0), 0U);
  const auto s = render_skeleton(skeleton_of_trigonal(running_curve(), 1));
  EXPECT_EQ(s.rfind("<svg", 0), 0U);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

TEST(Harness, ShippedCorpusIsGreen) {
  std::vector<PatchworkDocument> corpus;
  for (const char* name : {"single_cell", "horizontal_split", "edge_split", "free_n2_s0"}) corpus.push_back(fixture(name));
  const auto report = run_suite(corpus);
  for (const auto& o : report.outcomes) EXPECT_TRUE(o.passed()) << o.name << ": " << (o.failures.empty() ? "" : o.failures[0]);
  EXPECT_TRUE(report.ok());
}

TEST(Harness, CorruptedFixtureIsTheOnlyFailure) {
  std::vector<PatchworkDocument> corpus{fixture("single_cell"), fixture("edge_split"), fixture("horizontal_split")};
  corpus[1].name = "corrupted";
  corpus[1].expected = SignArray::parse("[+,++]");
  const auto report = run_suite(corpus);
  ASSERT_EQ(report.failed(), 1U);
  for (const auto& o : report.outcomes) EXPECT_EQ(o.passed(), o.name != "corrupted");
}
