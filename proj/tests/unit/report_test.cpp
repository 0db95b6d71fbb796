#include <gtest/gtest.h>
#include <json.hpp>

#include "fpm/report.hpp"
#include "support.hpp"

namespace fpm {
namespace {

using testing::load;

TEST(Report, JsonFound) {
  const Instance inst = load("inst1.txt");
  const auto j = nlohmann::json::parse(format_solve_report(inst, solve(inst), OutputFormat::kJson, true));
  EXPECT_EQ(j["size"], 2);
  EXPECT_EQ(j["matching"].size(), 2u);
  EXPECT_EQ(j["matching"][0][0], "a0");
  EXPECT_EQ(j["matching"][0][1], "b1");
  EXPECT_EQ(j["witness"]["a0"], -1);
  EXPECT_EQ(j["witness"]["b1"], 1);
  EXPECT_TRUE(j.contains("trace"));
}

TEST(Report, JsonNone) {
  const Instance inst = load("inst2.txt");
  const auto j = nlohmann::json::parse(format_solve_report(inst, solve(inst), OutputFormat::kJson, false));
  EXPECT_FALSE(j.contains("matching"));
  EXPECT_FALSE(j.contains("trace"));
  EXPECT_EQ(j["iteration"], 0);
}

TEST(Report, OutputIsReproducible) {
  const Instance inst = load("inst3.txt");
  for (OutputFormat f : {OutputFormat::kText, OutputFormat::kJson}) {
    EXPECT_EQ(format_solve_report(inst, solve(inst), f, true), format_solve_report(inst, solve(inst), f, true));
    const EdgeClassification c = legal_edge_set(inst);
    EXPECT_EQ(format_edges(inst, c, EdgeKind::kLegal, f),
              format_edges(inst, legal_edge_set(inst), EdgeKind::kLegal, f));
  }
  const auto edges =
      nlohmann::json::parse(format_edges(inst, legal_edge_set(inst), EdgeKind::kPopular, OutputFormat::kJson));
  EXPECT_FALSE(edges.empty());
  const auto oracle = nlohmann::json::parse(format_oracle_report(inst, ground_truth(inst), OutputFormat::kJson));
  EXPECT_FALSE(oracle.empty());
}

}  // namespace
}  // namespace fpm
