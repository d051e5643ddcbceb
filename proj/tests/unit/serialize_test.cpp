// Copyright 2026 The htcut Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "htcut/error.hpp"
#include "htcut/generators.hpp"
#include "htcut/serialize.hpp"
#include "json.hpp"

namespace htcut {
namespace {

using nlohmann::json;

TEST(PartitionJson, H2ScoreCut) {
  const Hypergraph h = fixture("h2_example2");
  const PartitionResult r = score_partition(h, 2, LaplacianKind::kUnnormalized, SolverConfig{});
  const json j = json::parse(partition_result_json(r, 12.5));
  EXPECT_EQ(j["method"], "score");
  EXPECT_EQ(j["removed"], json::array({1}));
  EXPECT_EQ(j["clusters"][1], json::array({2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(j["components"], 2);
  EXPECT_EQ(j["median_fallback"], false);
  EXPECT_EQ(j["pi"], 12.5);
  EXPECT_NEAR(j["lambda"].get<double>(), 0.0372, 0.002);
  EXPECT_EQ(j["fiedler"]["vector"].size(), 12u);
  EXPECT_EQ(j["ratio_cut"].get<double>(), r.metrics.ratio_cut);
}

TEST(PartitionJson, OracleHasNoEigenpair) {
  const json j = json::parse(partition_result_json(oracle_min_ratio_cut(fixture("h1"), 2)));
  EXPECT_TRUE(j["lambda"].is_null());
  EXPECT_TRUE(j["fiedler"].is_null());
  EXPECT_FALSE(j.contains("pi"));
}

TEST(CutReportJson, H1) {
  const json j = json::parse(cut_report_json(cut_cost(fixture("h1"), Partition({0, 0, 0, 1, 2}, 3))));
  EXPECT_EQ(j["boundary"], json::array({2, 3}));
  EXPECT_EQ(j["per_cluster_cost"], json::array({3.0, 2.0, 1.0}));
  EXPECT_EQ(j["total_cost"], 2.0);
  EXPECT_TRUE(j["n_cut"].is_number());
}

TEST(CutReportJson, UndefinedNcutIsNull) {
  const Hypergraph h(4, 3, {{{0, 1, 2}, 1.0}});
  const json j = json::parse(cut_report_json(cut_cost(h, Partition({0, 0, 1, 2}, 3))));
  EXPECT_TRUE(j["n_cut"].is_null());
}

TEST(EigenpairsJson, Shape) {
  const auto pairs = find_eigenpairs(gen_cockroach(2), LaplacianKind::kUnnormalized, SolverConfig{});
  const json j = json::parse(eigenpairs_json(pairs));
  ASSERT_EQ(j["pairs"].size(), pairs.size());
  EXPECT_EQ(j["pairs"][0]["lambda"].get<double>(), pairs[0].lambda);
  EXPECT_EQ(j["pairs"][0]["vector"].size(), 8u);
  EXPECT_TRUE(j["pairs"][0].contains("restarts_agreeing"));
  EXPECT_TRUE(j["pairs"][0].contains("multiplicity"));
}

TEST(MatrixCsv, ExactDigits) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0, -1.0 / 3.0, -1.0 / 3.0, 0.5;
  EXPECT_EQ(matrix_csv(m), "2\n1,-0.33333333333333331\n-0.33333333333333331,0.5\n");
}

TEST(ParsePartition, RoundTripAndErrors) {
  const Partition p({0, 1, 0, 2, 1}, 3);
  EXPECT_EQ(parse_partition(serialize_partition(p), 5), p);
  EXPECT_EQ(parse_partition("# clusters\n\n1 3\r\n2 5\n4\n", 5), p);
  EXPECT_THROW(parse_partition("1 2\n2 3\n", 3), ParseError);
  EXPECT_THROW(parse_partition("1 2\n", 3), InputError);
  EXPECT_THROW(parse_partition("1 2 4\n", 3), ParseError);
  EXPECT_THROW(parse_partition("1 x\n", 2), ParseError);
}

}  // namespace
}  // namespace htcut
