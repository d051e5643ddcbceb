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

#include <sstream>

#include "htcut/error.hpp"
#include "htcut/generators.hpp"
#include "htcut/hypergraph.hpp"

namespace htcut {
namespace {

TEST(ParseHypergraph, ReadsH1) {
  const Hypergraph h = parse_hypergraph("5 3 3\n1 2 3 1.0\n2 3 4 1.0\n3 4 5 1.0");
  EXPECT_EQ(h.num_nodes(), 5u);
  EXPECT_EQ(h.num_edges(), 3u);
  EXPECT_EQ(h.cardinality(), 3);
  EXPECT_EQ(h.edge(1).nodes, (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(h.edge(2).weight, 1.0);
}

TEST(ParseHypergraph, SingleNodeNoEdges) {
  const Hypergraph h = parse_hypergraph("1 0 3");
  EXPECT_EQ(h.num_nodes(), 1u);
  EXPECT_EQ(h.num_edges(), 0u);
}

TEST(ParseHypergraph, CommentsCrlfAndDefaultWeight) {
  const Hypergraph h = parse_hypergraph("# header next\r\n4 2 2\r\n  1   2\r\n# mid\r\n3 4 2.5\r\n");
  EXPECT_EQ(h.edge(0).weight, 1.0);
  EXPECT_EQ(h.edge(1).weight, 2.5);
}

TEST(ParseHypergraph, SortsNodesWithinEdge) {
  const Hypergraph h = parse_hypergraph("4 1 3\n4 1 3\n");
  EXPECT_EQ(h.edge(0).nodes, (std::vector<NodeId>{0, 2, 3}));
}

int error_line(const std::string& text) {
  try {
    parse_hypergraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseHypergraph, RejectsBadInputWithLineNumbers) {
  EXPECT_EQ(error_line("3 1 3\n1 2 2 1.0"), 2);      // duplicate node
  EXPECT_EQ(error_line("3 1 3\n1 2 1.0"), 2);        // "1.0" is not a node id
  EXPECT_EQ(error_line("3 1 3\n1 2 4"), 2);          // out of range
  EXPECT_EQ(error_line("3 1 3\n1 2 3 0"), 2);        // weight
  EXPECT_EQ(error_line("3 1 3\n1 2 3 -1"), 2);
  EXPECT_EQ(error_line("# c\n3 x 3\n"), 2);          // header
  EXPECT_EQ(error_line("3 1 1\n"), 1);               // k < 2
  EXPECT_EQ(error_line("4 1 2\n1 2\n3 4\n"), 3);     // too many edges
  EXPECT_EQ(error_line("4 2 2\n1 2\n"), 0);          // too few
  EXPECT_EQ(error_line(""), 0);
}

TEST(ParseHypergraph, StreamOverload) {
  std::istringstream in("3 1 2\n1 3 0.5\n");
  EXPECT_EQ(parse_hypergraph(in).edge(0).weight, 0.5);
}

TEST(LoadHypergraph, MissingFileNamesPath) {
  try {
    load_hypergraph("/nonexistent/x.hg");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/x.hg"), std::string::npos);
  }
}

TEST(Hypergraph, MergesDuplicateEdgesBySummingWeights) {
  const Hypergraph h(4, 2, {{{0, 1}, 1.0}, {{2, 3}, 1.0}, {{1, 0}, 0.5}});
  ASSERT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edge(0).weight, 1.5);
  EXPECT_EQ(h.edge(1).nodes, (std::vector<NodeId>{2, 3}));
}

TEST(Hypergraph, RejectsInvariantViolations) {
  EXPECT_THROW(Hypergraph(3, 1, {}), InputError);
  EXPECT_THROW(Hypergraph(3, 2, {{{0, 1, 2}, 1.0}}), InputError);
  EXPECT_THROW(Hypergraph(3, 2, {{{0, 3}, 1.0}}), InputError);
  EXPECT_THROW(Hypergraph(3, 2, {{{0, 1}, 0.0}}), InputError);
  EXPECT_THROW(Hypergraph(3, 2, {{{1, 1}, 1.0}}), InputError);
}

TEST(Degrees, H1) {
  const auto inc = degrees(fixture("h1"));
  EXPECT_EQ(inc.degrees, (std::vector<double>{1, 2, 3, 2, 1}));
  EXPECT_EQ(inc.node_edges[2], (std::vector<EdgeId>{0, 1, 2}));
}

TEST(Degrees, FourUniformFixture) {
  EXPECT_EQ(degree_vector(fixture("appendix_b2")), (std::vector<double>{2, 3, 3, 2, 2}));
}

TEST(Degrees, IsolatedNode) {
  EXPECT_EQ(degree_vector(Hypergraph(1, 3, {})), (std::vector<double>{0}));
}

TEST(Degrees, SumIsKTimesTotalWeight) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Hypergraph h = gen_uniform(9, 2 + s % 4, 7, true, s);
    double sum = 0.0;
    for (double d : degree_vector(h)) sum += d;
    EXPECT_NEAR(sum, h.cardinality() * h.total_weight(), 1e-12);
  }
}

TEST(ConnectedComponents, H1Cuts) {
  const Hypergraph h = fixture("h1");
  const std::vector<EdgeId> removed = {1, 2};
  EXPECT_EQ(serialize_partition(connected_components(h, removed)), "1 2 3\n4\n5\n");
  EXPECT_EQ(count_components(h), 1u);
  EXPECT_EQ(count_components(Hypergraph(4, 2, {})), 4u);
  const std::vector<EdgeId> bad = {3};
  EXPECT_THROW(connected_components(h, bad), InputError);
}

TEST(ConnectedComponents, SbmBlocksWithoutInterEdges) {
  const Hypergraph h = gen_sbm_graph(6, 5, 1.0, 0.0, 3);
  const Partition p = connected_components(h);
  EXPECT_EQ(p.num_clusters(), 2);
  EXPECT_EQ(p.cluster_sizes(), (std::vector<std::size_t>{6, 5}));
}

TEST(Partition, Validation) {
  EXPECT_THROW(Partition({0, 0, 2}, 3), InputError);
  EXPECT_THROW(Partition({0, 3}, 2), InputError);
  EXPECT_THROW(Partition({0}, 0), InputError);
  const Partition p({1, 0}, 2);
  EXPECT_EQ(p.label(0), 1);
}

TEST(SerializePartition, OneLinePerCluster) {
  EXPECT_EQ(serialize_partition(Partition({0, 0, 0, 1, 2}, 3)), "1 2 3\n4\n5\n");
  EXPECT_EQ(serialize_partition(Partition({0}, 1)), "1\n");
  EXPECT_EQ(serialize_partition(Partition({1, 0}, 2)), "1\n2\n");
  const std::vector<int> raw = {2, 0, 2, 1};
  EXPECT_EQ(Partition::canonical_from(raw).labels()[0], 0);
  EXPECT_EQ(Partition::canonical_from(raw).labels()[1], 1);
}

TEST(SerializeHypergraph, RoundTripIsCanonical) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Hypergraph h = gen_uniform(8, 2 + s % 4, 6, true, s);
    const Hypergraph back = parse_hypergraph(serialize_hypergraph(h));
    EXPECT_EQ(back.canonical(), h.canonical());
    EXPECT_EQ(back, h);  // %.17g keeps weights exact and edge order is kept
  }
}

}  // namespace
}  // namespace htcut
