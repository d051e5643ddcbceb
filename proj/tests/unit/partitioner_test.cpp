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

#include <cmath>
#include <set>

#include "htcut/error.hpp"
#include "htcut/generators.hpp"
#include "htcut/partitioner.hpp"

namespace htcut {
namespace {

std::set<NodeId> one_based(const std::vector<NodeId>& c) {
  std::set<NodeId> s;
  for (NodeId v : c) s.insert(v + 1);
  return s;
}

// sum_i w_h(C_i) / (k |C_i|^{k/2}) written out from the definition.
double naive_ratio_cut(const Hypergraph& h, const std::vector<int>& label, int p) {
  const int k = h.cardinality();
  std::vector<double> cost(p, 0.0);
  std::vector<double> size(p, 0.0);
  for (int l : label) size[l] += 1;
  for (const auto& e : h.edges()) {
    std::vector<int> in(p, 0);
    for (NodeId v : e.nodes) in[label[v]]++;
    bool cut = false;
    for (int c : in) cut |= c > 0 && c < k;
    if (!cut) continue;
    for (int i = 0; i < p; ++i) cost[i] += in[i] * e.weight;
  }
  double r = 0.0;
  for (int i = 0; i < p; ++i) r += cost[i] / (k * std::pow(size[i], k / 2.0));
  return r;
}

TEST(ScorePartition, H2CutsTopEdge) {
  const Hypergraph h = fixture("h2_example2");
  const PartitionResult r = score_partition(h, 2, LaplacianKind::kUnnormalized, SolverConfig{});
  EXPECT_EQ(r.removed, (std::vector<EdgeId>{0}));
  const auto cl = r.partition.clusters();
  ASSERT_EQ(cl.size(), 2u);
  EXPECT_EQ(one_based(cl[1]), (std::set<NodeId>{2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(r.components, 2u);
  EXPECT_EQ(r.singleton_components, 0u);
  ASSERT_TRUE(r.fiedler.has_value());
}

TEST(SignPartition, H2IsolatesNodeFive) {
  const Hypergraph h = fixture("h2_example2");
  const PartitionResult r = sign_partition(h, LaplacianKind::kUnnormalized, SolverConfig{});
  const auto cl = r.partition.clusters();
  ASSERT_EQ(cl.size(), 2u);
  EXPECT_EQ(one_based(cl[1]), (std::set<NodeId>{5}));
  EXPECT_FALSE(r.median_fallback);
  EXPECT_EQ(r.removed, r.metrics.boundary);
}

TEST(SignPartition, MedianFallbackOnOneSignedVector) {
  EigenPair f;
  f.lambda = 1.0;
  f.vector = Eigen::Vector4d(0.1, 0.4, 0.2, 0.3);
  const Hypergraph h(4, 2, {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
  const PartitionResult r = sign_partition(h, f);
  EXPECT_TRUE(r.median_fallback);
  EXPECT_EQ(serialize_partition(r.partition), "1 3\n2 4\n");
}

TEST(ScorePartition, CockroachRemovesTiedPair) {
  const Hypergraph h = gen_cockroach(3);
  const PartitionResult r = score_partition(h, 2, LaplacianKind::kUnnormalized, SolverConfig{});
  ASSERT_EQ(r.removed.size(), 2u);
  std::set<std::set<NodeId>> cut;
  for (EdgeId e : r.removed) cut.insert(one_based(h.edge(e).nodes));
  EXPECT_EQ(cut, (std::set<std::set<NodeId>>{{3, 4}, {9, 10}}));
  EXPECT_EQ(one_based(r.partition.clusters()[0]), (std::set<NodeId>{1, 2, 3, 7, 8, 9}));
  EXPECT_EQ(r.metrics.classical_ratio_cut, 2.0 / 3.0);
  EXPECT_EQ(r.components, 3u);  // two antennae and the ladder, merged to 2
}

TEST(ScorePartition, PartitionCoarsensSurvivingComponents) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Hypergraph h = gen_connected_uniform(9, 3, 8, true, s);
    for (int p : {2, 3}) {
      const PartitionResult r = score_partition(h, p, LaplacianKind::kUnnormalized, SolverConfig{});
      EXPECT_EQ(r.partition.num_clusters(), p);
      const Partition comps = connected_components(h, r.removed);
      EXPECT_EQ(comps.num_clusters(), static_cast<int>(r.components));
      for (NodeId u = 0; u < 9; ++u) {
        for (NodeId v = 0; v < 9; ++v) {
          if (comps.label(u) == comps.label(v)) {
            EXPECT_EQ(r.partition.label(u), r.partition.label(v));
          }
        }
      }
    }
  }
}

TEST(ScorePartition, Guards) {
  const Hypergraph h = fixture("h1");
  EXPECT_THROW(score_partition(h, 1, LaplacianKind::kUnnormalized, SolverConfig{}), InputError);
  EXPECT_THROW(score_partition(h, 6, LaplacianKind::kUnnormalized, SolverConfig{}), InputError);
}

TEST(RankEdges, DescendingWithStableTies) {
  const Hypergraph h = gen_cockroach(3);
  const EigenPair f = fiedler(h, LaplacianKind::kUnnormalized, SolverConfig{});
  const auto ranked = rank_edges(h, LaplacianKind::kUnnormalized, f.vector);
  ASSERT_EQ(ranked.size(), h.num_edges());
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    EXPECT_GE(ranked[i - 1].score, ranked[i].score);
  }
  EXPECT_NEAR(ranked[0].score, 0.0371, 0.001);
}

TEST(Oracle, MatchesNaiveEnumeration) {
  for (std::uint64_t s = 0; s < 12; ++s) {
    const Hypergraph h = gen_connected_uniform(7, 3, 6, s % 2 == 1, s);
    for (int p : {2, 3}) {
      double best = INFINITY;
      std::vector<int> label(7, 0);
      for (;;) {
        std::vector<bool> used(p, false);
        for (int l : label) used[l] = true;
        bool all = true;
        for (bool u : used) all = all && u;
        if (all) best = std::min(best, naive_ratio_cut(h, label, p));
        int j = 0;
        while (j < 7 && ++label[j] == p) label[j++] = 0;
        if (j == 7) break;
      }
      const PartitionResult r = oracle_min_ratio_cut(h, p);
      EXPECT_NEAR(r.metrics.ratio_cut, best, 1e-12);
      EXPECT_EQ(r.partition.num_clusters(), p);
      EXPECT_FALSE(r.fiedler.has_value());
    }
  }
}

TEST(Oracle, NeverWorseThanScoreCut) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Hypergraph h = gen_connected_uniform(9, 3, 9, true, 40 + s);
    EXPECT_LE(oracle_min_ratio_cut(h, 2).metrics.ratio_cut,
              score_partition(h, 2, LaplacianKind::kUnnormalized, SolverConfig{}).metrics.ratio_cut *
                  (1 + 1e-12));
  }
}

TEST(Oracle, CockroachOptimumCutsOneAntenna) {
  // A single cut edge splitting t nodes from 3t beats the balanced split.
  const PartitionResult r = oracle_min_ratio_cut(gen_cockroach(3), 2);
  EXPECT_NEAR(r.metrics.classical_ratio_cut, 4.0 / 9.0, 1e-15);
  EXPECT_EQ(r.removed.size(), 1u);
}

TEST(Oracle, Guards) {
  EXPECT_THROW(oracle_min_ratio_cut(gen_cockroach(5), 2), InputError);
  EXPECT_THROW(oracle_min_ratio_cut(gen_cockroach(3), 3), InputError);
  EXPECT_THROW(oracle_min_ratio_cut(fixture("h1"), 4), InputError);
}

TEST(MergeSmallest, MergesSmallestPairsFirst) {
  const Partition p({0, 1, 2, 2, 3, 3, 3}, 4);
  EXPECT_EQ(serialize_partition(merge_smallest(p, 3)), "1 2\n3 4\n5 6 7\n");
  EXPECT_EQ(merge_smallest(p, 1).num_clusters(), 1);
  EXPECT_EQ(merge_smallest(p, 5), p);
  EXPECT_THROW(merge_smallest(p, 0), InputError);
}

TEST(Method, Names) {
  for (Method m : {Method::kScoreCut, Method::kSignCut, Method::kOracle}) {
    EXPECT_EQ(method_from_string(to_string(m)), m);
  }
  EXPECT_THROW(method_from_string("spectral"), InputError);
}

TEST(CompareMethods, SharedEigenpairAndPi) {
  const Hypergraph h = gen_cockroach(4);
  const ExperimentRecord r =
      compare_methods(h, 2, LaplacianKind::kUnnormalized, SolverConfig{}, true);
  EXPECT_EQ(r.num_edges, 18u);
  EXPECT_GT(r.lambda1, 0.0);
  EXPECT_EQ(r.r_f, 0.5);    // classical 1, halved for k = 2
  EXPECT_EQ(r.r_p, 0.25);   // classical 2/t
  EXPECT_EQ(r.pi, 50.0);
  EXPECT_TRUE(r.pi_defined);
  ASSERT_TRUE(r.r_oracle.has_value());
  EXPECT_LE(*r.r_oracle, r.r_p);
  EXPECT_EQ(count_singletons(Partition({0, 1, 1, 2}, 3)), 2u);
}

}  // namespace
}  // namespace htcut
