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

// Spectral partitioning by hyperedge scores, the sign-split baseline and a
// brute-force ratio-cut optimum for small instances.

#ifndef HTCUT_PARTITIONER_HPP_
#define HTCUT_PARTITIONER_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "htcut/cuts.hpp"
#include "htcut/eigensolver.hpp"
#include "htcut/generators.hpp"
#include "htcut/hypergraph.hpp"
#include "htcut/tensor_ops.hpp"

namespace htcut {

enum class Method { kScoreCut, kSignCut, kOracle };

const char* to_string(Method m);
Method method_from_string(std::string_view s);

struct ScoredHyperedge {
  EdgeId edge = 0;
  std::vector<NodeId> nodes;  // 0-based
  double score = 0.0;
};

// Edge scores under x, descending, ties by ascending edge id.
std::vector<ScoredHyperedge> rank_edges(const Hypergraph& h, LaplacianKind kind,
                                        const Eigen::VectorXd& x);

struct PartitionResult {
  Partition partition;
  std::vector<EdgeId> removed;       // in removal order
  Method method = Method::kScoreCut;
  std::optional<EigenPair> fiedler;  // absent for the oracle
  CutReport metrics;
  bool median_fallback = false;      // sign split degenerated
  // Connected components once `removed` is deleted, and how many of them
  // are single nodes. The partition is these components, or a coarsening
  // of them when there are more than requested.
  std::size_t components = 0;
  std::size_t singleton_components = 0;
};

// Merges the two smallest clusters (ties: smaller first member) until p
// remain.
Partition merge_smallest(const Partition& part, int p);

// Removes edges by descending score until the remaining hypergraph has at
// least p components. Edges whose scores agree to a relative 1e-9 are
// removed together before connectivity is rechecked; symmetric instances
// produce such ties and splitting them is arbitrary. Surplus components
// are merged smallest-first so that exactly p clusters come back. Throws
// InputError if p < 2 or p > n.
PartitionResult score_partition(const Hypergraph& h, int p, LaplacianKind kind,
                                const SolverConfig& cfg);
PartitionResult score_partition(const Hypergraph& h, int p, LaplacianKind kind,
                                const EigenPair& fiedler_pair);

// Splits nodes by the sign of the Fiedler vector (zero joins the
// nonnegative side). The removed edges are those crossing the split. If
// one side is empty the split is made at the median entry instead.
PartitionResult sign_partition(const Hypergraph& h, LaplacianKind kind,
                               const SolverConfig& cfg);
PartitionResult sign_partition(const Hypergraph& h, const EigenPair& fiedler_pair);

// Exhaustive minimum of ratio_cut over partitions into exactly p clusters.
// Ties go to the lexicographically smallest label vector. Limited to
// p = 2 with n <= 16, or p = 3 with n <= 10.
PartitionResult oracle_min_ratio_cut(const Hypergraph& h, int p);

struct ExperimentRecord {
  GenSpec spec;
  std::size_t index = 0;
  std::size_t num_edges = 0;
  double lambda1 = 0.0;
  double r_f = 0.0;  // sign method ratio cut
  double r_p = 0.0;  // score method ratio cut
  double pi = 0.0;
  bool pi_defined = true;  // false when r_f = 0
  std::optional<double> r_oracle;
  std::size_t components_sign = 0;
  std::size_t components_score = 0;
  std::size_t singletons_sign = 0;  // singleton components
  std::size_t singletons_score = 0;
  double runtime_ms = 0.0;
};

// Sign method against score method with one shared eigensolve. The oracle
// is included when requested and within its size limits.
ExperimentRecord compare_methods(const Hypergraph& h, int p, LaplacianKind kind,
                                 const SolverConfig& cfg, bool with_oracle = false);

std::size_t count_singletons(const Partition& p);

}  // namespace htcut

#endif  // HTCUT_PARTITIONER_HPP_
