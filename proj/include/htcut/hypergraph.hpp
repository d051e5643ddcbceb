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

// Weighted k-uniform hypergraphs, node partitions and the text formats used
// to exchange them.
//
// Nodes are 0-indexed in memory. The ".hg" text format and every report use
// 1-indexed ids.

#ifndef HTCUT_HYPERGRAPH_HPP_
#define HTCUT_HYPERGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace htcut {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Hyperedge {
  std::vector<NodeId> nodes;  // strictly increasing
  double weight = 1.0;        // > 0

  friend bool operator==(const Hyperedge&, const Hyperedge&) = default;
};

// Immutable after construction.
//
// The constructor sorts each edge's node list and merges edges with identical
// node sets by summing their weights; the merged edge keeps the position of
// its first occurrence. Throws InputError on any invariant violation.
class Hypergraph {
 public:
  Hypergraph(std::size_t num_nodes, int cardinality,
             std::vector<Hyperedge> edges);

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  int cardinality() const noexcept { return cardinality_; }

  std::span<const Hyperedge> edges() const noexcept { return edges_; }
  const Hyperedge& edge(EdgeId e) const { return edges_.at(e); }

  double total_weight() const noexcept;

  // Copy with edges in lexicographic order of their node lists.
  Hypergraph canonical() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t num_nodes_;
  int cardinality_;
  std::vector<Hyperedge> edges_;
};

// Node -> incident edges, plus weighted degrees d(v) = sum of w_e over e ∋ v.
struct IncidenceData {
  std::vector<std::vector<EdgeId>> node_edges;
  std::vector<double> degrees;
};

IncidenceData degrees(const Hypergraph& h);

// Weighted degree vector only.
std::vector<double> degree_vector(const Hypergraph& h);

// Assignment of every node to one of p non-empty clusters.
class Partition {
 public:
  // Throws InputError unless every id in [0, p) is used and labels are < p.
  Partition(std::vector<int> labels, int num_clusters);

  // Relabels so that cluster ids increase with the smallest member.
  static Partition canonical_from(std::span<const int> labels);

  std::span<const int> labels() const noexcept { return labels_; }
  int label(NodeId v) const { return labels_.at(v); }
  int num_clusters() const noexcept { return num_clusters_; }
  std::size_t num_nodes() const noexcept { return labels_.size(); }

  // Members of each cluster, ascending, clusters ordered by smallest member.
  std::vector<std::vector<NodeId>> clusters() const;
  std::vector<std::size_t> cluster_sizes() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> labels_;
  int num_clusters_;
};

// Connected components after deleting the edges in `removed`. Two nodes are
// connected iff they share a surviving hyperedge, transitively. Component ids
// follow the smallest contained node id.
Partition connected_components(const Hypergraph& h,
                               std::span<const EdgeId> removed = {});

std::size_t count_components(const Hypergraph& h,
                             std::span<const EdgeId> removed = {});

// ".hg" text format: a header line "n m k", then m lines "v1 ... vk [w]" with
// 1-indexed node ids. '#' starts a comment line. CRLF is accepted.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph parse_hypergraph(std::istream& in);
Hypergraph load_hypergraph(const std::string& path);

std::string serialize_hypergraph(const Hypergraph& h);

// One line per cluster, 1-indexed ids, clusters ordered by smallest member.
std::string serialize_partition(const Partition& p);

}  // namespace htcut

#endif  // HTCUT_HYPERGRAPH_HPP_
