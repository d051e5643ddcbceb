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

// Cut metrics for partitions of k-uniform hypergraphs.
//
// A hyperedge is on the boundary when it meets two or more clusters. The
// cost charged to cluster C is sum over boundary edges e of |C ∩ e| w_e, so
// an edge that barely touches C costs it little.

#ifndef HTCUT_CUTS_HPP_
#define HTCUT_CUTS_HPP_

#include <optional>
#include <vector>

#include "htcut/hypergraph.hpp"

namespace htcut {

struct CutReport {
  std::vector<EdgeId> boundary;          // ascending
  std::vector<double> per_cluster_cost;  // w_h(C_i)
  double total_cost = 0.0;               // (1/k) sum_i w_h(C_i)
  double ratio_cut = 0.0;                // sum_i w_h(C_i) / (k |C_i|^{k/2})
  double classical_ratio_cut = 0.0;      // sum_i w_h(C_i) / |C_i|^{k/2}
  std::optional<double> n_cut;           // empty if a cluster has zero volume
};

std::vector<EdgeId> boundary_edges(const Hypergraph& h, const Partition& p);

// Per-cluster costs w_h(C_i).
std::vector<double> cluster_costs(const Hypergraph& h, const Partition& p);

CutReport cut_cost(const Hypergraph& h, const Partition& p);

// Per-cluster costs in the clique expansion: every hyperedge becomes a
// clique whose pair weights are w_e, and a graph edge leaving C costs w.
std::vector<double> clique_cut_cost(const Hypergraph& h, const Partition& p);

double ratio_cut(const Hypergraph& h, const Partition& p);

// The same sum without the 1/k factor. At k = 2 this is the textbook
// cut(C, C̄)/|C| + cut(C̄, C)/|C̄| ratio cut.
double classical_ratio_cut(const Hypergraph& h, const Partition& p);

// Volumes use weighted hypergraph degrees. Throws InputError if a cluster
// has zero volume.
double n_cut(const Hypergraph& h, const Partition& p);
std::vector<double> volumes(const Hypergraph& h, const Partition& p);

struct ConductanceResult {
  double phi = 0.0;
  std::vector<NodeId> side;  // a minimizing subset, ascending
};

// Brute force over all 2^{n-1} - 1 bipartitions, phi(C) = w(boundary) /
// min(vol C, vol C̄). Sides with zero volume are skipped. Throws InputError
// for n < 2 or n > kConductanceMaxNodes.
inline constexpr std::size_t kConductanceMaxNodes = 20;
ConductanceResult conductance(const Hypergraph& h);

// (r_f - r_p) / r_f * 100. Throws InputError unless r_f > 0.
double percentage_improvement(double r_f, double r_p);

}  // namespace htcut

#endif  // HTCUT_CUTS_HPP_
