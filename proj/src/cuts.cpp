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

#include "htcut/cuts.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "htcut/error.hpp"

namespace htcut {

namespace {

void check_cover(const Hypergraph& h, const Partition& p) {
  if (p.num_nodes() != h.num_nodes()) {
    throw InputError("partition covers " + std::to_string(p.num_nodes()) +
                     " nodes, hypergraph has " + std::to_string(h.num_nodes()));
  }
}

bool crosses(const Hyperedge& e, const Partition& p) {
  const int first = p.label(e.nodes.front());
  for (NodeId v : e.nodes) {
    if (p.label(v) != first) return true;
  }
  return false;
}

double half_power(double base, int k) {
  return k % 2 == 0 ? std::pow(base, k / 2) : std::pow(base, 0.5 * k);
}

}  // namespace

std::vector<EdgeId> boundary_edges(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (crosses(h.edge(e), p)) out.push_back(e);
  }
  return out;
}

std::vector<double> cluster_costs(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  std::vector<double> cost(p.num_clusters(), 0.0);
  for (const auto& e : h.edges()) {
    if (!crosses(e, p)) continue;
    for (NodeId v : e.nodes) cost[p.label(v)] += e.weight;
  }
  return cost;
}

std::vector<double> volumes(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  const auto d = degree_vector(h);
  std::vector<double> vol(p.num_clusters(), 0.0);
  for (std::size_t v = 0; v < d.size(); ++v) vol[p.label(v)] += d[v];
  return vol;
}

CutReport cut_cost(const Hypergraph& h, const Partition& p) {
  const int k = h.cardinality();
  CutReport r;
  r.boundary = boundary_edges(h, p);
  r.per_cluster_cost = cluster_costs(h, p);
  const auto sizes = p.cluster_sizes();
  const auto vol = volumes(h, p);
  double sum = 0.0;
  bool volumes_ok = true;
  double ncut = 0.0;
  for (int i = 0; i < p.num_clusters(); ++i) {
    const double c = r.per_cluster_cost[i];
    sum += c;
    const double q = c / half_power(static_cast<double>(sizes[i]), k);
    r.classical_ratio_cut += q;
    r.ratio_cut += q / k;
    if (vol[i] > 0.0) {
      ncut += c / (k * half_power(vol[i], k));
    } else {
      volumes_ok = false;
    }
  }
  r.total_cost = sum / k;
  if (volumes_ok) r.n_cut = ncut;
  return r;
}

std::vector<double> clique_cut_cost(const Hypergraph& h, const Partition& p) {
  check_cover(h, p);
  std::vector<double> cost(p.num_clusters(), 0.0);
  for (const auto& e : h.edges()) {
    for (std::size_t a = 0; a < e.nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < e.nodes.size(); ++b) {
        const int la = p.label(e.nodes[a]);
        const int lb = p.label(e.nodes[b]);
        if (la == lb) continue;
        cost[la] += e.weight;
        cost[lb] += e.weight;
      }
    }
  }
  return cost;
}

double ratio_cut(const Hypergraph& h, const Partition& p) {
  return cut_cost(h, p).ratio_cut;
}

double classical_ratio_cut(const Hypergraph& h, const Partition& p) {
  return cut_cost(h, p).classical_ratio_cut;
}

double n_cut(const Hypergraph& h, const Partition& p) {
  auto r = cut_cost(h, p);
  if (!r.n_cut) throw InputError("n_cut undefined: a cluster has zero volume");
  return *r.n_cut;
}

ConductanceResult conductance(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  if (n < 2 || n > kConductanceMaxNodes) {
    throw InputError("conductance brute force needs 2 <= n <= " +
                     std::to_string(kConductanceMaxNodes) + ", got n = " +
                     std::to_string(n));
  }
  const auto d = degree_vector(h);
  double total_vol = 0.0;
  for (double v : d) total_vol += v;

  // Edge masks make the boundary test a pair of AND operations.
  std::vector<std::uint32_t> masks;
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (NodeId v : e.nodes) m |= 1u << v;
    masks.push_back(m);
  }

  ConductanceResult best;
  best.phi = std::numeric_limits<double>::infinity();
  std::uint32_t best_set = 0;
  // The last node always sits outside C, which visits each bipartition once.
  const std::uint32_t limit = 1u << (n - 1);
  for (std::uint32_t set = 1; set < limit; ++set) {
    double vol = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      if (set >> v & 1u) vol += d[v];
    }
    const double denom = std::min(vol, total_vol - vol);
    if (!(denom > 0.0)) continue;
    double cut = 0.0;
    for (std::size_t e = 0; e < masks.size(); ++e) {
      const std::uint32_t in = masks[e] & set;
      if (in != 0 && in != masks[e]) cut += h.edge(static_cast<EdgeId>(e)).weight;
    }
    const double phi = cut / denom;
    if (phi < best.phi) {
      best.phi = phi;
      best_set = set;
    }
  }
  if (best_set == 0) throw InputError("conductance undefined: no side has positive volume");
  for (std::size_t v = 0; v < n; ++v) {
    if (best_set >> v & 1u) best.side.push_back(static_cast<NodeId>(v));
  }
  return best;
}

double percentage_improvement(double r_f, double r_p) {
  if (!(r_f > 0.0)) {
    throw InputError("percentage improvement needs a positive reference value");
  }
  return (r_f - r_p) / r_f * 100.0;
}

}  // namespace htcut
