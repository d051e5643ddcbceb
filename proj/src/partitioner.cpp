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

#include "htcut/partitioner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <string>

#include "htcut/error.hpp"

namespace htcut {

namespace {

constexpr double kScoreTieTol = 1e-9;

PartitionResult finish(const Hypergraph& h, Partition part, Method method,
                       std::vector<EdgeId> removed) {
  PartitionResult r{std::move(part), std::move(removed), method, std::nullopt, {}, false};
  r.metrics = cut_cost(h, r.partition);
  const Partition comps = connected_components(h, r.removed);
  r.components = comps.num_clusters();
  r.singleton_components = count_singletons(comps);
  return r;
}

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::kScoreCut: return "score";
    case Method::kSignCut: return "sign";
    case Method::kOracle: return "oracle";
  }
  return "?";
}

Method method_from_string(std::string_view s) {
  for (Method m : {Method::kScoreCut, Method::kSignCut, Method::kOracle}) {
    if (s == to_string(m)) return m;
  }
  throw InputError("unknown method '" + std::string(s) + "'");
}

std::vector<ScoredHyperedge> rank_edges(const Hypergraph& h, LaplacianKind kind,
                                        const Eigen::VectorXd& x) {
  const auto scores = edge_scores(h, kind, x);
  std::vector<ScoredHyperedge> out;
  out.reserve(scores.size());
  for (EdgeId e = 0; e < scores.size(); ++e) {
    out.push_back({e, h.edge(e).nodes, scores[e]});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ScoredHyperedge& a, const ScoredHyperedge& b) {
                     return a.score > b.score;
                   });
  return out;
}

PartitionResult score_partition(const Hypergraph& h, int p, LaplacianKind kind,
                                const EigenPair& fiedler_pair) {
  if (p < 2 || static_cast<std::size_t>(p) > h.num_nodes()) {
    throw InputError("cluster count p must satisfy 2 <= p <= n");
  }
  const auto ranked = rank_edges(h, kind, fiedler_pair.vector);
  const double top = ranked.empty() ? 0.0 : std::abs(ranked.front().score);
  std::vector<EdgeId> removed;
  Partition comps = connected_components(h);
  std::size_t next = 0;
  while (comps.num_clusters() < p && next < ranked.size()) {
    // Scores equal up to rounding form one batch.
    const double lead = ranked[next].score;
    const double slack = kScoreTieTol * std::max(std::abs(lead), top * 1e-6);
    const std::size_t batch_start = removed.size();
    while (next < ranked.size() && lead - ranked[next].score <= slack) {
      removed.push_back(ranked[next++].edge);
    }
    std::sort(removed.begin() + batch_start, removed.end());
    comps = connected_components(h, removed);
  }
  PartitionResult r = finish(h, merge_smallest(comps, p), Method::kScoreCut,
                             std::move(removed));
  r.fiedler = fiedler_pair;
  return r;
}

PartitionResult score_partition(const Hypergraph& h, int p, LaplacianKind kind,
                                const SolverConfig& cfg) {
  if (p < 2 || static_cast<std::size_t>(p) > h.num_nodes()) {
    throw InputError("cluster count p must satisfy 2 <= p <= n");
  }
  return score_partition(h, p, kind, fiedler(h, kind, cfg));
}

PartitionResult sign_partition(const Hypergraph& h, const EigenPair& fiedler_pair) {
  const Eigen::VectorXd& f = fiedler_pair.vector;
  const std::size_t n = h.num_nodes();
  if (n < 2) throw InputError("sign partition needs at least 2 nodes");
  std::vector<int> side(n);
  std::size_t negatives = 0;
  for (std::size_t i = 0; i < n; ++i) {
    side[i] = f[i] < 0.0 ? 0 : 1;
    negatives += side[i] == 0;
  }
  bool fallback = false;
  if (negatives == 0 || negatives == n) {
    // Lower half by value (stable in node id) against the rest.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&f](std::size_t a, std::size_t b) { return f[a] < f[b]; });
    for (std::size_t r = 0; r < n; ++r) side[order[r]] = r < n / 2 ? 0 : 1;
    fallback = true;
  }
  Partition split = Partition::canonical_from(side);
  std::vector<EdgeId> removed = boundary_edges(h, split);
  PartitionResult r = finish(h, std::move(split), Method::kSignCut, std::move(removed));
  r.fiedler = fiedler_pair;
  r.median_fallback = fallback;
  return r;
}

PartitionResult sign_partition(const Hypergraph& h, LaplacianKind kind,
                               const SolverConfig& cfg) {
  return sign_partition(h, fiedler(h, kind, cfg));
}

PartitionResult oracle_min_ratio_cut(const Hypergraph& h, int p) {
  const std::size_t n = h.num_nodes();
  const bool allowed = (p == 2 && n <= 16) || (p == 3 && n <= 10);
  if (!allowed || static_cast<std::size_t>(p) > n) {
    throw InputError("oracle enumeration limited to p = 2 with n <= 16 or p = 3 "
                     "with n <= 10");
  }
  // Restricted growth strings: labels[0] = 0, labels[i] <= 1 + max(prefix).
  std::vector<int> labels(n, 0);
  std::vector<int> prefix_max(n, 0);
  std::vector<int> best;
  double best_value = std::numeric_limits<double>::infinity();
  auto evaluate = [&] {
    if (prefix_max[n - 1] != p - 1) return;
    const double v = ratio_cut(h, Partition(labels, p));
    // Near-equal values count as ties and keep the earlier label vector.
    if (best.empty() || v < best_value - 1e-12 * std::max(1.0, std::abs(best_value))) {
      best_value = v;
      best = labels;
    }
  };
  // Iterative odometer over growth strings in lexicographic order.
  for (;;) {
    evaluate();
    std::size_t i = n;
    bool advanced = false;
    while (i-- > 1) {
      const int cap = std::min(prefix_max[i - 1] + 1, p - 1);
      if (labels[i] < cap) {
        ++labels[i];
        prefix_max[i] = std::max(prefix_max[i - 1], labels[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          labels[j] = 0;
          prefix_max[j] = prefix_max[j - 1];
        }
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  Partition part(best, p);
  std::vector<EdgeId> removed = boundary_edges(h, part);
  return finish(h, std::move(part), Method::kOracle, std::move(removed));
}

Partition merge_smallest(const Partition& part, int p) {
  if (p < 1) throw InputError("cannot merge into fewer than one cluster");
  std::vector<int> labels(part.labels().begin(), part.labels().end());
  auto sizes = part.cluster_sizes();
  std::vector<bool> alive(sizes.size(), true);
  int count = part.num_clusters();
  while (count > p) {
    // Two smallest live clusters; ids already follow the smallest member.
    int a = -1;
    int b = -1;
    for (int c = 0; c < static_cast<int>(sizes.size()); ++c) {
      if (!alive[c]) continue;
      if (a < 0 || sizes[c] < sizes[a]) {
        b = a;
        a = c;
      } else if (b < 0 || sizes[c] < sizes[b]) {
        b = c;
      }
    }
    const int keep = std::min(a, b);
    const int drop = std::max(a, b);
    for (int& l : labels) {
      if (l == drop) l = keep;
    }
    sizes[keep] += sizes[drop];
    alive[drop] = false;
    --count;
  }
  return Partition::canonical_from(labels);
}

std::size_t count_singletons(const Partition& p) {
  std::size_t s = 0;
  for (std::size_t size : p.cluster_sizes()) s += size == 1;
  return s;
}

ExperimentRecord compare_methods(const Hypergraph& h, int p, LaplacianKind kind,
                                 const SolverConfig& cfg, bool with_oracle) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord rec;
  rec.num_edges = h.num_edges();
  const EigenPair f = fiedler(h, kind, cfg);
  rec.lambda1 = f.lambda;
  const PartitionResult score = score_partition(h, p, kind, f);
  rec.r_p = score.metrics.ratio_cut;
  rec.components_score = score.components;
  rec.singletons_score = score.singleton_components;
  if (p == 2) {
    const PartitionResult sign = sign_partition(h, f);
    rec.r_f = sign.metrics.ratio_cut;
    rec.components_sign = sign.components;
    rec.singletons_sign = sign.singleton_components;
  }
  if (rec.r_f > 0.0) {
    rec.pi = percentage_improvement(rec.r_f, rec.r_p);
  } else {
    rec.pi = 0.0;
    rec.pi_defined = false;
  }
  if (with_oracle) {
    const std::size_t n = h.num_nodes();
    if ((p == 2 && n <= 16) || (p == 3 && n <= 10)) {
      rec.r_oracle = oracle_min_ratio_cut(h, p).metrics.ratio_cut;
    }
  }
  rec.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rec;
}

}  // namespace htcut
