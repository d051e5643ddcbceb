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

#include "htcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "htcut/error.hpp"

namespace htcut {

namespace {

void check_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError(std::string(what) + " must lie in [0, 1]");
  }
}

double binomial_coefficient(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(c);
}

// Advances a strictly increasing k-combination of [0, n). False on wrap.
bool next_combination(std::vector<NodeId>& c, std::size_t n) {
  const std::size_t k = c.size();
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<NodeId> random_subset(std::mt19937_64& rng, NodeId lo, std::size_t size,
                                  int k) {
  std::vector<NodeId> pool(size);
  for (std::size_t i = 0; i < size; ++i) pool[i] = lo + static_cast<NodeId>(i);
  // Partial Fisher-Yates.
  for (int i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, size - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

constexpr std::string_view kH1 =
    "# Three 3-edges along a chain of five nodes.\n"
    "5 3 3\n"
    "1 2 3 1\n"
    "2 3 4 1\n"
    "3 4 5 1\n";

// Edge order follows the reference hyperedge-score table. Pairing the
// reference weight list with the edges in list order makes the reference
// eigenvector fail the eigen-equation by 5e-2. With {1,2,3} = {2,3,4} = 1,
// {1,8,11} = 3 and 2 elsewhere it refines to an exact eigenpair
// (lambda = 0.037157) and reproduces every tabulated score.
constexpr std::string_view kH2 =
    "# Twelve-node 3-uniform example; see the note in generators.cpp.\n"
    "12 9 3\n"
    "1 2 3 1\n"
    "4 5 6 2\n"
    "2 3 4 1\n"
    "3 4 7 2\n"
    "1 8 11 3\n"
    "4 6 7 2\n"
    "8 9 10 2\n"
    "10 11 12 2\n"
    "9 10 12 2\n";

constexpr std::string_view kH4 =
    "5 3 4\n"
    "1 2 3 4 1\n"
    "2 3 4 5 1\n"
    "1 2 3 5 1\n";

constexpr std::string_view kPairA =
    "# One 4-edge; its clique expansion equals that of same_graph_pair_b.\n"
    "4 1 4\n"
    "1 2 3 4 1\n";

constexpr std::string_view kPairB =
    "4 4 3\n"
    "1 2 3 0.5\n"
    "1 2 4 0.5\n"
    "1 3 4 0.5\n"
    "2 3 4 0.5\n";

struct NamedFixture {
  std::string_view name;
  std::string_view text;
};

constexpr NamedFixture kFixtures[] = {
    {"h1", kH1},
    {"h2_example2", kH2},
    {"appendix_b2", kH4},
    {"same_graph_pair_a", kPairA},
    {"same_graph_pair_b", kPairB},
};

}  // namespace

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

Hypergraph gen_er(std::size_t n, double p, std::uint64_t seed) {
  return gen_sbm_graph(n, 0, p, p, seed);
}

Hypergraph gen_sbm_graph(std::size_t n1, std::size_t n2, double p, double q,
                         std::uint64_t seed) {
  check_probability(p, "p");
  check_probability(q, "q");
  auto rng = seeded_rng(seed);
  std::bernoulli_distribution intra(p);
  std::bernoulli_distribution inter(q);
  const std::size_t n = n1 + n2;
  std::vector<Hyperedge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const bool same = (i < n1) == (j < n1);
      if (same ? intra(rng) : inter(rng)) edges.push_back({{i, j}, 1.0});
    }
  }
  return Hypergraph(n, 2, std::move(edges));
}

Hypergraph gen_sbm_hypergraph(std::size_t n1, std::size_t n2, int k, double p,
                              double q, std::uint64_t seed) {
  check_probability(p, "p");
  check_probability(q, "q");
  const std::size_t n = n1 + n2;
  if (k < 2 || static_cast<std::size_t>(k) > n) {
    throw InputError("hypergraph SBM needs 2 <= k <= n");
  }
  const double in1 = binomial_coefficient(n1, k);
  const double in2 = binomial_coefficient(n2, k);
  const double all = binomial_coefficient(n, k);
  const double across = all - in1 - in2;
  const double expected = p * (in1 + in2) + q * across;
  if (expected > 1e6) {
    throw InputError("hypergraph SBM expects " + std::to_string(expected) +
                     " edges, above the 10^6 guard");
  }
  auto rng = seeded_rng(seed);
  std::vector<Hyperedge> edges;
  auto inside_one_block = [n1](const std::vector<NodeId>& c) {
    return (c.front() < n1) == (c.back() < n1);
  };

  if (all <= 1e7) {
    std::bernoulli_distribution intra(p);
    std::bernoulli_distribution inter(q);
    std::vector<NodeId> c(k);
    for (int i = 0; i < k; ++i) c[i] = static_cast<NodeId>(i);
    do {
      if (inside_one_block(c) ? intra(rng) : inter(rng)) edges.push_back({c, 1.0});
    } while (next_combination(c, n));
    return Hypergraph(n, k, std::move(edges));
  }

  std::set<std::vector<NodeId>> chosen;
  auto draw = [&](double population, double prob, auto&& sample) {
    if (population <= 0.0 || prob <= 0.0) return;
    std::binomial_distribution<long long> count(static_cast<long long>(population), prob);
    const long long target = count(rng);
    long long got = 0;
    while (got < target) {
      if (chosen.insert(sample()).second) ++got;
    }
  };
  draw(in1, p, [&] { return random_subset(rng, 0, n1, k); });
  draw(in2, p, [&] { return random_subset(rng, static_cast<NodeId>(n1), n2, k); });
  draw(across, q, [&] {
    for (;;) {
      auto c = random_subset(rng, 0, n, k);
      if (!inside_one_block(c)) return c;
    }
  });
  for (const auto& c : chosen) edges.push_back({c, 1.0});
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph gen_uniform(std::size_t n, int k, std::size_t m, bool weighted,
                       std::uint64_t seed) {
  if (k < 2 || static_cast<std::size_t>(k) > n) throw InputError("need 2 <= k <= n");
  if (static_cast<double>(m) > binomial_coefficient(n, k)) {
    throw InputError("more edges requested than k-subsets exist");
  }
  auto rng = seeded_rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::set<std::vector<NodeId>> seen;
  std::vector<Hyperedge> edges;
  while (edges.size() < m) {
    auto c = random_subset(rng, 0, n, k);
    if (!seen.insert(c).second) continue;
    edges.push_back({std::move(c), weighted ? weight(rng) : 1.0});
  }
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph gen_connected_uniform(std::size_t n, int k, std::size_t m, bool weighted,
                                 std::uint64_t seed) {
  for (std::uint64_t attempt = 0; attempt < 10000; ++attempt) {
    const std::uint64_t s = attempt == 0 ? seed : seeded_rng(seed, attempt)();
    Hypergraph h = gen_uniform(n, k, m, weighted, s);
    if (count_components(h) == 1) return h;
  }
  throw InputError("could not draw a connected hypergraph with these parameters");
}

Hypergraph gen_cockroach(int t) {
  if (t < 2) throw InputError("cockroach graph needs t >= 2");
  const NodeId tt = static_cast<NodeId>(t);
  std::vector<Hyperedge> edges;
  for (NodeId i = 0; i + 1 < 2 * tt; ++i) edges.push_back({{i, i + 1}, 1.0});
  for (NodeId i = 2 * tt; i + 1 < 4 * tt; ++i) edges.push_back({{i, i + 1}, 1.0});
  for (NodeId i = 0; i < tt; ++i) edges.push_back({{tt + i, 3 * tt + i}, 1.0});
  return Hypergraph(4 * tt, 2, std::move(edges));
}

std::string_view fixture_text(std::string_view name) {
  for (const auto& f : kFixtures) {
    if (f.name == name) return f.text;
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

Hypergraph fixture(std::string_view name) {
  return parse_hypergraph(fixture_text(name));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : kFixtures) v.emplace_back(f.name);
    return v;
  }();
  return names;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kErdosRenyi: return "er";
    case Family::kGraphSbm: return "sbm";
    case Family::kHypergraphSbm: return "hysbm";
    case Family::kCockroach: return "cockroach";
    case Family::kFixture: return "fixture";
  }
  return "?";
}

Family family_from_string(std::string_view s) {
  for (Family f : {Family::kErdosRenyi, Family::kGraphSbm, Family::kHypergraphSbm,
                   Family::kCockroach, Family::kFixture}) {
    if (s == to_string(f)) return f;
  }
  throw InputError("unknown generator family '" + std::string(s) + "'");
}

Hypergraph generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kErdosRenyi: return gen_er(spec.n, spec.p, spec.seed);
    case Family::kGraphSbm: return gen_sbm_graph(spec.n1, spec.n2, spec.p, spec.q, spec.seed);
    case Family::kHypergraphSbm:
      return gen_sbm_hypergraph(spec.n1, spec.n2, spec.k, spec.p, spec.q, spec.seed);
    case Family::kCockroach: return gen_cockroach(spec.t);
    case Family::kFixture: return fixture(spec.name);
  }
  throw InputError("unknown generator family");
}

}  // namespace htcut
