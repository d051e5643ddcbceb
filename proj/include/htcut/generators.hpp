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

// Seeded instance generators and the small named fixtures.
//
// Every generator draws from std::mt19937_64 seeded through std::seed_seq
// with (seed low word, seed high word, stream). Corpora use one stream per
// instance, so instance i does not depend on how many came before it.

#ifndef HTCUT_GENERATORS_HPP_
#define HTCUT_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "htcut/hypergraph.hpp"

namespace htcut {

std::mt19937_64 seeded_rng(std::uint64_t seed, std::uint64_t stream = 0);

// G(n, p): each pair independently, unit weights.
Hypergraph gen_er(std::size_t n, double p, std::uint64_t seed);

// Two blocks [0, n1) and [n1, n1 + n2); pairs inside a block with
// probability p, across with probability q.
Hypergraph gen_sbm_graph(std::size_t n1, std::size_t n2, double p, double q,
                         std::uint64_t seed);

// k-uniform analogue: a k-subset inside one block with probability p, any
// other k-subset with probability q. Enumerates subsets one by one when
// C(n, k) <= 10^7, otherwise draws binomial counts and samples subsets.
// Throws InputError when the expected edge count exceeds 10^6.
Hypergraph gen_sbm_hypergraph(std::size_t n1, std::size_t n2, int k, double p,
                              double q, std::uint64_t seed);

// m distinct k-subsets of n nodes drawn uniformly. Weights are 1, or drawn
// from U[0.5, 2) when `weighted` is set.
Hypergraph gen_uniform(std::size_t n, int k, std::size_t m, bool weighted,
                       std::uint64_t seed);

// As gen_uniform, redrawn (on further streams) until connected.
Hypergraph gen_connected_uniform(std::size_t n, int k, std::size_t m,
                                 bool weighted, std::uint64_t seed);

// Cockroach graph on 4t nodes: paths v1..v2t and v(2t+1)..v4t plus rungs
// v(t+i) - v(3t+i), i = 1..t. 5t - 2 unit edges, t >= 2.
Hypergraph gen_cockroach(int t);

// Named fixtures: h1, h2_example2, appendix_b2, same_graph_pair_a,
// same_graph_pair_b. Throws InputError on an unknown name.
Hypergraph fixture(std::string_view name);
std::string_view fixture_text(std::string_view name);
const std::vector<std::string>& fixture_names();

enum class Family { kErdosRenyi, kGraphSbm, kHypergraphSbm, kCockroach, kFixture };

const char* to_string(Family f);
Family family_from_string(std::string_view s);

struct GenSpec {
  Family family = Family::kErdosRenyi;
  std::size_t n = 30;   // ER
  std::size_t n1 = 15;  // SBM blocks
  std::size_t n2 = 15;
  int k = 2;            // hypergraph SBM
  int t = 3;            // cockroach
  double p = 0.3;
  double q = 0.05;
  std::string name;     // fixture
  std::uint64_t seed = 0;
};

Hypergraph generate(const GenSpec& spec);

}  // namespace htcut

#endif  // HTCUT_GENERATORS_HPP_
