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

#include "htcut/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>

#include "htcut/error.hpp"
#include "serialize_internal.hpp"

namespace htcut {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }

  NodeId find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  // Keeps the smaller id as root so roots are component minima.
  void unite(NodeId a, NodeId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<NodeId> parent_;
};

std::vector<int> component_labels(const Hypergraph& h,
                                  std::span<const EdgeId> removed,
                                  int* count) {
  std::vector<bool> skip(h.num_edges(), false);
  for (EdgeId e : removed) {
    if (e >= h.num_edges()) {
      throw InputError("removed edge index " + std::to_string(e) +
                       " out of range");
    }
    skip[e] = true;
  }
  DisjointSets sets(h.num_nodes());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (skip[e]) continue;
    const auto& nodes = h.edge(e).nodes;
    for (std::size_t t = 1; t < nodes.size(); ++t) sets.unite(nodes[0], nodes[t]);
  }
  // Roots are component minima, so scanning nodes in order numbers the
  // components by smallest member.
  std::vector<int> root_label(h.num_nodes(), -1);
  std::vector<int> labels(h.num_nodes());
  int next = 0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    NodeId r = sets.find(v);
    if (root_label[r] < 0) root_label[r] = next++;
    labels[v] = root_label[r];
  }
  *count = next;
  return labels;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
bool parse_number(std::string_view token, T* out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, *out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t num_nodes, int cardinality,
                       std::vector<Hyperedge> edges)
    : num_nodes_(num_nodes), cardinality_(cardinality) {
  if (cardinality < 2) {
    throw InputError("hyperedge cardinality must be at least 2, got " +
                     std::to_string(cardinality));
  }
  std::map<std::vector<NodeId>, std::size_t> seen;
  edges_.reserve(edges.size());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    Hyperedge& e = edges[j];
    if (e.nodes.size() != static_cast<std::size_t>(cardinality)) {
      throw InputError("edge " + std::to_string(j + 1) + " has " +
                       std::to_string(e.nodes.size()) + " nodes, expected " +
                       std::to_string(cardinality));
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw InputError("edge " + std::to_string(j + 1) +
                       " has non-positive weight");
    }
    std::sort(e.nodes.begin(), e.nodes.end());
    for (std::size_t t = 0; t < e.nodes.size(); ++t) {
      if (e.nodes[t] >= num_nodes) {
        throw InputError("edge " + std::to_string(j + 1) + " references node " +
                         std::to_string(e.nodes[t] + 1) + " but n = " +
                         std::to_string(num_nodes));
      }
      if (t > 0 && e.nodes[t] == e.nodes[t - 1]) {
        throw InputError("edge " + std::to_string(j + 1) +
                         " repeats node " + std::to_string(e.nodes[t] + 1));
      }
    }
    auto [it, inserted] = seen.emplace(e.nodes, edges_.size());
    if (inserted) {
      edges_.push_back(std::move(e));
    } else {
      edges_[it->second].weight += e.weight;
    }
  }
}

double Hypergraph::total_weight() const noexcept {
  double s = 0.0;
  for (const auto& e : edges_) s += e.weight;
  return s;
}

Hypergraph Hypergraph::canonical() const {
  std::vector<Hyperedge> sorted = edges_;
  std::sort(sorted.begin(), sorted.end(),
            [](const Hyperedge& a, const Hyperedge& b) { return a.nodes < b.nodes; });
  return Hypergraph(num_nodes_, cardinality_, std::move(sorted));
}

IncidenceData degrees(const Hypergraph& h) {
  IncidenceData data;
  data.node_edges.resize(h.num_nodes());
  data.degrees.assign(h.num_nodes(), 0.0);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (NodeId v : h.edge(e).nodes) {
      data.node_edges[v].push_back(e);
      data.degrees[v] += h.edge(e).weight;
    }
  }
  return data;
}

std::vector<double> degree_vector(const Hypergraph& h) {
  std::vector<double> d(h.num_nodes(), 0.0);
  for (const auto& e : h.edges()) {
    for (NodeId v : e.nodes) d[v] += e.weight;
  }
  return d;
}

Partition::Partition(std::vector<int> labels, int num_clusters)
    : labels_(std::move(labels)), num_clusters_(num_clusters) {
  if (num_clusters < 1) throw InputError("a partition needs at least one cluster");
  std::vector<bool> used(num_clusters, false);
  for (int l : labels_) {
    if (l < 0 || l >= num_clusters) {
      throw InputError("cluster label " + std::to_string(l) +
                       " outside [0, " + std::to_string(num_clusters) + ")");
    }
    used[l] = true;
  }
  for (int c = 0; c < num_clusters; ++c) {
    if (!used[c]) throw InputError("cluster " + std::to_string(c) + " is empty");
  }
}

Partition Partition::canonical_from(std::span<const int> labels) {
  std::map<int, int> renumber;
  std::vector<int> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] =
        renumber.emplace(labels[v], static_cast<int>(renumber.size()));
    out[v] = it->second;
  }
  int p = static_cast<int>(renumber.size());
  return Partition(std::move(out), p);
}

std::vector<std::vector<NodeId>> Partition::clusters() const {
  std::vector<std::vector<NodeId>> by_label(num_clusters_);
  for (NodeId v = 0; v < labels_.size(); ++v) by_label[labels_[v]].push_back(v);
  std::sort(by_label.begin(), by_label.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return by_label;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(num_clusters_, 0);
  for (int l : labels_) ++sizes[l];
  return sizes;
}

Partition connected_components(const Hypergraph& h,
                               std::span<const EdgeId> removed) {
  int count = 0;
  auto labels = component_labels(h, removed, &count);
  return Partition(std::move(labels), count);
}

std::size_t count_components(const Hypergraph& h,
                             std::span<const EdgeId> removed) {
  int count = 0;
  component_labels(h, removed, &count);
  return static_cast<std::size_t>(count);
}

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 0;
  bool have_header = false;
  std::vector<Hyperedge> edges;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') {
      if (eol == text.size()) break;
      continue;
    }
    auto fields = split_fields(line);
    if (!have_header) {
      if (fields.size() != 3) {
        throw ParseError(line_no, "header must be \"n m k\"");
      }
      long long vals[3];
      for (int i = 0; i < 3; ++i) {
        if (!parse_number(fields[i], &vals[i]) || vals[i] < 0) {
          throw ParseError(line_no, "malformed header field '" +
                                        std::string(fields[i]) + "'");
        }
      }
      if (vals[2] < 2) throw ParseError(line_no, "k must be at least 2");
      n = static_cast<std::size_t>(vals[0]);
      m = static_cast<std::size_t>(vals[1]);
      k = static_cast<int>(vals[2]);
      have_header = true;
      edges.reserve(m);
    } else {
      if (edges.size() == m) {
        throw ParseError(line_no, "more than m = " + std::to_string(m) +
                                      " edge lines");
      }
      if (fields.size() != static_cast<std::size_t>(k) &&
          fields.size() != static_cast<std::size_t>(k) + 1) {
        throw ParseError(line_no, "expected " + std::to_string(k) +
                                      " node ids and an optional weight, got " +
                                      std::to_string(fields.size()) + " fields");
      }
      Hyperedge e;
      e.nodes.reserve(k);
      for (int t = 0; t < k; ++t) {
        long long id = 0;
        if (!parse_number(fields[t], &id)) {
          throw ParseError(line_no, "malformed node id '" +
                                        std::string(fields[t]) + "'");
        }
        if (id < 1 || static_cast<unsigned long long>(id) > n) {
          throw ParseError(line_no, "node id " + std::to_string(id) +
                                        " out of range [1, " +
                                        std::to_string(n) + "]");
        }
        NodeId v = static_cast<NodeId>(id - 1);
        if (std::find(e.nodes.begin(), e.nodes.end(), v) != e.nodes.end()) {
          throw ParseError(line_no, "duplicate node " + std::to_string(id) +
                                        " in hyperedge");
        }
        e.nodes.push_back(v);
      }
      if (fields.size() == static_cast<std::size_t>(k) + 1) {
        double w = 0.0;
        if (!parse_number(fields[k], &w)) {
          throw ParseError(line_no, "malformed weight '" +
                                        std::string(fields[k]) + "'");
        }
        if (!(w > 0.0) || !std::isfinite(w)) {
          throw ParseError(line_no, "weight must be positive");
        }
        e.weight = w;
      }
      edges.push_back(std::move(e));
    }
    if (eol == text.size()) break;
  }
  if (!have_header) throw ParseError(0, "missing \"n m k\" header");
  if (edges.size() != m) {
    throw ParseError(0, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(edges.size()));
  }
  return Hypergraph(n, k, std::move(edges));
}

Hypergraph parse_hypergraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return parse_hypergraph(std::string_view(text));
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open hypergraph file '" + path + "'");
  try {
    return parse_hypergraph(in);
  } catch (const ParseError& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

std::string serialize_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.num_nodes()) + " " +
                    std::to_string(h.num_edges()) + " " +
                    std::to_string(h.cardinality()) + "\n";
  for (const auto& e : h.edges()) {
    for (NodeId v : e.nodes) {
      out += std::to_string(v + 1);
      out += ' ';
    }
    out += detail::format_real(e.weight);
    out += '\n';
  }
  return out;
}

std::string serialize_partition(const Partition& p) {
  std::string out;
  auto clusters = p.clusters();
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (std::size_t i = 0; i < clusters[c].size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(clusters[c][i] + 1);
    }
    out += '\n';
  }
  return out;
}

}  // namespace htcut
