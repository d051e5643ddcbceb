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

#include "htcut/serialize.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "htcut/error.hpp"
#include "json.hpp"
#include "serialize_internal.hpp"

namespace htcut {

namespace {

using json = nlohmann::ordered_json;  // keeps keys in the documented order

json real(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json real_array(std::span<const double> v) {
  json a = json::array();
  for (double x : v) a.push_back(real(x));
  return a;
}

json pair_object(const EigenPair& p) {
  return json{{"lambda", real(p.lambda)},
              {"vector", real_array({p.vector.data(), static_cast<std::size_t>(p.vector.size())})},
              {"residual", real(p.residual)},
              {"restarts_agreeing", p.restarts_agreeing},
              {"multiplicity", p.multiplicity}};
}

json report_object(const CutReport& r) {
  json boundary = json::array();
  for (EdgeId e : r.boundary) boundary.push_back(e + 1);
  return json{{"boundary", boundary},
              {"per_cluster_cost", real_array(r.per_cluster_cost)},
              {"total_cost", real(r.total_cost)},
              {"ratio_cut", real(r.ratio_cut)},
              {"classical_ratio_cut", real(r.classical_ratio_cut)},
              {"n_cut", r.n_cut ? real(*r.n_cut) : json(nullptr)}};
}

}  // namespace

std::string eigenpair_json(const EigenPair& pair) { return pair_object(pair).dump(2); }

std::string eigenpairs_json(const std::vector<EigenPair>& pairs) {
  json a = json::array();
  for (const auto& p : pairs) a.push_back(pair_object(p));
  return json{{"pairs", a}}.dump(2);
}

std::string cut_report_json(const CutReport& report) { return report_object(report).dump(2); }

std::string partition_result_json(const PartitionResult& r, std::optional<double> pi) {
  json removed = json::array();
  for (EdgeId e : r.removed) removed.push_back(e + 1);
  json clusters = json::array();
  for (const auto& c : r.partition.clusters()) {
    json ids = json::array();
    for (NodeId v : c) ids.push_back(v + 1);
    clusters.push_back(ids);
  }
  json out{{"method", to_string(r.method)},
           {"lambda", r.fiedler ? real(r.fiedler->lambda) : json(nullptr)},
           {"removed", removed},
           {"clusters", clusters},
           {"ratio_cut", real(r.metrics.ratio_cut)},
           {"classical_ratio_cut", real(r.metrics.classical_ratio_cut)},
           {"n_cut", r.metrics.n_cut ? real(*r.metrics.n_cut) : json(nullptr)},
           {"components", r.components},
           {"singleton_components", r.singleton_components},
           {"median_fallback", r.median_fallback},
           {"fiedler", r.fiedler ? pair_object(*r.fiedler) : json(nullptr)}};
  if (pi) out["pi"] = real(*pi);
  return out.dump(2);
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::string out = std::to_string(m.rows()) + "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += detail::format_real(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Partition parse_partition(std::string_view text, std::size_t n) {
  std::vector<int> labels(n, -1);
  int cluster = 0;
  int line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      if (p == end) break;
      long long id = 0;
      auto [next, ec] = std::from_chars(p, end, id);
      if (ec != std::errc() || (next < end && *next != ' ' && *next != '\t')) {
        throw ParseError(line_no, "expected a node id");
      }
      if (id < 1 || static_cast<std::size_t>(id) > n) {
        throw ParseError(line_no, "node id " + std::to_string(id) + " out of range");
      }
      if (labels[id - 1] >= 0) {
        throw ParseError(line_no, "node " + std::to_string(id) + " listed twice");
      }
      labels[id - 1] = cluster;
      p = next;
    }
    ++cluster;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (labels[v] < 0) throw InputError("node " + std::to_string(v + 1) + " missing from partition");
  }
  return Partition::canonical_from(labels);
}

}  // namespace htcut
