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

// JSON and CSV renderings of results. Node and edge ids are 1-based in all
// of them; edge ids follow the order of the input file.

#ifndef HTCUT_SERIALIZE_HPP_
#define HTCUT_SERIALIZE_HPP_

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "htcut/cuts.hpp"
#include "htcut/eigensolver.hpp"
#include "htcut/hypergraph.hpp"
#include "htcut/partitioner.hpp"

namespace htcut {

// {lambda, vector, residual, restarts_agreeing, multiplicity}
std::string eigenpair_json(const EigenPair& pair);
// {"pairs": [...]}
std::string eigenpairs_json(const std::vector<EigenPair>& pairs);

// {boundary, per_cluster_cost, total_cost, ratio_cut, classical_ratio_cut,
//  n_cut}
std::string cut_report_json(const CutReport& report);

// {method, lambda, removed, clusters, ratio_cut, classical_ratio_cut,
//  n_cut, components, singleton_components, median_fallback, fiedler, pi}
// with lambda and fiedler null for the oracle and pi only when given.
std::string partition_result_json(const PartitionResult& result,
                                  std::optional<double> pi = std::nullopt);

// First line n, then n rows of n comma-separated reals.
std::string matrix_csv(const Eigen::MatrixXd& m);

// Inverse of serialize_partition: one cluster per line, 1-based ids. Every
// node in [1, n] must appear exactly once. Blank and '#' lines are skipped.
Partition parse_partition(std::string_view text, std::size_t n);

}  // namespace htcut

#endif  // HTCUT_SERIALIZE_HPP_
