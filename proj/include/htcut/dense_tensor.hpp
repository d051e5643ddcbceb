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

// Fully materialized order-k tensors. This is the slow reference path used
// to cross-check the edge-list routines in tensor_ops.hpp; it is guarded to
// n^k <= 10^7 entries.

#ifndef HTCUT_DENSE_TENSOR_HPP_
#define HTCUT_DENSE_TENSOR_HPP_

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <vector>

#include "htcut/hypergraph.hpp"
#include "htcut/tensor_ops.hpp"

namespace htcut {

inline constexpr std::size_t kDenseTensorMaxEntries = 10'000'000;

class DenseTensor {
 public:
  // Zero tensor. Throws InputError when dim^order exceeds the guard.
  DenseTensor(int order, std::size_t dim);

  int order() const noexcept { return order_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<const double> data() const noexcept { return data_; }

  // Index tuples are 0-based; the first index varies fastest in data().
  double at(std::span<const std::size_t> index) const;
  double& at(std::span<const std::size_t> index);

  std::size_t count_nonzero() const;
  // Max deviation between an entry and any of its index permutations.
  double symmetry_defect() const;

  // Naive full contractions.
  double contract_all(const Eigen::VectorXd& x) const;        // T x^k
  Eigen::VectorXd contract_but_one(const Eigen::VectorXd& x) const;  // T x^{k-1}
  Eigen::MatrixXd contract_ones() const;                     // T 1^{k-2}

 private:
  std::size_t flat(std::span<const std::size_t> index) const;

  int order_;
  std::size_t dim_;
  std::vector<double> data_;
};

// Adjacency tensor: w_e/(k-1)! at every permutation of each hyperedge.
DenseTensor dense_adjacency(const Hypergraph& h);

// Laplacian tensor of the given kind.
DenseTensor dense_tensor(const Hypergraph& h, LaplacianKind kind);

}  // namespace htcut

#endif  // HTCUT_DENSE_TENSOR_HPP_
