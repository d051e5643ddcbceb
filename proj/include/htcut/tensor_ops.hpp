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

// Evaluations of the order-k Laplacian tensor of a k-uniform hypergraph.
//
// The adjacency tensor holds w_e/(k-1)! at every index permutation of a
// hyperedge; the Laplacian is degree-diagonal minus adjacency. The normalized
// Laplacian has unit diagonal and off-diagonal entries scaled by
// prod_t d_t^{-1/k}. Nothing here materializes the n^k tensor: every routine
// walks the edge list, O(m k) for values and O(m k^3) for the Jacobian.
//
// With y_i = x_i (unnormalized) or y_i = x_i / d_i^{1/k} (normalized):
//
//   L x^k              = sum_e w_e (sum_{i in e} y_i^k - k prod_{i in e} y_i)
//   [L x^{k-1}]_i      = (1/k) d(L x^k)/dx_i

#ifndef HTCUT_TENSOR_OPS_HPP_
#define HTCUT_TENSOR_OPS_HPP_

#include <Eigen/Dense>
#include <vector>

#include "htcut/hypergraph.hpp"

namespace htcut {

enum class LaplacianKind { kUnnormalized, kNormalized };

const char* to_string(LaplacianKind kind);

// Binds a hypergraph to a Laplacian flavour and caches the per-node scale
// factors. Throws InputError if kind is normalized and a node is isolated.
// The hypergraph must outlive the operator.
class LaplacianOperator {
 public:
  LaplacianOperator(const Hypergraph& h, LaplacianKind kind);

  const Hypergraph& hypergraph() const noexcept { return *h_; }
  LaplacianKind kind() const noexcept { return kind_; }
  std::size_t dim() const noexcept { return h_->num_nodes(); }
  int order() const noexcept { return h_->cardinality(); }
  const std::vector<double>& degrees() const noexcept { return degrees_; }

  // L x^k, compensated edge-major summation.
  double objective(const Eigen::VectorXd& x) const;

  // Per-edge terms of the objective, indexed by edge id.
  std::vector<double> edge_scores(const Eigen::VectorXd& x) const;

  // L x^{k-1}.
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  // d(L x^{k-1})/dx = (k-1) L x^{k-2}; symmetric.
  Eigen::MatrixXd jacobian(const Eigen::VectorXd& x) const;

  // Unit vector with L v^{k-1} = 0: uniform for the unnormalized tensor,
  // proportional to d_i^{1/k} for the normalized one.
  Eigen::VectorXd trivial_eigenvector() const;

 private:
  void check_dim(const Eigen::VectorXd& x) const;

  const Hypergraph* h_;
  LaplacianKind kind_;
  std::vector<double> degrees_;
  std::vector<double> scale_;  // d_i^{-1/k} or 1
};

double objective(const Hypergraph& h, LaplacianKind kind,
                 const Eigen::VectorXd& x);
std::vector<double> edge_scores(const Hypergraph& h, LaplacianKind kind,
                                const Eigen::VectorXd& x);
Eigen::VectorXd apply(const Hypergraph& h, LaplacianKind kind,
                      const Eigen::VectorXd& x);

// L 1^{k-2}: the degree-preserving clique reduction L_T. Diagonal d_i,
// off-diagonal -sum_{e ∋ i,j} w_e/(k-1).
Eigen::MatrixXd contract_to_matrix(const Hypergraph& h);

// Laplacian of the clique expansion, (k-1) L_T.
Eigen::MatrixXd clique_laplacian(const Hypergraph& h);

// Matrix form of the k = 2 Laplacian of either kind. Throws InputError for
// k != 2.
Eigen::MatrixXd graph_laplacian(const Hypergraph& h, LaplacianKind kind);

}  // namespace htcut

#endif  // HTCUT_TENSOR_OPS_HPP_
