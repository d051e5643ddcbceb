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

#include "htcut/dense_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "htcut/error.hpp"

namespace htcut {

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Advances a base-n odometer, first digit fastest. Returns false on wrap.
bool next_index(std::vector<std::size_t>& idx, std::size_t n) {
  for (auto& digit : idx) {
    if (++digit < n) return true;
    digit = 0;
  }
  return false;
}

}  // namespace

DenseTensor::DenseTensor(int order, std::size_t dim) : order_(order), dim_(dim) {
  if (order < 1) throw InputError("tensor order must be positive");
  std::size_t total = 1;
  for (int t = 0; t < order; ++t) {
    if (dim != 0 && total > kDenseTensorMaxEntries / dim) {
      throw InputError("dense tensor with " + std::to_string(dim) + "^" +
                       std::to_string(order) + " entries exceeds the 10^7 guard");
    }
    total *= dim;
  }
  data_.assign(total, 0.0);
}

std::size_t DenseTensor::flat(std::span<const std::size_t> index) const {
  std::size_t f = 0;
  for (std::size_t t = index.size(); t-- > 0;) f = f * dim_ + index[t];
  return f;
}

double DenseTensor::at(std::span<const std::size_t> index) const {
  return data_.at(flat(index));
}

double& DenseTensor::at(std::span<const std::size_t> index) {
  return data_.at(flat(index));
}

std::size_t DenseTensor::count_nonzero() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](double v) { return v != 0.0; }));
}

double DenseTensor::symmetry_defect() const {
  if (data_.empty()) return 0.0;
  double worst = 0.0;
  std::vector<std::size_t> idx(order_, 0);
  do {
    std::vector<std::size_t> perm = idx;
    std::sort(perm.begin(), perm.end());
    const double ref = at(idx);
    do {
      worst = std::max(worst, std::abs(at(perm) - ref));
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (next_index(idx, dim_));
  return worst;
}

double DenseTensor::contract_all(const Eigen::VectorXd& x) const {
  if (data_.empty()) return 0.0;
  double total = 0.0;
  std::vector<std::size_t> idx(order_, 0);
  std::size_t f = 0;
  do {
    const double v = data_[f++];
    if (v == 0.0) continue;
    double p = v;
    for (std::size_t i : idx) p *= x[i];
    total += p;
  } while (next_index(idx, dim_));
  return total;
}

Eigen::VectorXd DenseTensor::contract_but_one(const Eigen::VectorXd& x) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim_);
  if (data_.empty()) return out;
  std::vector<std::size_t> idx(order_, 0);
  std::size_t f = 0;
  do {
    const double v = data_[f++];
    if (v == 0.0) continue;
    double p = v;
    for (int t = 1; t < order_; ++t) p *= x[idx[t]];
    out[idx[0]] += p;
  } while (next_index(idx, dim_));
  return out;
}

Eigen::MatrixXd DenseTensor::contract_ones() const {
  if (order_ < 2) throw InputError("contract_ones needs order >= 2");
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(dim_, dim_);
  if (data_.empty()) return out;
  std::vector<std::size_t> idx(order_, 0);
  std::size_t f = 0;
  do {
    out(idx[0], idx[1]) += data_[f++];
  } while (next_index(idx, dim_));
  return out;
}

DenseTensor dense_adjacency(const Hypergraph& h) {
  const int k = h.cardinality();
  DenseTensor t(k, h.num_nodes());
  const double denom = factorial(k - 1);
  std::vector<std::size_t> idx(k);
  for (const auto& e : h.edges()) {
    std::copy(e.nodes.begin(), e.nodes.end(), idx.begin());
    std::sort(idx.begin(), idx.end());
    do {
      t.at(idx) = e.weight / denom;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return t;
}

DenseTensor dense_tensor(const Hypergraph& h, LaplacianKind kind) {
  const int k = h.cardinality();
  const std::size_t n = h.num_nodes();
  DenseTensor t(k, n);
  const auto d = degree_vector(h);
  std::vector<double> scale(n, 1.0);
  if (kind == LaplacianKind::kNormalized) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(d[i] > 0.0)) {
        throw InputError("normalized Laplacian needs positive degrees");
      }
      scale[i] = std::pow(d[i], -1.0 / k);
    }
  }
  const double denom = factorial(k - 1);
  std::vector<std::size_t> idx(k);
  for (const auto& e : h.edges()) {
    double s = 1.0;
    for (NodeId v : e.nodes) s *= scale[v];
    std::copy(e.nodes.begin(), e.nodes.end(), idx.begin());
    std::sort(idx.begin(), idx.end());
    do {
      t.at(idx) = -e.weight / denom * s;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(idx.begin(), idx.end(), i);
    t.at(idx) = kind == LaplacianKind::kNormalized ? 1.0 : d[i];
  }
  return t;
}

}  // namespace htcut
