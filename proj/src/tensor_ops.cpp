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

#include "htcut/tensor_ops.hpp"

#include <array>
#include <cmath>
#include <string>

#include "htcut/error.hpp"

namespace htcut {

namespace {

double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Scaled coordinates of one edge plus prefix/suffix products so that the
// product over e \ {t} needs no division.
struct EdgeView {
  std::vector<double> y;
  std::vector<double> prefix;  // prefix[t] = prod_{s<t} y_s
  std::vector<double> suffix;  // suffix[t] = prod_{s>=t} y_s

  void load(const Hyperedge& e, const Eigen::VectorXd& x,
            const std::vector<double>& scale) {
    const std::size_t k = e.nodes.size();
    y.resize(k);
    prefix.resize(k + 1);
    suffix.resize(k + 1);
    for (std::size_t t = 0; t < k; ++t) y[t] = x[e.nodes[t]] * scale[e.nodes[t]];
    prefix[0] = 1.0;
    for (std::size_t t = 0; t < k; ++t) prefix[t + 1] = prefix[t] * y[t];
    suffix[k] = 1.0;
    for (std::size_t t = k; t-- > 0;) suffix[t] = suffix[t + 1] * y[t];
  }

  double product() const { return prefix.back(); }
  double product_without(std::size_t t) const { return prefix[t] * suffix[t + 1]; }
};

}  // namespace

const char* to_string(LaplacianKind kind) {
  return kind == LaplacianKind::kNormalized ? "normalized" : "unnormalized";
}

LaplacianOperator::LaplacianOperator(const Hypergraph& h, LaplacianKind kind)
    : h_(&h), kind_(kind), degrees_(degree_vector(h)), scale_(h.num_nodes(), 1.0) {
  if (kind_ == LaplacianKind::kNormalized) {
    const double inv_k = 1.0 / h.cardinality();
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (!(degrees_[i] > 0.0)) {
        throw InputError("normalized Laplacian needs positive degrees; node " +
                         std::to_string(i + 1) + " is isolated");
      }
      scale_[i] = std::pow(degrees_[i], -inv_k);
    }
  }
}

void LaplacianOperator::check_dim(const Eigen::VectorXd& x) const {
  if (static_cast<std::size_t>(x.size()) != dim()) {
    throw InputError("vector has length " + std::to_string(x.size()) +
                     ", hypergraph has " + std::to_string(dim()) + " nodes");
  }
}

double LaplacianOperator::objective(const Eigen::VectorXd& x) const {
  check_dim(x);
  const int k = order();
  CompensatedSum total;
  EdgeView ev;
  for (const auto& e : h_->edges()) {
    ev.load(e, x, scale_);
    double powers = 0.0;
    for (double yi : ev.y) powers += ipow(yi, k);
    total.add(e.weight * (powers - k * ev.product()));
  }
  return total.value();
}

std::vector<double> LaplacianOperator::edge_scores(const Eigen::VectorXd& x) const {
  check_dim(x);
  const int k = order();
  std::vector<double> scores;
  scores.reserve(h_->num_edges());
  EdgeView ev;
  for (const auto& e : h_->edges()) {
    ev.load(e, x, scale_);
    double powers = 0.0;
    for (double yi : ev.y) powers += ipow(yi, k);
    scores.push_back(e.weight * (powers - k * ev.product()));
  }
  return scores;
}

Eigen::VectorXd LaplacianOperator::apply(const Eigen::VectorXd& x) const {
  check_dim(x);
  const int k = order();
  Eigen::VectorXd out = Eigen::VectorXd::Zero(dim());
  EdgeView ev;
  if (kind_ == LaplacianKind::kUnnormalized) {
    for (const auto& e : h_->edges()) {
      ev.load(e, x, scale_);
      for (std::size_t t = 0; t < e.nodes.size(); ++t) {
        out[e.nodes[t]] += e.weight * (ipow(ev.y[t], k - 1) - ev.product_without(t));
      }
    }
  } else {
    // Unit diagonal, off-diagonal -w_e prod_t d_t^{-1/k}.
    for (std::size_t i = 0; i < dim(); ++i) out[i] = ipow(x[i], k - 1);
    for (const auto& e : h_->edges()) {
      ev.load(e, x, scale_);
      for (std::size_t t = 0; t < e.nodes.size(); ++t) {
        const NodeId i = e.nodes[t];
        out[i] -= e.weight * scale_[i] * ev.product_without(t);
      }
    }
  }
  return out;
}

Eigen::MatrixXd LaplacianOperator::jacobian(const Eigen::VectorXd& x) const {
  check_dim(x);
  const int k = order();
  const std::size_t n = dim();
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double diag = kind_ == LaplacianKind::kUnnormalized ? degrees_[i] : 1.0;
    jac(i, i) = diag * (k - 1) * ipow(x[i], k - 2);
  }
  std::vector<double> y(k);
  for (const auto& e : h_->edges()) {
    for (int t = 0; t < k; ++t) y[t] = x[e.nodes[t]] * scale_[e.nodes[t]];
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        double prod = 1.0;
        for (int t = 0; t < k; ++t) {
          if (t != a && t != b) prod *= y[t];
        }
        const NodeId i = e.nodes[a];
        const NodeId j = e.nodes[b];
        const double v = e.weight * scale_[i] * scale_[j] * prod;
        jac(i, j) -= v;
        jac(j, i) -= v;
      }
    }
  }
  return jac;
}

Eigen::VectorXd LaplacianOperator::trivial_eigenvector() const {
  Eigen::VectorXd v(dim());
  if (kind_ == LaplacianKind::kUnnormalized) {
    v.setOnes();
  } else {
    for (std::size_t i = 0; i < dim(); ++i) v[i] = 1.0 / scale_[i];
  }
  return v / v.norm();
}

double objective(const Hypergraph& h, LaplacianKind kind, const Eigen::VectorXd& x) {
  return LaplacianOperator(h, kind).objective(x);
}

std::vector<double> edge_scores(const Hypergraph& h, LaplacianKind kind,
                                const Eigen::VectorXd& x) {
  return LaplacianOperator(h, kind).edge_scores(x);
}

Eigen::VectorXd apply(const Hypergraph& h, LaplacianKind kind,
                      const Eigen::VectorXd& x) {
  return LaplacianOperator(h, kind).apply(x);
}

Eigen::MatrixXd contract_to_matrix(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  const double share = 1.0 / (h.cardinality() - 1);
  Eigen::MatrixXd lt = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : h.edges()) {
    const double off = e.weight * share;
    for (NodeId i : e.nodes) {
      lt(i, i) += e.weight;
      for (NodeId j : e.nodes) {
        if (j != i) lt(i, j) -= off;
      }
    }
  }
  return lt;
}

Eigen::MatrixXd clique_laplacian(const Hypergraph& h) {
  return static_cast<double>(h.cardinality() - 1) * contract_to_matrix(h);
}

Eigen::MatrixXd graph_laplacian(const Hypergraph& h, LaplacianKind kind) {
  if (h.cardinality() != 2) {
    throw InputError("graph_laplacian needs a 2-uniform hypergraph, got k = " +
                     std::to_string(h.cardinality()));
  }
  Eigen::MatrixXd lap = contract_to_matrix(h);
  if (kind == LaplacianKind::kNormalized) {
    LaplacianOperator op(h, kind);  // validates degrees
    Eigen::VectorXd s(h.num_nodes());
    for (std::size_t i = 0; i < h.num_nodes(); ++i) s[i] = 1.0 / std::sqrt(op.degrees()[i]);
    lap = s.asDiagonal() * lap * s.asDiagonal();
    lap.diagonal().setOnes();
  }
  return lap;
}

}  // namespace htcut
