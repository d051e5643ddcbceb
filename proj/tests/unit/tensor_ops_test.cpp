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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "htcut/error.hpp"
#include "htcut/generators.hpp"
#include "htcut/tensor_ops.hpp"

namespace htcut {
namespace {

// Entry of the Laplacian tensor straight from its definition: degree on the
// superdiagonal, -w_e/(k-1)! * prod s_t where the index tuple is a
// permutation of an edge, s_t = d_t^{-1/k} in the normalized case.
double tensor_entry(const Hypergraph& h, LaplacianKind kind, const std::vector<std::size_t>& idx,
                    const std::vector<double>& d) {
  const int k = h.cardinality();
  if (std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return i == idx[0]; })) {
    return kind == LaplacianKind::kNormalized ? 1.0 : d[idx[0]];
  }
  std::vector<std::size_t> sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  double fact = 1.0;
  for (int i = 2; i < k; ++i) fact *= i;
  for (const auto& e : h.edges()) {
    if (std::equal(sorted.begin(), sorted.end(), e.nodes.begin())) {
      double v = -e.weight / fact;
      if (kind == LaplacianKind::kNormalized) {
        for (NodeId t : e.nodes) v *= std::pow(d[t], -1.0 / k);
      }
      return v;
    }
  }
  return 0.0;
}

// Brute-force L x^k and L x^{k-1} over all n^k index tuples.
void brute_force(const Hypergraph& h, LaplacianKind kind, const Eigen::VectorXd& x, double& obj,
                 Eigen::VectorXd& app) {
  const std::size_t n = h.num_nodes();
  const int k = h.cardinality();
  const auto d = degree_vector(h);
  obj = 0.0;
  app = Eigen::VectorXd::Zero(n);
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    const double t = tensor_entry(h, kind, idx, d);
    if (t != 0.0) {
      double rest = t;
      for (int j = 1; j < k; ++j) rest *= x[idx[j]];
      app[idx[0]] += rest;
      obj += rest * x[idx[0]];
    }
    int j = 0;
    while (j < k && ++idx[j] == n) idx[j++] = 0;
    if (j == k) break;
  }
}

Eigen::VectorXd random_vector(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Eigen::VectorXd x(n);
  for (auto& v : x) v = g(rng);
  return x;
}

TEST(TensorOps, MatchesBruteForceTensor) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int k = 3 + s % 3;
    const Hypergraph h = gen_connected_uniform(6, k, 5, s % 2 == 1, s);
    const Eigen::VectorXd x = random_vector(6, s);
    for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
      double obj;
      Eigen::VectorXd app;
      brute_force(h, kind, x, obj, app);
      EXPECT_NEAR(objective(h, kind, x), obj, 1e-10 * std::max(1.0, std::abs(obj)));
      EXPECT_LE((apply(h, kind, x) - app).lpNorm<Eigen::Infinity>(), 1e-10 * std::max(1.0, app.norm()));
    }
  }
}

TEST(TensorOps, EdgeScoresSumToObjective) {
  const Hypergraph h = fixture("h2_example2");
  const Eigen::VectorXd x = random_vector(12, 4);
  const auto scores = edge_scores(h, LaplacianKind::kUnnormalized, x);
  ASSERT_EQ(scores.size(), h.num_edges());
  EXPECT_NEAR(std::accumulate(scores.begin(), scores.end(), 0.0),
              objective(h, LaplacianKind::kUnnormalized, x), 1e-12);
}

TEST(TensorOps, ScoreFormulaOnOneEdge) {
  // w (x1^3 + x2^3 + x3^3 - 3 x1 x2 x3) with w = 2.
  const Hypergraph h(3, 3, {{{0, 1, 2}, 2.0}});
  Eigen::VectorXd x(3);
  x << 0.5, -1.0, 2.0;
  EXPECT_DOUBLE_EQ(objective(h, LaplacianKind::kUnnormalized, x),
                   2.0 * (0.125 - 1.0 + 8.0 - 3 * 0.5 * -1.0 * 2.0));
}

TEST(TensorOps, GradientAndJacobianMatchFiniteDifferences) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Hypergraph h = gen_connected_uniform(7, 3 + s % 2, 6, true, s);
    const Eigen::VectorXd x = random_vector(7, 100 + s);
    for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
      const LaplacianOperator op(h, kind);
      const Eigen::VectorXd g = h.cardinality() * op.apply(x);
      const Eigen::MatrixXd jac = op.jacobian(x);
      EXPECT_LE((jac - jac.transpose()).cwiseAbs().maxCoeff(), 1e-12);
      const double step = 1e-5;
      for (int j = 0; j < 7; ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += step;
        xm[j] -= step;
        EXPECT_NEAR((op.objective(xp) - op.objective(xm)) / (2 * step), g[j],
                    1e-6 * std::max(1.0, std::abs(g[j])));
        const Eigen::VectorXd col = (op.apply(xp) - op.apply(xm)) / (2 * step);
        EXPECT_LE((col - jac.col(j)).lpNorm<Eigen::Infinity>(), 1e-6 * std::max(1.0, col.norm()));
      }
    }
  }
}

TEST(TensorOps, PermutationInvariance) {
  const Hypergraph h = gen_connected_uniform(8, 4, 7, true, 11);
  std::vector<NodeId> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(5);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Hyperedge> edges;
  for (const auto& e : h.edges()) {
    Hyperedge f{{}, e.weight};
    for (NodeId v : e.nodes) f.nodes.push_back(perm[v]);
    edges.push_back(f);
  }
  const Hypergraph g(8, 4, edges);
  const Eigen::VectorXd x = random_vector(8, 6);
  Eigen::VectorXd y(8);
  for (int i = 0; i < 8; ++i) y[perm[i]] = x[i];
  for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
    EXPECT_NEAR(objective(h, kind, x), objective(g, kind, y), 1e-12);
    const Eigen::VectorXd a = apply(h, kind, x);
    const Eigen::VectorXd b = apply(g, kind, y);
    for (int i = 0; i < 8; ++i) EXPECT_NEAR(a[i], b[perm[i]], 1e-12);
  }
}

TEST(TensorOps, LinearInWeights) {
  const Hypergraph h = gen_uniform(8, 3, 9, true, 2);
  std::vector<Hyperedge> doubled(h.edges().begin(), h.edges().end());
  for (auto& e : doubled) e.weight *= 2.0;
  const Hypergraph g(8, 3, doubled);
  const Eigen::VectorXd x = random_vector(8, 3);
  EXPECT_NEAR(objective(g, LaplacianKind::kUnnormalized, x),
              2.0 * objective(h, LaplacianKind::kUnnormalized, x), 1e-12);
}

TEST(TensorOps, EvenOrderObjectiveIsNonNegative) {
  // For even k every edge term is an AM-GM gap, hence >= 0.
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Hypergraph h = gen_uniform(9, 4, 12, true, s);
    const auto scores = edge_scores(h, LaplacianKind::kUnnormalized, random_vector(9, s));
    for (double v : scores) EXPECT_GE(v, -1e-12);
  }
}

TEST(TensorOps, TrivialEigenvectorIsAnnihilated) {
  const Hypergraph h = fixture("h2_example2");
  for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
    const LaplacianOperator op(h, kind);
    const Eigen::VectorXd v = op.trivial_eigenvector();
    EXPECT_NEAR(v.norm(), 1.0, 1e-15);
    EXPECT_LE(op.apply(v).norm(), 1e-15);
  }
}

TEST(TensorOps, NormalizedRejectsIsolatedNodes) {
  const Hypergraph h(4, 3, {{{0, 1, 2}, 1.0}});
  EXPECT_THROW(LaplacianOperator(h, LaplacianKind::kNormalized), InputError);
}

TEST(TensorOps, DimensionMismatchThrows) {
  EXPECT_THROW(objective(fixture("h1"), LaplacianKind::kUnnormalized, Eigen::VectorXd::Ones(4)),
               InputError);
}

TEST(Contraction, H1ByHand) {
  Eigen::MatrixXd want(5, 5);
  want << 1, -0.5, -0.5, 0, 0,
          -0.5, 2, -1, -0.5, 0,
          -0.5, -1, 3, -1, -0.5,
          0, -0.5, -1, 2, -0.5,
          0, 0, -0.5, -0.5, 1;
  EXPECT_EQ(contract_to_matrix(fixture("h1")), want);
  EXPECT_EQ(clique_laplacian(fixture("h1")), 2.0 * want);
}

TEST(Contraction, IndependentIncidenceForm) {
  // L_c = diag(H W H^T 1 - diag) - offdiag(H W H^T).
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Hypergraph h = gen_uniform(9, 3 + s % 3, 10, true, s);
    Eigen::MatrixXd inc = Eigen::MatrixXd::Zero(9, h.num_edges());
    Eigen::VectorXd w(h.num_edges());
    for (std::size_t j = 0; j < h.num_edges(); ++j) {
      for (NodeId v : h.edge(j).nodes) inc(v, j) = 1.0;
      w[j] = h.edge(j).weight;
    }
    Eigen::MatrixXd a = inc * w.asDiagonal() * inc.transpose();
    a.diagonal().setZero();
    Eigen::MatrixXd lc = -a;
    lc.diagonal() = a.rowwise().sum();
    EXPECT_LE((clique_laplacian(h) - lc).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Contraction, SameGraphPairIsIndistinguishable) {
  EXPECT_EQ(clique_laplacian(fixture("same_graph_pair_a")),
            clique_laplacian(fixture("same_graph_pair_b")));
  EXPECT_NE(fixture("same_graph_pair_a").canonical(), fixture("same_graph_pair_b").canonical());
}

TEST(GraphLaplacian, KindsAndGuard) {
  const Hypergraph g(3, 2, {{{0, 1}, 1.0}, {{1, 2}, 2.0}});
  Eigen::MatrixXd want(3, 3);
  want << 1, -1, 0, -1, 3, -2, 0, -2, 2;
  EXPECT_EQ(graph_laplacian(g, LaplacianKind::kUnnormalized), want);
  const Eigen::MatrixXd n = graph_laplacian(g, LaplacianKind::kNormalized);
  EXPECT_EQ(n.diagonal(), Eigen::Vector3d::Ones());
  EXPECT_NEAR(n(1, 2), -2.0 / std::sqrt(6.0), 1e-15);
  EXPECT_THROW(graph_laplacian(fixture("h1"), LaplacianKind::kUnnormalized), InputError);
}

TEST(GraphLaplacian, QuadraticFormMatchesObjective) {
  const Hypergraph g = gen_er(12, 0.4, 8);
  const Eigen::VectorXd x = random_vector(12, 9);
  for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
    if (kind == LaplacianKind::kNormalized && count_components(g) != 1) continue;
    EXPECT_NEAR(x.dot(graph_laplacian(g, kind) * x), objective(g, kind, x), 1e-10);
  }
}

}  // namespace
}  // namespace htcut
