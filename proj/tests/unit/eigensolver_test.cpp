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

#include <cmath>

#include "htcut/error.hpp"
#include "htcut/eigensolver.hpp"
#include "htcut/generators.hpp"

namespace htcut {
namespace {

TEST(Eigensolver, H2FiedlerPair) {
  const Hypergraph h = fixture("h2_example2");
  const EigenPair f = fiedler(h, LaplacianKind::kUnnormalized, SolverConfig{});
  EXPECT_NEAR(f.lambda, 0.0372, 0.002);
  EXPECT_LE(f.residual, kResidualBound);
  EXPECT_TRUE(f.converged);
  EXPECT_GE(f.restarts_agreeing, 1);
  EXPECT_EQ(f.multiplicity, 1);
  // Largest entry is the positive one after canonicalization.
  EXPECT_GT(f.vector.maxCoeff(), -f.vector.minCoeff());
}

TEST(Eigensolver, EveryReturnedPairIsAnEigenpair) {
  for (std::uint64_t s = 0; s < 6; ++s) {
    const Hypergraph h = gen_connected_uniform(7, 3 + s % 2, 6, s % 2 == 0, s);
    SolverConfig cfg;
    cfg.restarts = 24;
    for (auto kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
      const LaplacianOperator op(h, kind);
      const auto pairs = find_eigenpairs(h, kind, cfg);
      ASSERT_FALSE(pairs.empty());
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        EXPECT_NEAR(pairs[i].vector.norm(), 1.0, 1e-12);
        EXPECT_LE(eigen_residual(op, pairs[i].lambda, pairs[i].vector), kResidualBound);
        if (i > 0) EXPECT_LE(pairs[i - 1].lambda, pairs[i].lambda);
      }
    }
  }
}

TEST(Eigensolver, ZeroPairAlwaysPresent) {
  const Hypergraph h = fixture("h1");
  const auto pairs = find_eigenpairs(h, LaplacianKind::kUnnormalized, SolverConfig{});
  bool found = false;
  for (const auto& p : pairs) {
    if (std::abs(p.lambda) <= 1e-12) {
      found = true;
      EXPECT_NEAR(p.vector.minCoeff(), 1.0 / std::sqrt(5.0), 1e-12);
    }
  }
  EXPECT_TRUE(found);
}

TEST(Eigensolver, FiedlerIsPositiveAndMinimal) {
  const Hypergraph h = gen_connected_uniform(8, 4, 8, true, 21);
  const SolverConfig cfg;
  const auto pairs = find_eigenpairs(h, LaplacianKind::kNormalized, cfg);
  const EigenPair f = fiedler(pairs, cfg);
  EXPECT_GT(f.lambda, cfg.positivity);
  for (const auto& p : pairs) {
    if (p.lambda > cfg.positivity) EXPECT_GE(p.lambda, f.lambda - cfg.cluster_tol);
  }
}

TEST(Eigensolver, GraphCaseMatchesMatrixSpectrum) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Hypergraph g = gen_sbm_graph(6, 6, 0.8, 0.2, s);
    if (count_components(g) != 1) continue;
    const Eigen::MatrixXd lap = graph_laplacian(g, LaplacianKind::kUnnormalized);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lap);
    const EigenPair f = fiedler(g, LaplacianKind::kUnnormalized, SolverConfig{});
    EXPECT_NEAR(f.lambda, es.eigenvalues()[1], 1e-10);
    EXPECT_NEAR(matrix_fiedler(lap, SolverConfig{}).lambda, es.eigenvalues()[1], 1e-10);
  }
}

TEST(Eigensolver, IterativePathAgreesWithDensePathForGraphs) {
  const Hypergraph g = gen_cockroach(3);
  SolverConfig cfg;
  const EigenPair dense = fiedler(g, LaplacianKind::kUnnormalized, cfg);
  cfg.force_newton = true;
  const EigenPair iter = fiedler(g, LaplacianKind::kUnnormalized, cfg);
  EXPECT_NEAR(iter.lambda, dense.lambda, 1e-9);
  EXPECT_LE(std::min((iter.vector - dense.vector).norm(), (iter.vector + dense.vector).norm()),
            1e-6);
}

TEST(Eigensolver, DeterministicAndThreadCountInvariant) {
  const Hypergraph h = gen_connected_uniform(8, 3, 9, true, 5);
  SolverConfig cfg;
  cfg.restarts = 32;
  const auto a = find_eigenpairs(h, LaplacianKind::kUnnormalized, cfg);
  const auto b = find_eigenpairs(h, LaplacianKind::kUnnormalized, cfg);
  cfg.threads = 4;
  const auto c = find_eigenpairs(h, LaplacianKind::kUnnormalized, cfg);
  ASSERT_EQ(a.size(), b.size());
  ASSERT_EQ(a.size(), c.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].lambda, b[i].lambda);
    EXPECT_EQ(a[i].vector, b[i].vector);
    EXPECT_EQ(a[i].lambda, c[i].lambda);
    EXPECT_EQ(a[i].vector, c[i].vector);
    EXPECT_EQ(a[i].restarts_agreeing, c[i].restarts_agreeing);
  }
}

TEST(Eigensolver, StartModesReachTheSameFiedlerValueOnH2) {
  const Hypergraph h = fixture("h2_example2");
  for (StartMode m : {StartMode::kMixed, StartMode::kSpectral}) {
    SolverConfig cfg;
    cfg.start_mode = m;
    EXPECT_NEAR(fiedler(h, LaplacianKind::kUnnormalized, cfg).lambda, 0.0371568, 1e-6);
  }
}

TEST(Canonicalize, OddOrderNegativeEigenvalueFlips) {
  EigenPair p;
  p.lambda = -0.5;
  p.vector = Eigen::Vector3d(0.6, -0.8, 0.0);
  canonicalize(p, 3, 1e-8);
  EXPECT_EQ(p.lambda, 0.5);
  EXPECT_EQ(p.vector, Eigen::Vector3d(-0.6, 0.8, 0.0));
  // Positive lambda at odd order: the sign is meaningful and kept.
  p.lambda = 0.5;
  p.vector = Eigen::Vector3d(0.0, -1.0, 0.0);
  canonicalize(p, 3, 1e-8);
  EXPECT_EQ(p.vector[1], -1.0);
}

TEST(Canonicalize, EvenOrderLargestEntryPositiveLowestIndexOnTies) {
  EigenPair p;
  p.lambda = 0.3;
  p.vector = Eigen::Vector3d(-0.6, 0.6, 0.1);
  canonicalize(p, 4, 1e-8);
  EXPECT_EQ(p.vector, Eigen::Vector3d(0.6, -0.6, -0.1));
}

TEST(SolverConfig, Validation) {
  SolverConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.restarts = 0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = SolverConfig{};
  cfg.tol = 0.0;
  EXPECT_THROW(cfg.validate(), InputError);
  cfg = SolverConfig{};
  cfg.threads = -1;
  EXPECT_THROW(cfg.validate(), InputError);
}

TEST(Eigensolver, RejectsTinyInputs) {
  EXPECT_THROW(find_eigenpairs(Hypergraph(1, 2, {}), LaplacianKind::kUnnormalized, SolverConfig{}),
               InputError);
  EXPECT_THROW(matrix_fiedler(Eigen::MatrixXd::Identity(1, 1), SolverConfig{}), InputError);
  Eigen::MatrixXd asym(2, 2);
  asym << 1, 2, 0, 1;
  EXPECT_THROW(matrix_fiedler(asym, SolverConfig{}), InputError);
}

TEST(CheckBound, HoldsOnSmallFourUniformInstances) {
  for (std::uint64_t s = 0; s < 8; ++s) {
    const Hypergraph h = gen_connected_uniform(6 + s % 4, 4, 5 + s % 3, s % 2 == 1, s);
    const BoundCheck b = check_bound(h, SolverConfig{});
    EXPECT_TRUE(b.holds) << b.lambda1 << " vs " << b.bound;
    EXPECT_TRUE(b.weak_holds);
    EXPECT_EQ(b.bound, b.weak_bound);  // k = 4
  }
  EXPECT_THROW(check_bound(fixture("h1"), SolverConfig{}), InputError);
}

}  // namespace
}  // namespace htcut
