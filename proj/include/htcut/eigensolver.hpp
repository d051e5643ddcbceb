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

// Z-eigenpairs of the Laplacian tensor, L x^{k-1} = lambda x with |x| = 1.
//
// For k >= 3 each restart runs a damped Gauss-Newton (Levenberg-Marquardt)
// iteration on the square system
//
//   F(x, lambda) = [ L x^{k-1} - lambda x ; (1 - x'x) / 2 ] = 0,
//
// whose roots are exactly the eigenpairs, saddle points of the spherical
// Rayleigh quotient included. A first-order descent on the sphere only
// reaches local minima and misses those. Starting points are the trivial
// eigenvector plus a random low-frequency perturbation drawn from the
// spectrum of the contracted matrix. For k = 2 the problem is linear and
// a dense symmetric eigensolver is used instead.

#ifndef HTCUT_EIGENSOLVER_HPP_
#define HTCUT_EIGENSOLVER_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "htcut/hypergraph.hpp"
#include "htcut/tensor_ops.hpp"

namespace htcut {

// Largest residual |L v^{k-1} - lambda v| a returned pair may carry.
inline constexpr double kResidualBound = 1e-8;

struct EigenPair {
  double lambda = 0.0;
  Eigen::VectorXd vector;
  double residual = 0.0;
  bool converged = false;
  int restarts_agreeing = 0;  // restarts that landed on this pair
  int multiplicity = 1;       // distinct vectors sharing lambda (cluster_tol)
};

// How restart r picks its starting vector.
//   kSpectral: trivial eigenvector plus a low-mode perturbation.
//   kRandom:   uniform on the sphere.
//   kMixed:    cycles spectral starts, for even k starts with one half
//              sign-scrambled, and random starts.
enum class StartMode { kMixed, kSpectral, kRandom };

struct SolverConfig {
  int restarts = 64;
  int max_iters = 5000;
  double tol = 1e-12;           // step length that ends a restart
  double cluster_tol = 1e-6;    // eigenvalues closer than this are "equal"
  double positivity = 1e-8;     // lambda above this counts as positive
  std::uint64_t seed = 0x5eed;
  int threads = 1;              // 0: hardware concurrency
  bool force_newton = false;    // k = 2: iterate instead of a dense solve
  StartMode start_mode = StartMode::kMixed;

  // Throws InputError on a nonsensical configuration.
  void validate() const;
};

// |L v^{k-1} - lambda v|_2.
double eigen_residual(const LaplacianOperator& op, double lambda,
                      const Eigen::VectorXd& v);

// Sign normalization. For odd k a pair with lambda < -positivity is flipped
// to (-lambda, -v), which is again an eigenpair. Where the sign of v is
// free (even k, or lambda numerically zero) the largest-magnitude entry is
// made positive; near-ties go to the lowest index.
void canonicalize(EigenPair& pair, int k, double positivity);

// Distinct eigenpairs found from cfg.restarts starts, ascending by lambda
// and then lexicographically by vector. Always contains the trivial pair
// (0, uniform) or (0, d^{1/k}) for the normalized tensor. Throws
// InputError for n < 2 and NumericalError when no restart converges.
std::vector<EigenPair> find_eigenpairs(const Hypergraph& h, LaplacianKind kind,
                                       const SolverConfig& cfg);

// Pair with the smallest lambda > cfg.positivity. Equal eigenvalues are
// resolved towards the lexicographically smallest vector; multiplicity
// records how many were available. Throws NumericalError if none.
EigenPair fiedler(const Hypergraph& h, LaplacianKind kind,
                  const SolverConfig& cfg);
EigenPair fiedler(const std::vector<EigenPair>& pairs, const SolverConfig& cfg);

// Second-smallest eigenpair of a symmetric matrix.
EigenPair matrix_fiedler(const Eigen::MatrixXd& laplacian,
                         const SolverConfig& cfg);

struct BoundCheck {
  double lambda1 = 0.0;      // Fiedler value of the normalized tensor
  double phi = 0.0;          // brute-forced conductance
  double bound = 0.0;        // k * phi
  double weak_bound = 0.0;   // 2^{k/2} * phi
  bool holds = false;        // lambda1 <= k phi + 1e-9
  bool weak_holds = false;   // lambda1 <= 2^{k/2} phi + 1e-9
};

// Needs even k, n <= 16 and no isolated nodes; throws InputError otherwise.
BoundCheck check_bound(const Hypergraph& h, const SolverConfig& cfg);

}  // namespace htcut

#endif  // HTCUT_EIGENSOLVER_HPP_
