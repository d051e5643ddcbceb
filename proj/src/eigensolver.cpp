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

#include "htcut/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "htcut/cuts.hpp"
#include "htcut/error.hpp"

namespace htcut {

namespace {

constexpr double kDedupVectorTol = 1e-4;
// Relative slack when deciding which entry has the largest magnitude.
constexpr double kSignTieTol = 1e-9;
constexpr double kStartScales[] = {0.4, 0.55, 0.7};
// Descent hands over to Newton once the Riemannian gradient is this small.
constexpr double kDescentGradTol = 1e-4;
constexpr int kDescentMaxIters = 2000;

struct RestartResult {
  EigenPair pair;
  bool ok = false;
};

// F(x, lambda) stacked as an (n+1)-vector.
Eigen::VectorXd system_residual(const LaplacianOperator& op, const Eigen::VectorXd& x,
                                double lambda) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd f(n + 1);
  f.head(n) = op.apply(x) - lambda * x;
  f[n] = 0.5 * (1.0 - x.squaredNorm());
  return f;
}

EigenPair finish(const LaplacianOperator& op, Eigen::VectorXd x) {
  EigenPair p;
  x /= x.norm();
  p.lambda = x.dot(op.apply(x));
  p.residual = eigen_residual(op, p.lambda, x);
  p.vector = std::move(x);
  p.converged = p.residual <= kResidualBound;
  return p;
}

// Riemannian gradient descent of the objective on the unit sphere with
// Armijo backtracking. It only reaches local minima, so it is a first phase
// for starts that are meant to land in one; Newton finishes the job.
Eigen::VectorXd descend(const LaplacianOperator& op, Eigen::VectorXd x, int max_iters) {
  const double k = op.order();
  x /= x.norm();
  double f = op.objective(x);
  double eta = 1.0;
  for (int it = 0; it < max_iters; ++it) {
    Eigen::VectorXd g = k * op.apply(x);
    g -= g.dot(x) * x;
    const double g2 = g.squaredNorm();
    if (g2 <= kDescentGradTol * kDescentGradTol) break;
    bool moved = false;
    for (int bt = 0; bt < 60; ++bt) {
      Eigen::VectorXd xn = x - eta * g;
      xn /= xn.norm();
      const double fn = op.objective(xn);
      if (fn <= f - 1e-4 * eta * g2) {
        x = std::move(xn);
        f = fn;
        moved = true;
        break;
      }
      eta *= 0.5;
    }
    if (!moved) break;
    eta = std::min(eta * 2.0, 1e3);
  }
  return x;
}

// Levenberg-Marquardt on F = 0 with diagonal (Marquardt) scaling.
EigenPair newton_restart(const LaplacianOperator& op, Eigen::VectorXd x,
                         const SolverConfig& cfg) {
  const Eigen::Index n = x.size();
  x /= x.norm();
  double lambda = x.dot(op.apply(x));
  Eigen::VectorXd f = system_residual(op, x, lambda);
  double mu = 1e-3;
  Eigen::MatrixXd jac(n + 1, n + 1);
  for (int it = 0; it < cfg.max_iters; ++it) {
    jac.topLeftCorner(n, n) = op.jacobian(x);
    jac.topLeftCorner(n, n).diagonal().array() -= lambda;
    jac.topRightCorner(n, 1) = -x;
    jac.bottomLeftCorner(1, n) = -x.transpose();
    jac(n, n) = 0.0;
    const Eigen::MatrixXd a = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * f;
    const double f2 = f.squaredNorm();
    bool accepted = false;
    double step = 0.0;
    while (mu < 1e12) {
      Eigen::MatrixXd damped = a;
      damped.diagonal().array() += mu * (a.diagonal().array() + 1e-12);
      const Eigen::VectorXd d = damped.ldlt().solve(-g);
      Eigen::VectorXd xn = x + d.head(n);
      const double ln = lambda + d[n];
      Eigen::VectorXd fn = system_residual(op, xn, ln);
      if (fn.squaredNorm() < f2) {
        x = std::move(xn);
        lambda = ln;
        f = std::move(fn);
        step = d.norm();
        mu = std::max(mu / 3.0, 1e-12);
        accepted = true;
        break;
      }
      mu *= 4.0;
    }
    if (!accepted || f.norm() <= 1e-14 || step <= cfg.tol) break;
  }
  return finish(op, std::move(x));
}

// Spectral starts are b + s z with b the trivial eigenvector and z a random
// mix of the non-trivial eigenvectors of S L_T S (S = node scaling),
// weighted towards low modes, which is where Fiedler-like vectors live.
class StartGenerator {
 public:
  StartGenerator(const LaplacianOperator& op, const SolverConfig& cfg)
      : seed_(cfg.seed),
        mode_(cfg.start_mode),
        even_order_(op.order() % 2 == 0),
        linear_(op.order() == 2),
        base_(op.trivial_eigenvector()) {
    const std::size_t n = op.dim();
    Eigen::VectorXd s(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = op.kind() == LaplacianKind::kNormalized
                 ? std::pow(op.degrees()[i], -1.0 / op.order())
                 : 1.0;
    }
    const Eigen::MatrixXd m =
        s.asDiagonal() * contract_to_matrix(op.hypergraph()) * s.asDiagonal();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    const double top = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 1.0);
    for (Eigen::Index j = 0; j < es.eigenvalues().size(); ++j) {
      const double mu = es.eigenvalues()[j];
      if (mu <= 1e-9 * top) continue;
      modes_.push_back(es.eigenvectors().col(j));
      weights_.push_back(1.0 / std::max(mu, 1e-3));
    }
  }

  // Starts aimed at local minima of the objective get a descent phase;
  // spectral starts go straight to Newton, which also finds saddles.
  bool wants_descent(int r) const {
    if (linear_) return false;  // descent only ever reaches the trivial pair
    switch (mode_) {
      case StartMode::kSpectral: return false;
      case StartMode::kRandom: return true;
      case StartMode::kMixed: break;
    }
    return r % 4 == 3 || (r % 4 == 2 && even_order_);
  }

  Eigen::VectorXd operator()(int r) const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed_),
                      static_cast<std::uint32_t>(seed_ >> 32),
                      static_cast<std::uint32_t>(r)};
    std::mt19937_64 rng(seq);
    switch (mode_) {
      case StartMode::kSpectral: return spectral(rng, r);
      case StartMode::kRandom: return gaussian(rng);
      case StartMode::kMixed: break;
    }
    switch (r % 4) {
      case 0:
      case 1: return spectral(rng, r);
      case 2: return even_order_ ? half_flipped(rng, r) : spectral(rng, r);
      default: return gaussian(rng);
    }
  }

 private:
  Eigen::VectorXd gaussian(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    Eigen::VectorXd z(base_.size());
    for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = normal(rng);
    return z;
  }

  // One side of a low-mode split keeps the trivial-vector values, the
  // other is shrunk and gets random signs. For even k many eigenvectors
  // look like this and the plain spectral starts rarely reach them.
  Eigen::VectorXd half_flipped(std::mt19937_64& rng, int r) const {
    const Eigen::VectorXd z = low_mode(rng);
    const bool upper = (r / 4) % 2 == 1;
    std::bernoulli_distribution flip(0.5);
    std::uniform_real_distribution<double> shrink(0.4, 0.7);
    const double a = shrink(rng);
    Eigen::VectorXd x = base_;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
      if ((z[i] >= 0.0) == upper) x[i] *= flip(rng) ? -a : a;
    }
    return x;
  }

  // At k = 2 Newton converges to whichever eigenvector dominates the start,
  // so there the low-mode part has to lead.
  Eigen::VectorXd spectral(std::mt19937_64& rng, int r) const {
    if (linear_) return kStartScales[r % 3] * base_ + low_mode(rng);
    return base_ + kStartScales[r % 3] * low_mode(rng);
  }

  // Unit vector orthogonal to base_, weighted towards low modes.
  Eigen::VectorXd low_mode(std::mt19937_64& rng) const {
    std::normal_distribution<double> normal;
    Eigen::VectorXd z = Eigen::VectorXd::Zero(base_.size());
    if (modes_.empty()) {
      z = gaussian(rng);
    } else {
      for (std::size_t j = 0; j < modes_.size(); ++j) {
        z += normal(rng) * weights_[j] * modes_[j];
      }
    }
    z -= z.dot(base_) * base_;
    const double zn = z.norm();
    if (zn > 0.0) z /= zn;
    return z;
  }

  std::uint64_t seed_;
  StartMode mode_;
  bool even_order_;
  bool linear_;
  Eigen::VectorXd base_;
  std::vector<Eigen::VectorXd> modes_;
  std::vector<double> weights_;
};

bool vector_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

bool same_pair(const EigenPair& a, const EigenPair& b, double cluster_tol) {
  if (std::abs(a.lambda - b.lambda) > cluster_tol) return false;
  const double dist = std::min((a.vector - b.vector).norm(), (a.vector + b.vector).norm());
  return dist <= kDedupVectorTol;
}

// Sorts, merges duplicates and fills multiplicity.
std::vector<EigenPair> merge_pairs(std::vector<EigenPair> all, double cluster_tol) {
  std::sort(all.begin(), all.end(), [](const EigenPair& a, const EigenPair& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return vector_less(a.vector, b.vector);
  });
  std::vector<EigenPair> out;
  for (auto& p : all) {
    bool merged = false;
    // Candidates within cluster_tol sit at the tail of `out`.
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (p.lambda - it->lambda > cluster_tol) break;
      if (same_pair(*it, p, cluster_tol)) {
        // The first representative wins; for the zero pair that is the
        // analytic vector.
        it->restarts_agreeing += p.restarts_agreeing;
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(p));
  }
  for (auto& p : out) {
    int mult = 0;
    for (const auto& q : out) {
      if (std::abs(q.lambda - p.lambda) <= cluster_tol) ++mult;
    }
    p.multiplicity = mult;
  }
  return out;
}

EigenPair trivial_pair(const LaplacianOperator& op) {
  EigenPair p;
  p.vector = op.trivial_eigenvector();
  p.lambda = 0.0;
  p.residual = eigen_residual(op, 0.0, p.vector);
  p.converged = true;
  return p;
}

// Dense symmetric eigendecomposition carried out in extended precision.
// Fiedler vectors of path-like graphs decay geometrically, and in double
// the tail entries drown in noise of order eps * |L| / gap, which is enough
// to flip their signs.
struct DenseSpectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

DenseSpectrum dense_spectrum(const Eigen::MatrixXd& m) {
  using MatrixLd = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::SelfAdjointEigenSolver<MatrixLd> es(m.cast<long double>());
  if (es.info() != Eigen::Success) {
    throw NumericalError("dense symmetric eigensolver failed");
  }
  return {es.eigenvalues().cast<double>(), es.eigenvectors().cast<double>()};
}

std::vector<EigenPair> dense_pairs(const LaplacianOperator& op) {
  const DenseSpectrum es = dense_spectrum(graph_laplacian(op.hypergraph(), op.kind()));
  std::vector<EigenPair> out;
  for (Eigen::Index j = 0; j < es.values.size(); ++j) {
    EigenPair p = finish(op, es.vectors.col(j));
    p.restarts_agreeing = 1;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<EigenPair> newton_pairs(const LaplacianOperator& op, const SolverConfig& cfg) {
  const StartGenerator starts(op, cfg);
  std::vector<RestartResult> results(cfg.restarts);
  auto run = [&](int r) {
    Eigen::VectorXd x0 = starts(r);
    if (starts.wants_descent(r)) x0 = descend(op, std::move(x0), kDescentMaxIters);
    EigenPair p = newton_restart(op, std::move(x0), cfg);
    results[r].ok = p.converged;
    p.restarts_agreeing = 1;
    results[r].pair = std::move(p);
  };
  int threads = cfg.threads > 0 ? cfg.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, cfg.restarts);
  if (threads == 1) {
    for (int r = 0; r < cfg.restarts; ++r) run(r);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (int r = t; r < cfg.restarts; r += threads) run(r);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<EigenPair> out;
  double best = std::numeric_limits<double>::infinity();
  for (auto& res : results) {
    best = std::min(best, res.pair.residual);
    if (res.ok) out.push_back(std::move(res.pair));
  }
  if (out.empty()) {
    throw NumericalError("no restart converged; best residual " + std::to_string(best));
  }
  return out;
}

}  // namespace

void SolverConfig::validate() const {
  if (restarts < 1) throw InputError("restarts must be >= 1");
  if (max_iters < 1) throw InputError("max_iters must be >= 1");
  if (!(tol > 0.0) || !(cluster_tol > 0.0) || !(positivity > 0.0)) {
    throw InputError("solver tolerances must be positive");
  }
  if (threads < 0) throw InputError("threads must be >= 0");
}

double eigen_residual(const LaplacianOperator& op, double lambda,
                      const Eigen::VectorXd& v) {
  return (op.apply(v) - lambda * v).norm();
}

void canonicalize(EigenPair& pair, int k, double positivity) {
  if (k % 2 == 1 && pair.lambda < -positivity) {
    pair.lambda = -pair.lambda;
    pair.vector = -pair.vector;
    return;
  }
  if (k % 2 == 1 && pair.lambda > positivity) return;
  const Eigen::VectorXd& v = pair.vector;
  if (v.size() == 0) return;
  const double top = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= top * (1.0 - kSignTieTol)) {
      if (v[i] < 0.0) pair.vector = -pair.vector;
      return;
    }
  }
}

std::vector<EigenPair> find_eigenpairs(const Hypergraph& h, LaplacianKind kind,
                                       const SolverConfig& cfg) {
  cfg.validate();
  if (h.num_nodes() < 2) throw InputError("eigenpairs need at least 2 nodes");
  const LaplacianOperator op(h, kind);
  std::vector<EigenPair> all = h.cardinality() == 2 && !cfg.force_newton
                                   ? dense_pairs(op)
                                   : newton_pairs(op, cfg);
  for (auto& p : all) canonicalize(p, h.cardinality(), cfg.positivity);
  // Restarts that found the zero pair are folded into the analytic one.
  EigenPair zero = trivial_pair(op);
  canonicalize(zero, h.cardinality(), cfg.positivity);
  std::vector<EigenPair> rest;
  for (auto& p : all) {
    if (same_pair(zero, p, cfg.cluster_tol)) {
      zero.restarts_agreeing += p.restarts_agreeing;
    } else {
      rest.push_back(std::move(p));
    }
  }
  rest.push_back(std::move(zero));
  return merge_pairs(std::move(rest), cfg.cluster_tol);
}

EigenPair fiedler(const std::vector<EigenPair>& pairs, const SolverConfig& cfg) {
  const EigenPair* best = nullptr;
  for (const auto& p : pairs) {
    if (p.lambda <= cfg.positivity) continue;
    if (best == nullptr) {
      best = &p;
      continue;
    }
    if (p.lambda - best->lambda > cfg.cluster_tol) break;
    if (vector_less(p.vector, best->vector)) best = &p;
  }
  if (best == nullptr) {
    throw NumericalError("no positive eigenpair found within the restart budget");
  }
  return *best;
}

EigenPair fiedler(const Hypergraph& h, LaplacianKind kind, const SolverConfig& cfg) {
  return fiedler(find_eigenpairs(h, kind, cfg), cfg);
}

EigenPair matrix_fiedler(const Eigen::MatrixXd& laplacian, const SolverConfig& cfg) {
  cfg.validate();
  if (laplacian.rows() != laplacian.cols() || laplacian.rows() < 2) {
    throw InputError("matrix_fiedler needs a square matrix of order >= 2");
  }
  if (!laplacian.isApprox(laplacian.transpose(), 1e-12)) {
    throw InputError("matrix_fiedler needs a symmetric matrix");
  }
  const DenseSpectrum es = dense_spectrum(laplacian);
  EigenPair p;
  p.lambda = es.values[1];
  p.vector = es.vectors.col(1);
  p.vector /= p.vector.norm();
  p.residual = (laplacian * p.vector - p.lambda * p.vector).norm();
  p.converged = p.residual <= 1e-10 * std::max(1.0, laplacian.cwiseAbs().maxCoeff());
  if (!p.converged) {
    throw NumericalError("matrix eigenpair residual " + std::to_string(p.residual));
  }
  p.restarts_agreeing = 1;
  int mult = 0;
  for (Eigen::Index j = 0; j < es.values.size(); ++j) {
    if (std::abs(es.values[j] - p.lambda) <= cfg.cluster_tol) ++mult;
  }
  p.multiplicity = mult;
  canonicalize(p, 2, cfg.positivity);
  return p;
}

BoundCheck check_bound(const Hypergraph& h, const SolverConfig& cfg) {
  const int k = h.cardinality();
  if (k % 2 != 0) throw InputError("the conductance bound needs even k");
  if (h.num_nodes() > 16) throw InputError("check_bound brute force needs n <= 16");
  BoundCheck b;
  b.lambda1 = fiedler(h, LaplacianKind::kNormalized, cfg).lambda;
  b.phi = conductance(h).phi;
  b.bound = k * b.phi;
  b.weak_bound = std::pow(2.0, k / 2) * b.phi;
  b.holds = b.lambda1 <= b.bound + 1e-9;
  b.weak_holds = b.lambda1 <= b.weak_bound + 1e-9;
  return b;
}

}  // namespace htcut
