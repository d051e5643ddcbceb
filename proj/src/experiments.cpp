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

#include "htcut/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <thread>

#include "htcut/cuts.hpp"
#include "htcut/dense_tensor.hpp"
#include "htcut/error.hpp"
#include "htcut/tensor_ops.hpp"
#include "serialize_internal.hpp"

namespace htcut {

namespace {

using detail::format_real;

// Runs body(0..count-1) on up to `jobs` threads. Exceptions are collected
// per index and the one with the smallest index is rethrown, so failures do
// not depend on scheduling.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  std::size_t threads = jobs > 0 ? static_cast<std::size_t>(jobs)
                                 : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, count);
  std::vector<std::exception_ptr> errors(count);
  auto run = [&](std::size_t i) {
    try {
      body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) run(i);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

std::size_t choose(std::size_t n, int k) {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c = c * static_cast<double>(n - i) / (i + 1);
  return static_cast<std::size_t>(std::llround(c));
}

// Random corpus member for trial `trial`: order drawn from `orders`, n in
// [k+1, max_n], m between the connectivity minimum and min(C(n,k), 2n).
Hypergraph corpus_instance(std::uint64_t seed, std::size_t trial, const std::vector<int>& orders,
                           std::size_t max_n, bool connected) {
  auto rng = seeded_rng(seed, trial);
  const int k = orders[rng() % orders.size()];
  const std::size_t lo_n = k + 1;
  const std::size_t hi_n = std::max(lo_n, max_n);
  const std::size_t n = lo_n + rng() % (hi_n - lo_n + 1);
  const std::size_t lo_m = connected ? (n - 1 + k - 2) / (k - 1) : 1;
  const std::size_t hi_m = std::max(lo_m, std::min(choose(n, k), 2 * n));
  const std::size_t m = lo_m + rng() % (hi_m - lo_m + 1);
  const bool weighted = trial % 2 == 1;
  const std::uint64_t gen_seed = rng();
  return connected ? gen_connected_uniform(n, k, m, weighted, gen_seed)
                   : gen_uniform(n, k, m, weighted, gen_seed);
}

Eigen::VectorXd corpus_vector(std::uint64_t seed, std::size_t trial, std::size_t n) {
  auto rng = seeded_rng(seed, trial + (std::uint64_t{1} << 40));
  std::normal_distribution<double> gauss;
  Eigen::VectorXd x(n);
  for (auto& v : x) v = gauss(rng);
  return x;
}

// Clique reduction built from the incidence matrix, H W H^T, sharing no code
// with the tensor routines. Returns the clique-expansion Laplacian.
Eigen::MatrixXd incidence_clique_laplacian(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  Eigen::MatrixXd inc = Eigen::MatrixXd::Zero(n, h.num_edges());
  Eigen::VectorXd w(h.num_edges());
  for (std::size_t j = 0; j < h.num_edges(); ++j) {
    for (NodeId v : h.edge(j).nodes) inc(v, j) = 1.0;
    w[j] = h.edge(j).weight;
  }
  Eigen::MatrixXd adj = inc * w.asDiagonal() * inc.transpose();
  adj.diagonal().setZero();
  Eigen::MatrixXd lap = -adj;
  lap.diagonal() = adj.rowwise().sum();
  return lap;
}

struct Property {
  std::string name;
  double tolerance;
};

// Per-trial outcome: the instance and one error value per property.
struct TrialOutcome {
  Hypergraph h{1, 2, {}};
  std::vector<double> errors;
};

VerifyReport collect(Suite suite, const std::vector<Property>& props,
                     std::vector<TrialOutcome> outcomes) {
  VerifyReport rep;
  rep.suite = suite;
  rep.trials = outcomes.size();
  // max_error is signed: margin checks report how close they came.
  for (const auto& p : props) {
    rep.properties.push_back({p.name, p.tolerance, -std::numeric_limits<double>::infinity(), 0, 0});
  }
  const TrialOutcome* worst = nullptr;
  for (const auto& o : outcomes) {
    bool failed = false;
    for (std::size_t j = 0; j < props.size(); ++j) {
      auto& pr = rep.properties[j];
      const double err = o.errors[j];
      pr.max_error = std::max(pr.max_error, err);
      if (err <= pr.tolerance) {
        ++pr.passed;
      } else {
        ++pr.failed;
        failed = true;
      }
    }
    if (failed && (!worst || o.h.num_nodes() < worst->h.num_nodes() ||
                   (o.h.num_nodes() == worst->h.num_nodes() &&
                    o.h.num_edges() < worst->h.num_edges()))) {
      worst = &o;
    }
  }
  if (worst) rep.failing_instance = serialize_hypergraph(worst->h);
  return rep;
}

std::vector<int> orders_or(int k, std::vector<int> fallback) {
  return k > 0 ? std::vector<int>{k} : fallback;
}

VerifyReport suite_contraction(const VerifyOptions& o) {
  const auto orders = orders_or(o.k, {3, 4, 5});
  std::vector<TrialOutcome> out(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    Hypergraph h = corpus_instance(o.seed, i, orders, o.max_n, false);
    const double k1 = h.cardinality() - 1;
    const Eigen::MatrixXd lt = contract_to_matrix(h);
    const Eigen::MatrixXd indep = incidence_clique_laplacian(h);
    const Eigen::MatrixXd tensor_lt = dense_tensor(h, LaplacianKind::kUnnormalized).contract_ones();
    out[i].errors = {max_abs(tensor_lt - lt), max_abs(indep / k1 - lt),
                     max_abs(clique_laplacian(h) - indep)};
    out[i].h = std::move(h);
  });
  VerifyReport rep = collect(Suite::kContraction,
                             {{"L 1^{k-2} = L_T (dense tensor)", 1e-12},
                              {"L_T = H W H^T reduction / (k-1)", 1e-12},
                              {"L_c = (k-1) L_T", 1e-12}},
                             std::move(out));
  const Eigen::MatrixXd a = clique_laplacian(fixture("same_graph_pair_a"));
  const Eigen::MatrixXd b = clique_laplacian(fixture("same_graph_pair_b"));
  const bool same = a == b;
  rep.properties.push_back({"same_graph_pair clique matrices identical", 0.0,
                            max_abs(a - b), same ? 1u : 0u, same ? 0u : 1u});
  return rep;
}

VerifyReport suite_bound(const VerifyOptions& o) {
  if (o.k != 0 && (o.k % 2 != 0 || o.k < 2)) throw InputError("bound suite needs an even k");
  const auto orders = orders_or(o.k, {4});
  std::vector<TrialOutcome> out(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    Hypergraph h = corpus_instance(o.seed, i, orders, std::min<std::size_t>(o.max_n, 16), true);
    const BoundCheck b = check_bound(h, o.solver);
    out[i].errors = {b.lambda1 - b.bound, b.lambda1 - b.weak_bound, b.bound - b.weak_bound};
    out[i].h = std::move(h);
  });
  return collect(Suite::kBound,
                 {{"lambda1 <= k phi", 1e-9},
                  {"lambda1 <= 2^(k/2) phi", 1e-9},
                  {"k phi <= 2^(k/2) phi", 0.0}},
                 std::move(out));
}

VerifyReport suite_lemma1(const VerifyOptions& o) {
  const auto orders = orders_or(o.k, {2, 3, 4, 5});
  std::vector<TrialOutcome> out(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    Hypergraph h = corpus_instance(o.seed, i, orders, o.max_n, true);
    const LaplacianOperator un(h, LaplacianKind::kUnnormalized);
    const LaplacianOperator no(h, LaplacianKind::kNormalized);
    out[i].errors = {eigen_residual(un, 0.0, un.trivial_eigenvector()),
                     eigen_residual(no, 0.0, no.trivial_eigenvector())};
    out[i].h = std::move(h);
  });
  return collect(Suite::kLemma1,
                 {{"unnormalized (0, uniform) residual", 1e-12},
                  {"normalized (0, d^(1/k)) residual", 1e-12}},
                 std::move(out));
}

VerifyReport suite_oracle(const VerifyOptions& o) {
  const auto orders = orders_or(o.k, {3});
  std::vector<TrialOutcome> out(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    Hypergraph h = corpus_instance(o.seed, i, orders, std::min<std::size_t>(o.max_n, 16), true);
    const double best = oracle_min_ratio_cut(h, 2).metrics.ratio_cut;
    const double score =
        score_partition(h, 2, LaplacianKind::kUnnormalized, o.solver).metrics.ratio_cut;
    out[i].errors = {(best - score) / std::max(score, 1e-300)};
    out[i].h = std::move(h);
  });
  return collect(Suite::kOracle, {{"oracle <= score ratio cut (relative)", 1e-12}},
                 std::move(out));
}

VerifyReport suite_fastpath(const VerifyOptions& o) {
  const auto orders = orders_or(o.k, {3, 4});
  std::vector<TrialOutcome> out(o.trials);
  parallel_for(o.trials, o.jobs, [&](std::size_t i) {
    Hypergraph h = corpus_instance(o.seed, i, orders, std::min<std::size_t>(o.max_n, 8), true);
    const Eigen::VectorXd x = corpus_vector(o.seed, i, h.num_nodes());
    const int k = h.cardinality();
    std::vector<double> errs(4, 0.0);
    for (LaplacianKind kind : {LaplacianKind::kUnnormalized, LaplacianKind::kNormalized}) {
      const LaplacianOperator op(h, kind);
      const DenseTensor t = dense_tensor(h, kind);
      const double ref = t.contract_all(x);
      errs[0] = std::max(errs[0], std::abs(op.objective(x) - ref) / std::max(1.0, std::abs(ref)));
      const Eigen::VectorXd ref_apply = t.contract_but_one(x);
      errs[1] = std::max(errs[1], (op.apply(x) - ref_apply).lpNorm<Eigen::Infinity>() /
                                      std::max(1.0, ref_apply.lpNorm<Eigen::Infinity>()));
      // Central differences of the objective against k L x^{k-1}, and of
      // apply against the Jacobian.
      const double step = 1e-5;
      const Eigen::VectorXd grad = k * op.apply(x);
      const Eigen::MatrixXd jac = op.jacobian(x);
      for (Eigen::Index j = 0; j < x.size(); ++j) {
        Eigen::VectorXd xp = x, xm = x;
        xp[j] += step;
        xm[j] -= step;
        const double fd = (op.objective(xp) - op.objective(xm)) / (2 * step);
        errs[2] = std::max(errs[2], std::abs(fd - grad[j]) / std::max(1.0, std::abs(grad[j])));
        const Eigen::VectorXd col = (op.apply(xp) - op.apply(xm)) / (2 * step);
        errs[3] = std::max(errs[3], (col - jac.col(j)).lpNorm<Eigen::Infinity>() /
                                        std::max(1.0, jac.col(j).lpNorm<Eigen::Infinity>()));
      }
    }
    out[i].errors = std::move(errs);
    out[i].h = std::move(h);
  });
  return collect(Suite::kFastPath,
                 {{"objective vs dense tensor", 1e-10},
                  {"apply vs dense tensor", 1e-10},
                  {"gradient vs central differences", 1e-6},
                  {"Jacobian vs central differences", 1e-6}},
                 std::move(out));
}

}  // namespace

std::vector<CockroachRow> bench_cockroach(int t_min, int t_max, const SolverConfig& cfg) {
  if (t_min < 2 || t_max < t_min) throw InputError("need 2 <= t-min <= t-max");
  std::vector<CockroachRow> rows;
  for (int t = t_min; t <= t_max; ++t) {
    const Hypergraph h = gen_cockroach(t);
    const EigenPair f = fiedler(h, LaplacianKind::kUnnormalized, cfg);
    CockroachRow row;
    row.t = t;
    row.r_sign = sign_partition(h, f).metrics.classical_ratio_cut;
    row.r_score = score_partition(h, 2, LaplacianKind::kUnnormalized, f).metrics.classical_ratio_cut;
    row.pi = percentage_improvement(row.r_sign, row.r_score);
    row.ok = row.r_sign == 1.0 && row.r_score == 2.0 / t;
    rows.push_back(row);
  }
  return rows;
}

std::string cockroach_csv(const std::vector<CockroachRow>& rows) {
  std::string out = "t,r_sign,r_score,pi\n";
  for (const auto& r : rows) {
    out += std::to_string(r.t) + ',' + format_real(r.r_sign) + ',' + format_real(r.r_score) +
           ',' + format_real(r.pi) + '\n';
  }
  return out;
}

std::vector<ExperimentRecord> bench_random(const BenchSpec& spec) {
  if (spec.ps.empty()) throw InputError("bench needs at least one probability");
  if (spec.base.family == Family::kCockroach || spec.base.family == Family::kFixture) {
    throw InputError("bench_random covers er, sbm and hysbm");
  }
  spec.solver.validate();
  const std::size_t total = spec.ps.size() * spec.instances;
  std::vector<ExperimentRecord> records(total);
  parallel_for(total, spec.jobs, [&](std::size_t slot) {
    const std::size_t j = slot / spec.instances;
    const std::size_t i = slot % spec.instances;
    GenSpec g = spec.base;
    g.p = spec.ps[j];
    g.seed = seeded_rng(spec.seed, i)();
    const Hypergraph h = generate(g);
    ExperimentRecord rec = compare_methods(h, spec.clusters, spec.kind, spec.solver);
    rec.spec = g;
    rec.index = i;
    records[slot] = std::move(rec);
  });
  return records;
}

std::string records_csv(const std::vector<ExperimentRecord>& records) {
  std::string out =
      "family,p,q,n,k,index,seed,num_edges,lambda1,r_f,r_p,pi,pi_defined,components_sign,"
      "components_score,singletons_sign,singletons_score,runtime_ms\n";
  for (const auto& r : records) {
    const GenSpec& g = r.spec;
    const std::size_t n = g.family == Family::kErdosRenyi ? g.n : g.n1 + g.n2;
    const int k = g.family == Family::kHypergraphSbm ? g.k : 2;
    out += std::string(to_string(g.family)) + ',' + format_real(g.p) + ',' +
           format_real(g.family == Family::kErdosRenyi ? 0.0 : g.q) + ',' + std::to_string(n) +
           ',' + std::to_string(k) + ',' + std::to_string(r.index) + ',' +
           std::to_string(g.seed) + ',' + std::to_string(r.num_edges) + ',' +
           format_real(r.lambda1) + ',' + format_real(r.r_f) + ',' + format_real(r.r_p) + ',' +
           format_real(r.pi) + ',' + (r.pi_defined ? "1" : "0") + ',' +
           std::to_string(r.components_sign) + ',' + std::to_string(r.components_score) + ',' +
           std::to_string(r.singletons_sign) + ',' + std::to_string(r.singletons_score) + ',' +
           format_real(r.runtime_ms) + '\n';
  }
  return out;
}

std::string histogram_csv(const std::vector<ExperimentRecord>& records) {
  std::map<double, std::vector<double>> by_p;
  for (const auto& r : records) {
    auto& v = by_p[r.spec.p];
    if (r.pi_defined) v.push_back(r.pi);
  }
  std::string out = "p,bin_lo,bin_hi,count\n";
  for (const auto& [p, values] : by_p) {
    if (values.empty()) continue;
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    const double lo = std::floor(*mn / 10.0) * 10.0;
    const std::size_t bins = static_cast<std::size_t>(std::floor((*mx - lo) / 10.0)) + 1;
    std::vector<std::size_t> counts(bins, 0);
    for (double v : values) {
      counts[std::min(bins - 1, static_cast<std::size_t>(std::floor((v - lo) / 10.0)))]++;
    }
    for (std::size_t b = 0; b < bins; ++b) {
      out += format_real(p) + ',' + format_real(lo + 10.0 * b) + ',' +
             format_real(lo + 10.0 * (b + 1)) + ',' + std::to_string(counts[b]) + '\n';
    }
  }
  return out;
}

std::vector<BenchSummary> summarize(const std::vector<ExperimentRecord>& records) {
  std::map<double, std::vector<const ExperimentRecord*>> by_p;
  for (const auto& r : records) by_p[r.spec.p].push_back(&r);
  std::vector<BenchSummary> out;
  for (const auto& [p, recs] : by_p) {
    BenchSummary s;
    s.p = p;
    s.instances = recs.size();
    std::vector<double> pis;
    for (const auto* r : recs) {
      if (!r->pi_defined) {
        ++s.undefined;
      } else {
        pis.push_back(r->pi);
        if (r->pi < 0.0) ++s.negative;
      }
      s.mean_singletons_sign += r->singletons_sign;
      s.mean_singletons_score += r->singletons_score;
    }
    s.mean_singletons_sign /= recs.size();
    s.mean_singletons_score /= recs.size();
    if (!pis.empty()) {
      double sum = 0.0;
      for (double v : pis) sum += v;
      s.mean_pi = sum / pis.size();
      std::sort(pis.begin(), pis.end());
      const std::size_t h = pis.size() / 2;
      s.median_pi = pis.size() % 2 ? pis[h] : 0.5 * (pis[h - 1] + pis[h]);
    }
    out.push_back(s);
  }
  return out;
}

std::string summary_csv(const std::vector<BenchSummary>& summary) {
  std::string out =
      "p,instances,negative,negative_fraction,undefined,mean_pi,median_pi,"
      "mean_singletons_sign,mean_singletons_score\n";
  for (const auto& s : summary) {
    out += format_real(s.p) + ',' + std::to_string(s.instances) + ',' +
           std::to_string(s.negative) + ',' +
           format_real(s.instances ? static_cast<double>(s.negative) / s.instances : 0.0) + ',' +
           std::to_string(s.undefined) + ',' + format_real(s.mean_pi) + ',' +
           format_real(s.median_pi) + ',' + format_real(s.mean_singletons_sign) + ',' +
           format_real(s.mean_singletons_score) + '\n';
  }
  return out;
}

const char* to_string(Suite s) {
  switch (s) {
    case Suite::kContraction: return "contraction";
    case Suite::kBound: return "bound";
    case Suite::kLemma1: return "lemma1";
    case Suite::kOracle: return "oracle";
    case Suite::kFastPath: return "fastpath";
  }
  return "?";
}

Suite suite_from_string(std::string_view s) {
  for (Suite v : {Suite::kContraction, Suite::kBound, Suite::kLemma1, Suite::kOracle,
                  Suite::kFastPath}) {
    if (s == to_string(v)) return v;
  }
  throw InputError("unknown verify suite '" + std::string(s) + "'");
}

bool VerifyReport::ok() const {
  for (const auto& p : properties) {
    if (p.failed > 0) return false;
  }
  return true;
}

VerifyReport run_suite(Suite suite, const VerifyOptions& opts) {
  if (opts.trials == 0) throw InputError("trials must be positive");
  opts.solver.validate();
  switch (suite) {
    case Suite::kContraction: return suite_contraction(opts);
    case Suite::kBound: return suite_bound(opts);
    case Suite::kLemma1: return suite_lemma1(opts);
    case Suite::kOracle: return suite_oracle(opts);
    case Suite::kFastPath: return suite_fastpath(opts);
  }
  throw InputError("unknown verify suite");
}

std::string format_report(const VerifyReport& report) {
  std::string out = std::string("suite ") + to_string(report.suite) + ", " +
                    std::to_string(report.trials) + " trials\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-4s  %-42s  %6s  %6s  %12s  %9s\n", "", "property", "pass",
                "fail", "max", "tol");
  out += line;
  for (const auto& p : report.properties) {
    std::snprintf(line, sizeof line, "%-4s  %-42s  %6zu  %6zu  %12.4e  %9.1e\n",
                  p.failed ? "FAIL" : "ok", p.name.c_str(), p.passed, p.failed, p.max_error,
                  p.tolerance);
    out += line;
  }
  return out;
}

}  // namespace htcut
