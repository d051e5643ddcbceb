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

#include "htcut/htcut.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "htcut/cuts.hpp"
#include "htcut/eigensolver.hpp"
#include "htcut/error.hpp"
#include "htcut/experiments.hpp"
#include "htcut/generators.hpp"
#include "htcut/hypergraph.hpp"
#include "htcut/partitioner.hpp"
#include "htcut/serialize.hpp"
#include "htcut/tensor_ops.hpp"

struct htcut_hypergraph {
  htcut::Hypergraph h;
};

namespace {

thread_local std::string last_error;

htcut_status fail(htcut_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs f and converts any exception into a status plus last_error.
template <class F>
htcut_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const htcut::Error& e) {
    switch (e.kind()) {
      case htcut::ErrorKind::kInput: return fail(HTCUT_ERR_INPUT, e.what());
      case htcut::ErrorKind::kNumerical: return fail(HTCUT_ERR_NUMERICAL, e.what());
      case htcut::ErrorKind::kVerification: return fail(HTCUT_ERR_VERIFICATION, e.what());
    }
    return fail(HTCUT_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HTCUT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HTCUT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HTCUT_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw htcut::InputError(std::string(what) + " must not be null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

htcut_status wrap(htcut::Hypergraph h, htcut_hypergraph** out) {
  *out = new htcut_hypergraph{std::move(h)};
  return HTCUT_OK;
}

htcut::LaplacianKind kind_of(int normalized) {
  return normalized ? htcut::LaplacianKind::kNormalized : htcut::LaplacianKind::kUnnormalized;
}

htcut::SolverConfig solver_of(const htcut_options* o) {
  htcut::SolverConfig cfg;
  if (o) {
    cfg.restarts = o->restarts;
    cfg.max_iters = o->max_iters;
    cfg.tol = o->tol;
    cfg.cluster_tol = o->cluster_tol;
    cfg.positivity = o->positivity;
    cfg.seed = o->seed;
    cfg.threads = o->threads;
    cfg.force_newton = o->force_newton != 0;
  }
  cfg.validate();
  return cfg;
}

htcut::GenSpec gen_of(const htcut_gen_spec& s) {
  htcut::GenSpec g;
  require(s.family, "family");
  g.family = htcut::family_from_string(s.family);
  g.n = s.n;
  g.n1 = s.n1;
  g.n2 = s.n2;
  g.k = s.k;
  g.t = s.t;
  g.p = s.p;
  g.q = s.q;
  if (s.name) g.name = s.name;
  g.seed = s.seed;
  return g;
}

Eigen::VectorXd vec_of(const htcut::Hypergraph& h, const double* x) {
  require(x, "x");
  return Eigen::Map<const Eigen::VectorXd>(x, static_cast<Eigen::Index>(h.num_nodes()));
}

}  // namespace

extern "C" {

const char* htcut_version(void) { return HTCUT_VERSION_STRING; }

const char* htcut_last_error(void) { return last_error.c_str(); }

const char* htcut_status_name(htcut_status status) {
  switch (status) {
    case HTCUT_OK: return "ok";
    case HTCUT_ERR_INPUT: return "input error";
    case HTCUT_ERR_NUMERICAL: return "numerical error";
    case HTCUT_ERR_VERIFICATION: return "verification failure";
    case HTCUT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void htcut_string_free(char* s) { std::free(s); }

void htcut_options_default(htcut_options* opts) {
  if (!opts) return;
  const htcut::SolverConfig cfg;
  opts->restarts = cfg.restarts;
  opts->max_iters = cfg.max_iters;
  opts->tol = cfg.tol;
  opts->cluster_tol = cfg.cluster_tol;
  opts->positivity = cfg.positivity;
  opts->seed = cfg.seed;
  opts->threads = cfg.threads;
  opts->force_newton = 0;
  opts->normalized = 0;
}

void htcut_gen_spec_default(htcut_gen_spec* spec) {
  if (!spec) return;
  const htcut::GenSpec g;
  spec->family = "er";
  spec->n = g.n;
  spec->n1 = g.n1;
  spec->n2 = g.n2;
  spec->k = g.k;
  spec->t = g.t;
  spec->p = g.p;
  spec->q = g.q;
  spec->name = nullptr;
  spec->seed = g.seed;
}

void htcut_bench_spec_default(htcut_bench_spec* spec) {
  if (!spec) return;
  htcut_gen_spec_default(&spec->base);
  spec->ps = nullptr;
  spec->num_ps = 0;
  spec->instances = 100;
  spec->seed = 1;
  spec->jobs = 1;
  spec->clusters = 2;
}

void htcut_verify_options_default(htcut_verify_options* opts) {
  if (!opts) return;
  const htcut::VerifyOptions v;
  opts->trials = v.trials;
  opts->seed = v.seed;
  opts->jobs = v.jobs;
  opts->k = v.k;
  opts->max_n = v.max_n;
}

htcut_status htcut_hypergraph_parse(const char* text, htcut_hypergraph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    return wrap(htcut::parse_hypergraph(std::string_view(text)), out);
  });
}

htcut_status htcut_hypergraph_load(const char* path, htcut_hypergraph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    return wrap(htcut::load_hypergraph(path), out);
  });
}

htcut_status htcut_hypergraph_fixture(const char* name, htcut_hypergraph** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    return wrap(htcut::fixture(name), out);
  });
}

htcut_status htcut_hypergraph_generate(const htcut_gen_spec* spec, htcut_hypergraph** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    return wrap(htcut::generate(gen_of(*spec)), out);
  });
}

void htcut_hypergraph_free(htcut_hypergraph* h) { delete h; }

size_t htcut_hypergraph_num_nodes(const htcut_hypergraph* h) { return h ? h->h.num_nodes() : 0; }

size_t htcut_hypergraph_num_edges(const htcut_hypergraph* h) { return h ? h->h.num_edges() : 0; }

int htcut_hypergraph_cardinality(const htcut_hypergraph* h) { return h ? h->h.cardinality() : 0; }

htcut_status htcut_hypergraph_serialize(const htcut_hypergraph* h, char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    *out = dup(htcut::serialize_hypergraph(h->h));
    return HTCUT_OK;
  });
}

htcut_status htcut_objective(const htcut_hypergraph* h, int normalized, const double* x,
                             double* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    *out = htcut::objective(h->h, kind_of(normalized), vec_of(h->h, x));
    return HTCUT_OK;
  });
}

htcut_status htcut_apply(const htcut_hypergraph* h, int normalized, const double* x,
                         double* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const Eigen::VectorXd y = htcut::apply(h->h, kind_of(normalized), vec_of(h->h, x));
    std::memcpy(out, y.data(), sizeof(double) * y.size());
    return HTCUT_OK;
  });
}

htcut_status htcut_edge_scores(const htcut_hypergraph* h, int normalized, const double* x,
                               double* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const auto s = htcut::edge_scores(h->h, kind_of(normalized), vec_of(h->h, x));
    if (!s.empty()) std::memcpy(out, s.data(), sizeof(double) * s.size());
    return HTCUT_OK;
  });
}

htcut_status htcut_fiedler(const htcut_hypergraph* h, const htcut_options* opts, double* lambda,
                           double* vector) {
  return guarded([&] {
    require(h, "hypergraph");
    require(lambda, "lambda");
    const htcut::EigenPair f =
        htcut::fiedler(h->h, kind_of(opts && opts->normalized), solver_of(opts));
    *lambda = f.lambda;
    if (vector) std::memcpy(vector, f.vector.data(), sizeof(double) * f.vector.size());
    return HTCUT_OK;
  });
}

htcut_status htcut_eigenpairs_json(const htcut_hypergraph* h, const htcut_options* opts,
                                   char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const auto pairs =
        htcut::find_eigenpairs(h->h, kind_of(opts && opts->normalized), solver_of(opts));
    *out = dup(htcut::eigenpairs_json(pairs));
    return HTCUT_OK;
  });
}

htcut_status htcut_partition_json(const htcut_hypergraph* h, int p, const char* method,
                                  const htcut_options* opts, char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const htcut::Method m = htcut::method_from_string(method ? method : "score");
    const htcut::LaplacianKind kind = kind_of(opts && opts->normalized);
    if (m == htcut::Method::kOracle) {
      *out = dup(htcut::partition_result_json(htcut::oracle_min_ratio_cut(h->h, p)));
      return HTCUT_OK;
    }
    if (m == htcut::Method::kSignCut && p != 2) {
      throw htcut::InputError("the sign method produces exactly 2 clusters");
    }
    const htcut::EigenPair f = htcut::fiedler(h->h, kind, solver_of(opts));
    if (m == htcut::Method::kSignCut) {
      *out = dup(htcut::partition_result_json(htcut::sign_partition(h->h, f)));
      return HTCUT_OK;
    }
    const htcut::PartitionResult score = htcut::score_partition(h->h, p, kind, f);
    std::optional<double> pi;
    if (p == 2) {
      const double r_f = htcut::sign_partition(h->h, f).metrics.ratio_cut;
      if (r_f > 0.0) pi = htcut::percentage_improvement(r_f, score.metrics.ratio_cut);
    }
    *out = dup(htcut::partition_result_json(score, pi));
    return HTCUT_OK;
  });
}

htcut_status htcut_cut_report_json(const htcut_hypergraph* h, const char* partition_text,
                                   char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(partition_text, "partition_text");
    require(out, "out");
    const htcut::Partition part = htcut::parse_partition(partition_text, h->h.num_nodes());
    *out = dup(htcut::cut_report_json(htcut::cut_cost(h->h, part)));
    return HTCUT_OK;
  });
}

htcut_status htcut_contract_csv(const htcut_hypergraph* h, int which, char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    if (which != 0 && which != 1) throw htcut::InputError("which must be 0 or 1");
    *out = dup(htcut::matrix_csv(which == 0 ? htcut::contract_to_matrix(h->h)
                                            : htcut::clique_laplacian(h->h)));
    return HTCUT_OK;
  });
}

htcut_status htcut_bench_cockroach(int t_min, int t_max, const htcut_options* opts, char** csv) {
  return guarded([&] {
    require(csv, "csv");
    const auto rows = htcut::bench_cockroach(t_min, t_max, solver_of(opts));
    *csv = dup(htcut::cockroach_csv(rows));
    std::string bad;
    for (const auto& r : rows) {
      if (!r.ok) {
        bad += (bad.empty() ? "" : "; ") + std::string("t=") + std::to_string(r.t) +
               ": expected r_sign=1, r_score=2/t";
      }
    }
    return bad.empty() ? HTCUT_OK : fail(HTCUT_ERR_VERIFICATION, bad);
  });
}

htcut_status htcut_bench_random(const htcut_bench_spec* spec, const htcut_options* opts,
                                char** records_csv, char** histogram_csv, char** summary_csv) {
  return guarded([&] {
    require(spec, "spec");
    htcut::BenchSpec b;
    b.base = gen_of(spec->base);
    if (spec->num_ps > 0) require(spec->ps, "ps");
    b.ps.assign(spec->ps, spec->ps + spec->num_ps);
    b.instances = spec->instances;
    b.seed = spec->seed;
    b.jobs = spec->jobs;
    b.clusters = spec->clusters;
    b.kind = kind_of(opts && opts->normalized);
    b.solver = solver_of(opts);
    const auto records = htcut::bench_random(b);
    put(records_csv, htcut::records_csv(records));
    put(histogram_csv, htcut::histogram_csv(records));
    put(summary_csv, htcut::summary_csv(htcut::summarize(records)));
    return HTCUT_OK;
  });
}

htcut_status htcut_verify(const char* suite, const htcut_verify_options* vopts,
                          const htcut_options* opts, char** table, char** failing_instance) {
  return guarded([&] {
    require(suite, "suite");
    require(table, "table");
    htcut::VerifyOptions v;
    if (vopts) {
      v.trials = vopts->trials;
      v.seed = vopts->seed;
      v.jobs = vopts->jobs;
      v.k = vopts->k;
      v.max_n = vopts->max_n;
    }
    v.solver = solver_of(opts);
    const htcut::VerifyReport rep = htcut::run_suite(htcut::suite_from_string(suite), v);
    *table = dup(htcut::format_report(rep));
    put(failing_instance, rep.failing_instance);
    return rep.ok() ? HTCUT_OK
                    : fail(HTCUT_ERR_VERIFICATION, std::string("suite ") + suite + " failed");
  });
}

}  // extern "C"
