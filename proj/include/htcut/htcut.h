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

/* C interface to the htcut library.
 *
 * Hypergraphs live behind an opaque handle. Every fallible call returns an
 * htcut_status; on failure htcut_last_error() describes the problem for the
 * calling thread until its next htcut call. Strings handed out through a
 * char** parameter are owned by the caller and released with
 * htcut_string_free(). Node and edge ids in all text output are 1-based. */

#ifndef HTCUT_HTCUT_H_
#define HTCUT_HTCUT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HTCUT_BUILDING_LIBRARY)
#define HTCUT_API __declspec(dllexport)
#else
#define HTCUT_API __declspec(dllimport)
#endif
#else
#define HTCUT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define HTCUT_VERSION_STRING "0.1.0"

typedef enum htcut_status {
  HTCUT_OK = 0,
  HTCUT_ERR_INPUT = 1,        /* bad file, argument or precondition */
  HTCUT_ERR_NUMERICAL = 2,    /* no converged eigenpair */
  HTCUT_ERR_VERIFICATION = 3, /* a checked property failed */
  HTCUT_ERR_INTERNAL = 4
} htcut_status;

typedef struct htcut_hypergraph htcut_hypergraph;

/* Solver settings plus the Laplacian flavour. Start from
 * htcut_options_default(). */
typedef struct htcut_options {
  int restarts;
  int max_iters;
  double tol;
  double cluster_tol;
  double positivity;
  uint64_t seed;
  int threads;      /* 0: hardware concurrency */
  int force_newton; /* k = 2: iterate instead of a dense solve */
  int normalized;   /* nonzero: normalized Laplacian */
} htcut_options;

/* family is one of "er", "sbm", "hysbm", "cockroach", "fixture". */
typedef struct htcut_gen_spec {
  const char* family;
  size_t n;
  size_t n1;
  size_t n2;
  int k;
  int t;
  double p;
  double q;
  const char* name; /* fixture name */
  uint64_t seed;
} htcut_gen_spec;

typedef struct htcut_bench_spec {
  htcut_gen_spec base;
  const double* ps; /* swept over; overrides base.p */
  size_t num_ps;
  size_t instances; /* per entry of ps */
  uint64_t seed;
  int jobs;
  int clusters;
} htcut_bench_spec;

typedef struct htcut_verify_options {
  size_t trials;
  uint64_t seed;
  int jobs;
  int k;        /* 0: suite default */
  size_t max_n;
} htcut_verify_options;

HTCUT_API const char* htcut_version(void);
HTCUT_API const char* htcut_last_error(void);
HTCUT_API const char* htcut_status_name(htcut_status status);
HTCUT_API void htcut_string_free(char* s);

HTCUT_API void htcut_options_default(htcut_options* opts);
HTCUT_API void htcut_gen_spec_default(htcut_gen_spec* spec);
HTCUT_API void htcut_bench_spec_default(htcut_bench_spec* spec);
HTCUT_API void htcut_verify_options_default(htcut_verify_options* opts);

/* Construction. *out is set only on success. */
HTCUT_API htcut_status htcut_hypergraph_parse(const char* text, htcut_hypergraph** out);
HTCUT_API htcut_status htcut_hypergraph_load(const char* path, htcut_hypergraph** out);
HTCUT_API htcut_status htcut_hypergraph_fixture(const char* name, htcut_hypergraph** out);
HTCUT_API htcut_status htcut_hypergraph_generate(const htcut_gen_spec* spec,
                                                 htcut_hypergraph** out);
HTCUT_API void htcut_hypergraph_free(htcut_hypergraph* h);

/* 0 for a null handle. */
HTCUT_API size_t htcut_hypergraph_num_nodes(const htcut_hypergraph* h);
HTCUT_API size_t htcut_hypergraph_num_edges(const htcut_hypergraph* h);
HTCUT_API int htcut_hypergraph_cardinality(const htcut_hypergraph* h);

/* ".hg" text. */
HTCUT_API htcut_status htcut_hypergraph_serialize(const htcut_hypergraph* h, char** out);

/* Numeric kernels. x has num_nodes entries; out has num_nodes (apply) or
 * num_edges (scores) entries. */
HTCUT_API htcut_status htcut_objective(const htcut_hypergraph* h, int normalized,
                                       const double* x, double* out);
HTCUT_API htcut_status htcut_apply(const htcut_hypergraph* h, int normalized,
                                   const double* x, double* out);
HTCUT_API htcut_status htcut_edge_scores(const htcut_hypergraph* h, int normalized,
                                         const double* x, double* out);

/* Fiedler pair: minimum positive Z-eigenvalue. vector needs num_nodes
 * entries and may be null. */
HTCUT_API htcut_status htcut_fiedler(const htcut_hypergraph* h, const htcut_options* opts,
                                     double* lambda, double* vector);

/* All distinct eigenpairs found, as JSON {"pairs": [...]}. */
HTCUT_API htcut_status htcut_eigenpairs_json(const htcut_hypergraph* h,
                                             const htcut_options* opts, char** out);

/* method is "score", "sign" or "oracle". The JSON carries the clusters,
 * removed edges, cut metrics and, for the score method with p = 2, the
 * percentage improvement over the sign split from the same eigenvector. */
HTCUT_API htcut_status htcut_partition_json(const htcut_hypergraph* h, int p,
                                            const char* method, const htcut_options* opts,
                                            char** out);

/* Cut metrics of a partition given as text, one cluster per line. */
HTCUT_API htcut_status htcut_cut_report_json(const htcut_hypergraph* h,
                                             const char* partition_text, char** out);

/* which = 0: degree-preserving clique reduction L 1^{k-2}; which = 1: clique
 * expansion Laplacian. CSV with n on the first line. */
HTCUT_API htcut_status htcut_contract_csv(const htcut_hypergraph* h, int which, char** out);

/* Cockroach sweep CSV "t,r_sign,r_score,pi". Returns HTCUT_ERR_VERIFICATION
 * (with *csv still set) when a row misses its closed form. */
HTCUT_API htcut_status htcut_bench_cockroach(int t_min, int t_max, const htcut_options* opts,
                                             char** csv);

/* Random-family sweep. Any of the output pointers may be null. */
HTCUT_API htcut_status htcut_bench_random(const htcut_bench_spec* spec,
                                          const htcut_options* opts, char** records_csv,
                                          char** histogram_csv, char** summary_csv);

/* suite is "contraction", "bound", "lemma1", "oracle" or "fastpath".
 * Returns HTCUT_ERR_VERIFICATION when a property fails; *table is set either
 * way and *failing_instance (may be null) holds the smallest failing
 * hypergraph, or an empty string. */
HTCUT_API htcut_status htcut_verify(const char* suite, const htcut_verify_options* vopts,
                                    const htcut_options* opts, char** table,
                                    char** failing_instance);

#ifdef __cplusplus
}
#endif

#endif /* HTCUT_HTCUT_H_ */
