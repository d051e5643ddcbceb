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

// Benchmark sweeps and property suites behind `htcut bench` and
// `htcut verify`. Everything here is deterministic given the seed, and
// records come back in instance order whatever the thread count.

#ifndef HTCUT_EXPERIMENTS_HPP_
#define HTCUT_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "htcut/eigensolver.hpp"
#include "htcut/generators.hpp"
#include "htcut/partitioner.hpp"

namespace htcut {

// Cockroach sweep. Ratio cuts here are the classical sum_i cut(C_i)/|C_i|,
// for which the closed forms are r_sign = 1 and r_score = 2/t.
struct CockroachRow {
  int t = 0;
  double r_sign = 0.0;
  double r_score = 0.0;
  double pi = 0.0;
  bool ok = false;  // both closed forms reproduced exactly
};

std::vector<CockroachRow> bench_cockroach(int t_min, int t_max, const SolverConfig& cfg);

// Header "t,r_sign,r_score,pi".
std::string cockroach_csv(const std::vector<CockroachRow>& rows);

struct BenchSpec {
  GenSpec base;                 // family, sizes, q, k
  std::vector<double> ps;       // one sweep per intra/edge probability
  std::size_t instances = 100;  // per p
  std::uint64_t seed = 1;
  int jobs = 1;                 // 0: hardware concurrency
  int clusters = 2;
  LaplacianKind kind = LaplacianKind::kUnnormalized;
  SolverConfig solver;
};

// Instance i of every p is generated from seeded_rng(spec.seed, i)(), so the
// p sweeps share their random streams. Records are ordered by (p, index).
std::vector<ExperimentRecord> bench_random(const BenchSpec& spec);

// Header "family,p,q,n,k,index,seed,num_edges,lambda1,r_f,r_p,pi,pi_defined,
// components_sign,components_score,singletons_sign,singletons_score,
// runtime_ms".
std::string records_csv(const std::vector<ExperimentRecord>& records);

// PI histogram per p, 10-wide bins from floor(min/10)*10 up to the maximum.
// Header "p,bin_lo,bin_hi,count". Undefined PI values are skipped.
std::string histogram_csv(const std::vector<ExperimentRecord>& records);

struct BenchSummary {
  double p = 0.0;
  std::size_t instances = 0;
  std::size_t negative = 0;   // PI < 0
  std::size_t undefined = 0;  // r_f = 0
  double mean_pi = 0.0;
  double median_pi = 0.0;
  double mean_singletons_sign = 0.0;
  double mean_singletons_score = 0.0;
};

std::vector<BenchSummary> summarize(const std::vector<ExperimentRecord>& records);

// Header "p,instances,negative,negative_fraction,undefined,mean_pi,median_pi,
// mean_singletons_sign,mean_singletons_score".
std::string summary_csv(const std::vector<BenchSummary>& summary);

enum class Suite { kContraction, kBound, kLemma1, kOracle, kFastPath };

const char* to_string(Suite s);
Suite suite_from_string(std::string_view s);

struct VerifyOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  int jobs = 1;
  int k = 0;               // 0: the suite's default orders
  std::size_t max_n = 10;  // upper bound on random instance size
  SolverConfig solver;
};

// One property, checked on every trial.
struct PropertyResult {
  std::string name;
  double tolerance = 0.0;
  double max_error = 0.0;  // largest observed value of the checked quantity
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct VerifyReport {
  Suite suite = Suite::kContraction;
  std::size_t trials = 0;
  std::vector<PropertyResult> properties;
  // ".hg" text of the smallest failing instance (fewest nodes, then edges),
  // empty when everything passed.
  std::string failing_instance;

  bool ok() const;
};

VerifyReport run_suite(Suite suite, const VerifyOptions& opts);

// Fixed-width pass/fail table.
std::string format_report(const VerifyReport& report);

}  // namespace htcut

#endif  // HTCUT_EXPERIMENTS_HPP_
