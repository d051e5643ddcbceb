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

// htcut command-line tool. Talks to the library only through htcut.h.
//
// Exit codes: 0 ok, 1 usage or input error, 2 numerical failure,
// 3 verification failure, 4 internal error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "htcut/htcut.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { htcut_string_free(s); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct GraphDeleter {
  void operator()(htcut_hypergraph* h) const { htcut_hypergraph_free(h); }
};
using Graph = std::unique_ptr<htcut_hypergraph, GraphDeleter>;

// Thrown to unwind to main with a status already reported.
struct Exit {
  int code;
};

int exit_code(htcut_status s) { return static_cast<int>(s); }

void check(htcut_status s) {
  if (s == HTCUT_OK) return;
  std::cerr << "htcut: " << htcut_status_name(s) << ": " << htcut_last_error() << "\n";
  throw Exit{exit_code(s)};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    std::cerr << "htcut: cannot write '" << path << "'\n";
    throw Exit{1};
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "htcut: cannot open '" << path << "'\n";
    throw Exit{1};
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Graph load(const std::string& path) {
  htcut_hypergraph* h = nullptr;
  check(htcut_hypergraph_load(path.c_str(), &h));
  return Graph(h);
}

std::uint64_t env_seed(std::uint64_t fallback) {
  const char* s = std::getenv("HTCUT_SEED");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 0);
  if (*end != '\0') {
    std::cerr << "htcut: HTCUT_SEED is not an integer: '" << s << "'\n";
    throw Exit{1};
  }
  return v;
}

// Options shared by every command that runs the eigensolver.
struct SolverFlags {
  htcut_options opts{};
  bool normalized = false;

  void add(CLI::App* app) {
    htcut_options_default(&opts);
    app->add_option("--restarts", opts.restarts, "solver restarts")->capture_default_str();
    app->add_option("--max-iters", opts.max_iters, "iterations per restart")
        ->capture_default_str();
    app->add_option("--tol", opts.tol, "step length that ends a restart")->capture_default_str();
    app->add_option("--threads", opts.threads, "solver threads, 0 for all cores")
        ->capture_default_str();
    app->add_flag("--normalized", normalized, "use the normalized Laplacian");
    app->add_flag("--force-newton", opts.force_newton, "k = 2: iterate instead of a dense solve");
  }

  htcut_options* get() {
    opts.normalized = normalized ? 1 : 0;
    return &opts;
  }
};

struct GenFlags {
  htcut_gen_spec spec{};
  std::string family;
  std::string name;

  void add(CLI::App* app, bool with_family) {
    htcut_gen_spec_default(&spec);
    if (with_family) {
      app->add_option("family", family, "er, sbm, hysbm, cockroach or fixture")->required();
    }
    app->add_option("--n", spec.n, "nodes (er)")->capture_default_str();
    app->add_option("--n1", spec.n1, "first block size (sbm, hysbm)")->capture_default_str();
    app->add_option("--n2", spec.n2, "second block size (sbm, hysbm)")->capture_default_str();
    app->add_option("--k", spec.k, "hyperedge size (hysbm)")->capture_default_str();
    app->add_option("--q", spec.q, "inter-block probability")->capture_default_str();
  }

  const htcut_gen_spec* get() {
    spec.family = family.c_str();
    spec.name = name.empty() ? nullptr : name.c_str();
    return &spec;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral partitioning of k-uniform hypergraphs via Laplacian tensor eigenpairs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", htcut_version());

  std::uint64_t seed = 0;
  bool seed_given = false;
  auto add_seed = [&](CLI::App* sub) {
    sub->add_option_function<std::uint64_t>(
        "--seed",
        [&](const std::uint64_t& v) {
          seed = v;
          seed_given = true;
        },
        "random seed (default: $HTCUT_SEED)");
  };
  std::string output;
  auto add_output = [&](CLI::App* sub) { sub->add_option("-o,--output", output, "output file"); };

  // generate
  auto* gen = app.add_subcommand("generate", "write a generated hypergraph in .hg format");
  GenFlags gen_flags;
  gen_flags.add(gen, true);
  gen->add_option("--p", gen_flags.spec.p, "edge or intra-block probability")
      ->capture_default_str();
  gen->add_option("--t", gen_flags.spec.t, "cockroach size")->capture_default_str();
  gen->add_option("--name", gen_flags.name, "fixture name");
  add_seed(gen);
  add_output(gen);

  // partition
  auto* part = app.add_subcommand("partition", "partition a hypergraph, JSON result");
  std::string input;
  int clusters = 2;
  std::string method = "score";
  SolverFlags part_solver;
  part->add_option("-i,--input", input, "hypergraph file")->required();
  part->add_option("-p,--clusters", clusters, "number of clusters")->capture_default_str();
  part->add_option("--method", method, "score, sign or oracle")
      ->check(CLI::IsMember({"score", "sign", "oracle"}))
      ->capture_default_str();
  part_solver.add(part);
  add_seed(part);
  add_output(part);

  // eigen
  auto* eig = app.add_subcommand("eigen", "list the Z-eigenpairs found, JSON");
  SolverFlags eig_solver;
  eig->add_option("-i,--input", input, "hypergraph file")->required();
  eig_solver.add(eig);
  add_seed(eig);
  add_output(eig);

  // contract
  auto* con = app.add_subcommand("contract", "L 1^{k-2} (or the clique Laplacian) as CSV");
  bool clique = false;
  con->add_option("-i,--input", input, "hypergraph file")->required();
  con->add_flag("--clique", clique, "emit the clique expansion Laplacian (k-1) L 1^{k-2}");
  add_output(con);

  // cut
  auto* cut = app.add_subcommand("cut", "cut metrics of a given partition, JSON");
  std::string partition_file;
  cut->add_option("-i,--input", input, "hypergraph file")->required();
  cut->add_option("--partition", partition_file, "one cluster per line, 1-based ids")
      ->required();
  add_output(cut);

  // bench
  auto* bench = app.add_subcommand("bench", "experiment sweeps, CSV");
  bench->require_subcommand(1);
  auto* roach = bench->add_subcommand("cockroach", "sign vs score cut on cockroach graphs");
  int t_min = 3;
  int t_max = 20;
  SolverFlags roach_solver;
  roach->add_option("--t-min", t_min)->capture_default_str();
  roach->add_option("--t-max", t_max)->capture_default_str();
  roach_solver.add(roach);
  add_output(roach);

  std::vector<double> ps;
  std::size_t instances = 100;
  int jobs = 1;
  std::string histogram;
  std::string summary;
  SolverFlags rand_solver;
  GenFlags rand_gen;
  std::vector<CLI::App*> random_benches;
  for (const char* fam : {"er", "sbm", "hysbm"}) {
    auto* sub = bench->add_subcommand(fam, std::string("random ") + fam + " instances");
    rand_gen.add(sub, false);
    sub->add_option("--p", ps, "probabilities to sweep");
    sub->add_option("--instances", instances, "instances per probability")
        ->capture_default_str();
    sub->add_option("--jobs", jobs, "worker threads, 0 for all cores")->capture_default_str();
    sub->add_option("--histogram", histogram, "histogram CSV (default: <output>.hist.csv)");
    sub->add_option("--summary", summary, "summary CSV (default: stderr)");
    rand_solver.add(sub);
    add_seed(sub);
    add_output(sub);
    random_benches.push_back(sub);
  }

  // verify
  auto* ver = app.add_subcommand("verify", "property suites over seeded random corpora");
  std::string suite;
  htcut_verify_options vopts{};
  htcut_verify_options_default(&vopts);
  std::string dump = "failing_instance.hg";
  SolverFlags ver_solver;
  ver->add_option("suite", suite, "contraction, bound, lemma1, oracle or fastpath")
      ->required()
      ->check(CLI::IsMember({"contraction", "bound", "lemma1", "oracle", "fastpath"}));
  ver->add_option("--trials", vopts.trials)->capture_default_str();
  ver->add_option("--k", vopts.k, "hyperedge size, 0 for the suite default")
      ->capture_default_str();
  ver->add_option("--max-n", vopts.max_n)->capture_default_str();
  ver->add_option("--jobs", vopts.jobs)->capture_default_str();
  ver->add_option("--dump", dump, "where to write the smallest failing instance")
      ->capture_default_str();
  ver_solver.add(ver);
  add_seed(ver);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) {
      gen_flags.spec.seed = seed_given ? seed : env_seed(0);
      htcut_hypergraph* raw = nullptr;
      check(htcut_hypergraph_generate(gen_flags.get(), &raw));
      Graph h(raw);
      char* text = nullptr;
      check(htcut_hypergraph_serialize(h.get(), &text));
      write_output(output, CString(text).get());
    } else if (part->parsed()) {
      Graph h = load(input);
      htcut_options* o = part_solver.get();
      o->seed = seed_given ? seed : env_seed(o->seed);
      char* json = nullptr;
      check(htcut_partition_json(h.get(), clusters, method.c_str(), o, &json));
      write_output(output, std::string(CString(json).get()) + "\n");
    } else if (eig->parsed()) {
      Graph h = load(input);
      htcut_options* o = eig_solver.get();
      o->seed = seed_given ? seed : env_seed(o->seed);
      char* json = nullptr;
      check(htcut_eigenpairs_json(h.get(), o, &json));
      write_output(output, std::string(CString(json).get()) + "\n");
    } else if (con->parsed()) {
      Graph h = load(input);
      char* csv = nullptr;
      check(htcut_contract_csv(h.get(), clique ? 1 : 0, &csv));
      write_output(output, CString(csv).get());
    } else if (cut->parsed()) {
      Graph h = load(input);
      const std::string text = read_file(partition_file);
      char* json = nullptr;
      check(htcut_cut_report_json(h.get(), text.c_str(), &json));
      write_output(output, std::string(CString(json).get()) + "\n");
    } else if (roach->parsed()) {
      char* csv = nullptr;
      const htcut_status s = htcut_bench_cockroach(t_min, t_max, roach_solver.get(), &csv);
      if (csv) write_output(output, CString(csv).get());
      check(s);
    } else if (ver->parsed()) {
      vopts.seed = seed_given ? seed : env_seed(vopts.seed);
      char* table = nullptr;
      char* failing = nullptr;
      const htcut_status s =
          htcut_verify(suite.c_str(), &vopts, ver_solver.get(), &table, &failing);
      CString table_owner(table);
      CString failing_owner(failing);
      if (table) std::cout << table;
      if (s == HTCUT_ERR_VERIFICATION && failing && *failing) {
        write_output(dump, failing);
        std::cerr << "htcut: smallest failing instance written to '" << dump << "'\n";
      }
      check(s);
    } else {
      for (auto* sub : random_benches) {
        if (!sub->parsed()) continue;
        const std::string fam = sub->get_name();
        rand_gen.family = fam;
        if (ps.empty()) {
          ps = fam == "er" ? std::vector<double>{0.2, 0.4, 0.6}
                           : fam == "sbm" ? std::vector<double>{0.3} : std::vector<double>{0.01};
        }
        if (sub->count("--n") == 0 && fam == "er") rand_gen.spec.n = 100;
        if (sub->count("--n1") == 0) rand_gen.spec.n1 = fam == "sbm" ? 50 : 30;
        if (sub->count("--n2") == 0) rand_gen.spec.n2 = fam == "sbm" ? 50 : 30;
        if (sub->count("--k") == 0 && fam == "hysbm") rand_gen.spec.k = 4;
        if (sub->count("--q") == 0) rand_gen.spec.q = fam == "sbm" ? 0.05 : 1e-4;
        htcut_bench_spec b;
        htcut_bench_spec_default(&b);
        b.base = *rand_gen.get();
        b.ps = ps.data();
        b.num_ps = ps.size();
        b.instances = instances;
        b.seed = seed_given ? seed : env_seed(1);
        b.jobs = jobs;
        char* records = nullptr;
        char* hist = nullptr;
        char* summ = nullptr;
        check(htcut_bench_random(&b, rand_solver.get(), &records, &hist, &summ));
        CString r(records), hh(hist), ss(summ);
        write_output(output, records);
        if (histogram.empty() && !output.empty() && output != "-") {
          const auto dot = output.rfind(".csv");
          histogram = (dot == std::string::npos ? output : output.substr(0, dot)) + ".hist.csv";
        }
        if (!histogram.empty()) write_output(histogram, hist);
        if (summary.empty()) {
          std::cerr << summ;
        } else {
          write_output(summary, summ);
        }
      }
    }
  } catch (const Exit& e) {
    return e.code;
  }
  return 0;
}
