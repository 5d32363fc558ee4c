// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "provbench/canonical.hpp"
#include "provbench/compare.hpp"
#include "provbench/datalog.hpp"
#include "provbench/error.hpp"
#include "provbench/ingest.hpp"
#include "provbench/matcher.hpp"
#include "provbench/pipeline/emit.hpp"
#include "provbench/pipeline/profile.hpp"
#include "provbench/pipeline/recorder.hpp"
#include "provbench/pipeline/regression.hpp"
#include "provbench/pipeline/run.hpp"
#include "provbench/pipeline/timing.hpp"

namespace fs = std::filesystem;
namespace pb = provbench;
namespace pl = provbench::pipeline;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitChanged = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunFlags {
  std::string profile = "synthetic";
  std::string config;
  std::string spec = "all";
  std::optional<std::size_t> trials;
  std::string result_type = "rb";
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::string time_log = "provbench-time.log";
  std::string source;
  std::optional<bool> filter;
  std::uint64_t budget = pb::kDefaultExpansionBudget;
  unsigned jobs = 1;
  bool verbose = false;
};

void add_run_flags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--profile", f.profile, "Recorder profile name")
      ->capture_default_str();
  cmd->add_option("--config", f.config, "INI file with recorder profiles")
      ->check(CLI::ExistingFile);
  cmd->add_option("--spec", f.spec, "Benchmark name, or 'all'")
      ->capture_default_str();
  cmd->add_option("--trials", f.trials, "Trials per side (>= 2)");
  cmd->add_option("--result-type", f.result_type,
                  "rb: benchmark only, rg: plus generalized graphs, rh: plus HTML")
      ->check(CLI::IsMember({"rb", "rg", "rh"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Seed for synthetic recorders");
  cmd->add_option("--time-log", f.time_log, "Timing log, appended to")
      ->capture_default_str();
  cmd->add_option("--source", f.source,
                  "Fixture root (directory recorder) or template dir (synthetic)");
  cmd->add_option("--filter-graphs", f.filter,
                  "Drop unparsable or empty trials (true/false)");
  cmd->add_option("--budget", f.budget, "Matcher expansion budget per solve")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("-j,--jobs", f.jobs, "Benchmarks run in parallel")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("-v,--verbose", f.verbose, "Solver and stage diagnostics");
}

pl::RecorderProfile resolve_profile(const RunFlags& f) {
  auto profiles = pl::builtin_profiles();
  if (!f.config.empty()) {
    for (auto& [name, p] : pl::load_profiles(f.config)) profiles[name] = p;
  }
  auto it = profiles.find(f.profile);
  if (it == profiles.end()) {
    std::string known;
    for (const auto& [name, _] : profiles) known += " " + name;
    throw UsageError("unknown profile '" + f.profile + "'; known:" + known);
  }
  pl::RecorderProfile p = it->second;
  if (f.trials) p.trials = *f.trials;
  if (f.seed) p.seed = *f.seed;
  if (!f.source.empty()) p.source = f.source;
  if (f.filter) p.filter_graphs = *f.filter;
  try {
    pl::validate(p);
  } catch (const pb::Error& e) {
    throw UsageError(e.what());
  }
  return p;
}

std::vector<std::string> resolve_specs(const pl::Recorder& recorder,
                                       const std::string& spec) {
  if (spec != "all") return {spec};
  auto specs = recorder.available_specs();
  if (specs.empty()) throw UsageError("recorder offers no benchmarks");
  return specs;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw pb::Error(pb::ErrorCode::kIoError, "cannot write " + path.string());
}

void write_outputs(const fs::path& out_dir, const std::string& result_type,
                   const pl::BenchmarkResult& r) {
  const fs::path dir = out_dir / r.spec;
  fs::create_directories(dir);
  if (r.benchmark) {
    write_file(dir / "benchmark.dl", pb::emit_benchmark_datalog(*r.benchmark, "g"));
  }
  write_file(dir / "benchmark.dot", pl::emit_dot(r));
  if (result_type != "rb") {
    if (r.foreground) write_file(dir / "fg.dl", pb::canonical_datalog(r.foreground->graph));
    if (r.background) write_file(dir / "bg.dl", pb::canonical_datalog(r.background->graph));
  }
}

std::vector<pl::BenchmarkResult> run_all(const RunFlags& f) {
  const pl::RecorderProfile profile = resolve_profile(f);
  const pl::Recorder recorder = pl::make_recorder(profile);
  const auto specs = resolve_specs(recorder, f.spec);

  pl::RunOptions options;
  options.generalize.match.budget = f.budget;
  options.subtract.match.budget = f.budget;
  // Interleaved traces from parallel jobs are unreadable.
  if (f.verbose && f.jobs == 1) options.verbose = &std::cerr;

  std::vector<pl::BenchmarkResult> results(specs.size());
  std::atomic<std::size_t> next{0};
  std::mutex io;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < specs.size();) {
      results[i] = pl::run_benchmark(recorder, pl::spec_for(specs[i]), options);
      const auto& r = results[i];
      try {
        pl::append_timing(f.time_log, r);
      } catch (const pb::Error& e) {
        std::lock_guard<std::mutex> lock(io);
        std::cerr << "warning: " << e.what() << '\n';
      }
      std::lock_guard<std::mutex> lock(io);
      std::cout << r.spec << ": " << pl::to_string(r.status.kind);
      if (r.status.stage) {
        std::cout << " (" << pl::to_string(*r.status.stage) << ": "
                  << r.status.reason << ")";
      } else if (r.benchmark) {
        std::cout << ", " << r.benchmark->graph.node_count() << " nodes ("
                  << r.benchmark->dummy_nodes.size() << " dummy), "
                  << r.benchmark->graph.edge_count() << " edges";
      }
      std::cout << '\n';
    }
  };
  const unsigned n = std::min<unsigned>(f.jobs, static_cast<unsigned>(specs.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  fs::create_directories(f.out);
  for (const auto& r : results) write_outputs(f.out, f.result_type, r);
  if (f.result_type == "rh") write_file(fs::path(f.out) / "index.html", pl::emit_html(results));
  return results;
}

bool any_error(const std::vector<pl::BenchmarkResult>& results) {
  return std::any_of(results.begin(), results.end(), [](const auto& r) {
    return r.status.kind == pl::StatusKind::kError;
  });
}

int cmd_run(const RunFlags& f) {
  return any_error(run_all(f)) ? kExitError : kExitOk;
}

int cmd_regress(const RunFlags& f, const std::string& baseline, bool update) {
  const auto results = run_all(f);
  pb::MatchOptions match;
  match.budget = f.budget;
  bool changed = false;
  for (const auto& r : results) {
    if (!r.benchmark) continue;
    const auto verdict = pl::check_regression(baseline, r.spec, *r.benchmark, match);
    std::cout << r.spec << ": " << verdict.summary << '\n';
    if (verdict.kind == pl::VerdictKind::kChanged) changed = true;
    if (update && verdict.kind != pl::VerdictKind::kUnchanged) {
      pl::write_baseline(baseline, r.spec, *r.benchmark);
    }
  }
  if (any_error(results)) return kExitError;
  return changed && !update ? kExitChanged : kExitOk;
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw pb::Error(pb::ErrorCode::kIoError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

pb::PropertyGraph load_graph(const fs::path& path) {
  pb::FormatProfile profile;
  profile.format = pb::format_from_path(path);
  return pb::ingest_document(read_text(path), profile);
}

int cmd_solve(const std::string& pattern, const std::string& host,
              const std::string& mode, std::uint64_t budget, bool verbose) {
  pb::MatchProblem problem;
  problem.pattern = load_graph(pattern);
  problem.host = load_graph(host);
  problem.mode = mode == "exact" ? pb::MatchMode::kExactBijective
                                 : pb::MatchMode::kSubgraph;
  pb::MatchOptions options;
  options.budget = budget;
  if (verbose) options.trace = &std::cerr;
  pb::SolveStats stats;
  const auto m = pb::solve(problem, options, &stats);
  if (!m) {
    std::cout << "no matching (" << stats.expansions << " expansions)\n";
    return kExitChanged;
  }
  std::cout << "cost " << m->cost << '\n';
  for (const auto& [p, h] : m->node_map) std::cout << "node " << p << " " << h << '\n';
  for (const auto& [p, h] : m->edge_map) std::cout << "edge " << p << " " << h << '\n';
  return kExitOk;
}

int cmd_list(const RunFlags& f) {
  const pl::Recorder recorder = pl::make_recorder(resolve_profile(f));
  for (const auto& name : recorder.available_specs()) std::cout << name << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Provenance recorder benchmarking"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "provbench 0.1.0");

  RunFlags run_flags;
  auto* run = app.add_subcommand("run", "Run benchmarks and write results");
  add_run_flags(run, run_flags);

  RunFlags regress_flags;
  std::string baseline;
  bool update = false;
  auto* regress = app.add_subcommand("regress", "Compare results with stored baselines");
  add_run_flags(regress, regress_flags);
  regress->add_option("--baseline", baseline, "Baseline directory")->required();
  regress->add_flag("--update", update, "Store new and changed results as baselines");

  std::string pattern, host, mode = "subgraph";
  std::uint64_t budget = pb::kDefaultExpansionBudget;
  bool solve_verbose = false;
  auto* solve = app.add_subcommand("solve", "Match one graph file into another");
  solve->add_option("--pattern", pattern, "Pattern graph file")->required()->check(CLI::ExistingFile);
  solve->add_option("--host", host, "Host graph file")->required()->check(CLI::ExistingFile);
  solve->add_option("--mode", mode, "subgraph or exact")
      ->check(CLI::IsMember({"subgraph", "exact"}))
      ->capture_default_str();
  solve->add_option("--budget", budget, "Expansion budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_flag("-v,--verbose", solve_verbose, "Trace improving solutions");

  RunFlags list_flags;
  auto* list = app.add_subcommand("list", "Print the benchmarks a profile offers");
  add_run_flags(list, list_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run) return cmd_run(run_flags);
    if (*regress) return cmd_regress(regress_flags, baseline, update);
    if (*solve) return cmd_solve(pattern, host, mode, budget, solve_verbose);
    if (*list) return cmd_list(list_flags);
  } catch (const UsageError& e) {
    std::cerr << "provbench: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "provbench: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
