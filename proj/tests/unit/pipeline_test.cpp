// Copyright 2026 The provbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "provbench/datalog.hpp"
#include "provbench/error.hpp"
#include "provbench/pipeline/emit.hpp"
#include "provbench/pipeline/profile.hpp"
#include "provbench/pipeline/recorder.hpp"
#include "provbench/pipeline/regression.hpp"
#include "provbench/pipeline/run.hpp"
#include "provbench/pipeline/templates.hpp"
#include "provbench/pipeline/timing.hpp"

namespace provbench::pipeline {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = fs::temp_directory_path() /
            ("provbench_" + std::string(info->test_suite_name()) + "_" + info->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

std::string read(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

const SyntheticTemplate& builtin(const std::string& name) {
  return builtin_templates().at(name);
}

Recorder synthetic(std::size_t trials = 2) {
  RecorderProfile p;
  p.trials = trials;
  return Recorder(p, builtin_templates());
}

// ---- profiles

TEST(Profiles, Builtins) {
  auto profiles = builtin_profiles();
  ASSERT_EQ(profiles.size(), 3u);
  EXPECT_EQ(profiles.at("synthetic").trials, kDefaultTrials);
  EXPECT_EQ(profiles.at("synthetic-dot").format.format, Format::kDot);
  EXPECT_EQ(profiles.at("synthetic-json").format.format, Format::kGenericJson);
}

TEST(Profiles, ParseIni) {
  auto profiles = parse_profiles(
      "[spade]\n"
      "stage1tool = directory:fixtures/spade\n"
      "stage2handler = dot\n"
      "filtergraphs = false\n"
      "[camflow]\n"
      "stage1tool = directory:/abs/cf\n"
      "stage2handler = prov-json\n"
      "filtergraphs = true\n"
      "trials = 11\n"
      "strict = true\n"
      "[syn]\n"
      "seed = 9\n",
      "/base");
  ASSERT_EQ(profiles.size(), 3u);
  const auto& spade = profiles.at("spade");
  EXPECT_EQ(spade.kind, RecorderKind::kDirectory);
  EXPECT_EQ(spade.source, fs::path("/base/fixtures/spade"));
  EXPECT_EQ(spade.format.format, Format::kDot);
  EXPECT_FALSE(spade.filter_graphs);
  EXPECT_EQ(spade.trials, 2u);
  const auto& cf = profiles.at("camflow");
  EXPECT_EQ(cf.source, fs::path("/abs/cf"));
  EXPECT_TRUE(cf.filter_graphs);
  EXPECT_TRUE(cf.format.strict);
  EXPECT_EQ(cf.trials, 11u);
  EXPECT_EQ(profiles.at("syn").kind, RecorderKind::kSynthetic);
  EXPECT_EQ(profiles.at("syn").seed, 9u);
}

TEST(Profiles, IniErrors) {
  EXPECT_EQ(code_of([] { parse_profiles("[a]\ntrials = 1\n"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_profiles("[a]\nstage1tool = opus\n"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_profiles("[a]\nstage2handler = xml\n"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_profiles("[a]\nfiltergraphs = maybe\n"); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_profiles("[a\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { load_profiles("/nonexistent/x.ini"); }), ErrorCode::kIoError);
}

// ---- templates

TEST(Templates, LibraryIsValid) {
  const auto& lib = builtin_templates();
  EXPECT_GE(lib.size(), 12u);
  for (const auto& [name, t] : lib) {
    EXPECT_EQ(name, t.name);
    EXPECT_NO_THROW(validate(t));
    EXPECT_FALSE(t.transient_keys.empty());
  }
}

TEST(Templates, CreatGroundTruth) {
  const auto& t = builtin("creat");
  EXPECT_EQ(anchors(t), (std::set<ElementId>{"proc"}));
  BenchmarkGraph expected = expected_target(t);
  EXPECT_EQ(expected.graph.node_count(), 2u);
  EXPECT_EQ(expected.graph.edge_count(), 1u);
  EXPECT_EQ(expected.dummy_nodes, (std::set<ElementId>{"proc"}));
  EXPECT_TRUE(expected.graph.properties_of("proc").empty());
  for (const auto& [id, n] : expected.graph.nodes()) {
    for (const auto& key : t.transient_keys) EXPECT_FALSE(n.properties.count(key));
  }
}

TEST(Templates, ValidationErrors) {
  SyntheticTemplate t = builtin("creat");
  t.delta.edges.push_back({"bad", "file", "nowhere", "R", {}});
  EXPECT_EQ(code_of([&] { validate(t); }), ErrorCode::kInvalidArgument);
  t = builtin("creat");
  t.delta.nodes.push_back({"proc", "Process", {}});
  EXPECT_EQ(code_of([&] { validate(t); }), ErrorCode::kInvalidArgument);
}

TEST(Templates, RenderTrialIsDeterministicAndVaries) {
  const auto& t = builtin("creat");
  PropertyGraph a = render_trial(t, Role::kForeground, 1, 1);
  EXPECT_EQ(a, render_trial(t, Role::kForeground, 1, 1));
  PropertyGraph b = render_trial(t, Role::kForeground, 1, 2);
  EXPECT_NE(emit_datalog(a), emit_datalog(b));
  auto m = check_similar(a, b);
  ASSERT_TRUE(m);
  EXPECT_GT(m->cost, 0u);
  // Only transient keys differ.
  for (const auto& [pa, pb] : m->node_map) {
    for (const auto& [k, v] : a.properties_of(pa)) {
      if (!t.transient_keys.count(k)) EXPECT_EQ(b.property(pb, k), v);
    }
  }
  EXPECT_EQ(render_trial(t, Role::kBackground, 1, 1).node_count(),
            t.background.nodes.size());
}

TEST(Templates, FailureSimulation) {
  SyntheticTemplate t = builtin("creat");
  t.empty_every = 2;
  t.spurious_every = 3;
  EXPECT_TRUE(render_trial(t, Role::kForeground, 1, 2).empty());
  EXPECT_EQ(render_trial(t, Role::kForeground, 1, 3).node_count(),
            t.background.nodes.size() + t.delta.nodes.size() + 1);
}

TEST(Templates, RepeatDelta) {
  const auto& t = builtin("scale1");
  SyntheticTemplate t4 = repeat_delta(t, 4, "x4");
  EXPECT_EQ(t4.name, "x4");
  EXPECT_EQ(t4.delta.nodes.size(), 4 * t.delta.nodes.size());
  EXPECT_EQ(t4.delta.edges.size(), 4 * t.delta.edges.size());
  EXPECT_NO_THROW(validate(t4));
}

TEST(Templates, JsonRoundTripAndLoad) {
  TempDir dir;
  for (const auto& name : {"creat", "kill"}) {
    const auto& t = builtin(name);
    SyntheticTemplate back = parse_template_json(emit_template_json(t));
    EXPECT_EQ(emit_template_json(back), emit_template_json(t));
    write(dir.path() / (std::string(name) + ".json"), emit_template_json(t));
  }
  auto loaded = load_templates(dir.path());
  EXPECT_EQ(loaded.size(), 2u);
  write(dir.path() / "misnamed.json", emit_template_json(builtin("open")));
  EXPECT_EQ(code_of([&] { load_templates(dir.path()); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { parse_template_json("{"); }), ErrorCode::kSyntaxError);
}

// ---- recorder

TEST(Recorder, SyntheticProducesTrials) {
  Recorder r = synthetic(3);
  auto docs = r.record_trials(spec_for("creat"), Role::kForeground);
  ASSERT_EQ(docs.size(), 3u);
  for (const auto& d : docs) {
    EXPECT_EQ(d.format, Format::kDatalog);
    EXPECT_EQ(parse_datalog(d.text).node_count(), 6u);
  }
  EXPECT_NE(docs[0].text, docs[1].text);
  EXPECT_EQ(r.available_specs().size(), builtin_templates().size());
}

TEST(Recorder, SyntheticFilterRedrawsFailedRuns) {
  SyntheticTemplate t = builtin("creat");
  t.empty_every = 2;
  RecorderProfile p;
  p.trials = 3;
  Recorder unfiltered(p, {{"creat", t}});
  auto docs = unfiltered.record_trials(spec_for("creat"), Role::kForeground);
  EXPECT_TRUE(parse_datalog(docs[1].text).empty());

  p.filter_graphs = true;
  Recorder filtered(p, {{"creat", t}});
  docs = filtered.record_trials(spec_for("creat"), Role::kForeground);
  ASSERT_EQ(docs.size(), 3u);
  for (const auto& d : docs) EXPECT_FALSE(parse_datalog(d.text).empty());

  t.empty_every = 1;
  Recorder hopeless(p, {{"creat", t}});
  EXPECT_EQ(code_of([&] { hopeless.record_trials(spec_for("creat"), Role::kBackground); }),
            ErrorCode::kRecorderFailure);
}

TEST(Recorder, Directory) {
  TempDir dir;
  RecorderProfile p;
  p.kind = RecorderKind::kDirectory;
  p.source = dir.path();
  write(dir.path() / "open" / "open.fg.1.dl", "ng(a,\"A\").");
  write(dir.path() / "open" / "open.fg.2.dl", "ng(b,\"A\").");
  write(dir.path() / "open.bg.1.dl", "ng(a,\"A\").");
  Recorder r(p);
  auto docs = r.record_trials(spec_for("open"), Role::kForeground);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].text, "ng(a,\"A\").");
  EXPECT_EQ(docs[1].origin, "open.fg.2.dl");
  EXPECT_EQ(code_of([&] { r.record_trials(spec_for("open"), Role::kBackground); }),
            ErrorCode::kMissingTrialFiles);
  EXPECT_EQ(code_of([&] { r.record_trials(spec_for("close"), Role::kBackground); }),
            ErrorCode::kMissingTrialFiles);
  EXPECT_EQ(r.available_specs(), std::vector<std::string>{"open"});

  // filtergraphs skips junk and reads further files.
  write(dir.path() / "open.bg.2.dl", "garbage");
  write(dir.path() / "open.bg.3.dl", "ng(c,\"A\").");
  p.filter_graphs = true;
  Recorder filtered(p);
  docs = filtered.record_trials(spec_for("open"), Role::kBackground);
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[1].origin, "open.bg.3.dl");
  write(dir.path() / "open.bg.3.dl", "");
  EXPECT_EQ(code_of([&] { filtered.record_trials(spec_for("open"), Role::kBackground); }),
            ErrorCode::kRecorderFailure);
}

TEST(Recorder, StagingKeepsDocuments) {
  TempDir dir;
  RecorderProfile p;
  p.staging = dir.path();
  Recorder r(p, builtin_templates());
  r.record_trials(spec_for("open"), Role::kBackground);
  EXPECT_TRUE(fs::exists(dir.path() / "open" / "open.bg.1.dl"));
  EXPECT_TRUE(fs::exists(dir.path() / "open" / "open.bg.2.dl"));
}

TEST(Recorder, SpecValidation) {
  EXPECT_EQ(code_of([] { validate(BenchmarkSpec{"x", "a", "a", ""}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { validate(BenchmarkSpec{"", "a", "b", ""}); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(spec_for("creat").foreground, "creat.fg");
}

// ---- run

TEST(RunBenchmark, Creat) {
  BenchmarkResult r = run_benchmark(synthetic(), spec_for("creat"));
  ASSERT_EQ(r.status.kind, StatusKind::kOk) << r.status.reason;
  ASSERT_TRUE(r.benchmark);
  EXPECT_EQ(r.benchmark->graph.node_count(), 2u);
  EXPECT_EQ(r.benchmark->graph.edge_count(), 1u);
  ASSERT_EQ(r.benchmark->dummy_nodes.size(), 1u);
  EXPECT_EQ(r.benchmark->graph.label_of(*r.benchmark->dummy_nodes.begin()), "Process");
  EXPECT_EQ(r.recorder, "synthetic");
  EXPECT_GE(r.durations.recording, 0);
  EXPECT_GE(r.durations.comparison, 0);
}

TEST(RunBenchmark, EmptyWhenForegroundEqualsBackground) {
  BenchmarkResult r = run_benchmark(synthetic(), spec_for("close"));
  EXPECT_EQ(r.status.kind, StatusKind::kEmpty);
  ASSERT_TRUE(r.benchmark);
  EXPECT_TRUE(r.benchmark->graph.empty());
}

TEST(RunBenchmark, StageErrorsAreReported) {
  BenchmarkResult r = run_benchmark(synthetic(), spec_for("nosuch"));
  EXPECT_EQ(r.status.kind, StatusKind::kError);
  EXPECT_EQ(r.status.stage, Stage::kRecording);
  EXPECT_FALSE(r.benchmark);

  TempDir dir;
  RecorderProfile p;
  p.kind = RecorderKind::kDirectory;
  p.source = dir.path();
  write(dir.path() / "x.fg.1.dl", "ng(a,\"A\").");
  write(dir.path() / "x.fg.2.dl", "this is not datalog");
  write(dir.path() / "x.bg.1.dl", "ng(a,\"A\").");
  write(dir.path() / "x.bg.2.dl", "ng(a,\"A\").");
  r = run_benchmark(Recorder(p), spec_for("x"));
  EXPECT_EQ(r.status.stage, Stage::kTransformation);
  EXPECT_NE(r.status.reason.find("x.fg.2.dl"), std::string::npos);
  EXPECT_FALSE(r.foreground);

  write(dir.path() / "x.fg.2.dl", "ng(a,\"B\").");
  r = run_benchmark(Recorder(p), spec_for("x"));
  EXPECT_EQ(r.status.stage, Stage::kGeneralization);

  write(dir.path() / "x.fg.2.dl", "ng(a,\"A\").");
  write(dir.path() / "x.bg.1.dl", "ng(a,\"A\").ng(b,\"A\").");
  write(dir.path() / "x.bg.2.dl", "ng(a,\"A\").ng(b,\"A\").");
  r = run_benchmark(Recorder(p), spec_for("x"));
  EXPECT_EQ(r.status.stage, Stage::kComparison);
  EXPECT_TRUE(r.background);
}

TEST(RunBenchmark, DeterministicAcrossRuns) {
  for (const auto& name : {"rename", "scale2", "pipe"}) {
    BenchmarkResult a = run_benchmark(synthetic(), spec_for(name));
    BenchmarkResult b = run_benchmark(synthetic(), spec_for(name));
    ASSERT_TRUE(a.benchmark && b.benchmark);
    EXPECT_EQ(emit_benchmark_datalog(*a.benchmark, "g"),
              emit_benchmark_datalog(*b.benchmark, "g"));
    EXPECT_EQ(emit_dot(a), emit_dot(b));
  }
}

TEST(RunBenchmark, FormatsAgree) {
  auto profiles = builtin_profiles();
  std::string reference;
  for (const auto& name : {"synthetic", "synthetic-dot", "synthetic-json"}) {
    BenchmarkResult r = run_benchmark(make_recorder(profiles.at(name)), spec_for("link"));
    ASSERT_EQ(r.status.kind, StatusKind::kOk) << name << ": " << r.status.reason;
    const std::string dl =
        emit_benchmark_datalog(canonicalize_benchmark(*r.benchmark), "g");
    if (reference.empty()) reference = dl;
    EXPECT_EQ(dl, reference) << name;
  }
}

// ---- emitters

TEST(EmitDot, EmptyResult) {
  BenchmarkResult r = run_benchmark(synthetic(), spec_for("close"));
  EXPECT_EQ(emit_dot(r), "digraph g { }\n// empty\n");
  EXPECT_TRUE(parse_dot(emit_dot(r)).empty());
}

TEST(EmitDot, CreatStatementsAndStyles) {
  BenchmarkResult r = run_benchmark(synthetic(), spec_for("creat"));
  const std::string dot = emit_dot(r);
  std::size_t statements = 0;
  std::istringstream lines(dot);
  for (std::string line; std::getline(lines, line);) {
    if (line.find(" [label=") != std::string::npos) ++statements;
  }
  EXPECT_EQ(statements, 3u) << dot;
  EXPECT_NE(dot.find("fillcolor=\"#d9d9d9\", dummy=\"true\""), std::string::npos);
  EXPECT_NE(dot.find("shape=ellipse, fillcolor=\"#fff3b0\""), std::string::npos);
}

TEST(EmitDot, RoundTripKeepsCountsAndLabels) {
  for (const auto& [name, t] : builtin_templates()) {
    BenchmarkResult r = run_benchmark(synthetic(), spec_for(name));
    ASSERT_TRUE(r.benchmark) << name;
    PropertyGraph back = parse_dot(emit_dot(r));
    const PropertyGraph& g = r.benchmark->graph;
    EXPECT_EQ(back.node_count(), g.node_count()) << name;
    EXPECT_EQ(back.edge_count(), g.edge_count()) << name;
    std::multiset<std::string> want, got;
    for (const auto& [id, n] : g.nodes()) want.insert(n.label);
    for (const auto& [id, e] : g.edges()) want.insert(e.label);
    for (const auto& [id, n] : back.nodes()) got.insert(n.label);
    for (const auto& [id, e] : back.edges()) got.insert(e.label);
    EXPECT_EQ(got, want) << name;
  }
}

TEST(EmitDot, StyleTable) {
  StyleTable t = StyleTable::standard();
  EXPECT_EQ(t.style_for("Process", false).shape, "box");
  EXPECT_EQ(t.style_for("activity", false).shape, "box");
  EXPECT_EQ(t.style_for("Artifact", false).shape, "ellipse");
  EXPECT_EQ(t.style_for("Process", true).fillcolor, "#d9d9d9");
}

TEST(EmitHtml, Pages) {
  EXPECT_NE(emit_html({}).find("0 benchmarks"), std::string::npos);

  BenchmarkResult creat = run_benchmark(synthetic(), spec_for("creat"));
  const std::string one = emit_html({creat});
  EXPECT_NE(one.find("<h2>creat</h2>"), std::string::npos);
  std::size_t blocks = 0;
  for (auto pos = one.find("<pre>"); pos != std::string::npos;
       pos = one.find("<pre>", pos + 1)) {
    ++blocks;
  }
  EXPECT_EQ(blocks, 3u);
  EXPECT_EQ(one.find("->"), std::string::npos) << "DOT must be escaped";

  BenchmarkResult open = run_benchmark(synthetic(), spec_for("open"));
  const std::string two = emit_html({open, creat});
  EXPECT_NE(two.find("2 benchmarks"), std::string::npos);
  EXPECT_LT(two.find("<h2>creat</h2>"), two.find("<h2>open</h2>"));
  EXPECT_EQ(escape_html("<a&\">"), "&lt;a&amp;&quot;&gt;");
}

// ---- timing

TEST(Timing, LineFormat) {
  BenchmarkResult r;
  r.recorder = "spade";
  r.spec = "creat";
  r.durations = {0.5, 1.0 / 3, 12.0, 0.0004};
  EXPECT_EQ(format_timing_line(r), "spade,creat,0.500,0.333,12.000,0.000");
}

TEST(Timing, AppendsInOrder) {
  TempDir dir;
  const fs::path log = dir.path() / "time.log";
  BenchmarkResult a = run_benchmark(synthetic(), spec_for("creat"));
  BenchmarkResult b = run_benchmark(synthetic(), spec_for("open"));
  append_timing(log, a);
  append_timing(log, b);
  const std::string text = read(log);
  const std::regex line(R"(synthetic,(creat|open)(,\d+\.\d{3}){4}\n)");
  ASSERT_TRUE(std::regex_search(text, line));
  EXPECT_EQ(text.find("synthetic,creat"), 0u);
  EXPECT_NE(text.find("\nsynthetic,open"), std::string::npos);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
  EXPECT_EQ(code_of([&] { append_timing(dir.path() / "no" / "dir" / "t.log", a); }),
            ErrorCode::kIoError);
}

// ---- regression

TEST(Regression, Verdicts) {
  TempDir dir;
  BenchmarkResult r = run_benchmark(synthetic(), spec_for("rename"));
  ASSERT_TRUE(r.benchmark);
  Verdict v = check_regression(dir.path(), "rename", *r.benchmark);
  EXPECT_EQ(v.kind, VerdictKind::kNew);

  write_baseline(dir.path(), "rename", *r.benchmark);
  v = check_regression(dir.path(), "rename", *r.benchmark);
  EXPECT_EQ(v.kind, VerdictKind::kUnchanged) << v.summary;

  const fs::path path = baseline_path(dir.path(), "rename");
  std::string text = read(path);
  const auto pos = text.find("\"/tmp/");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 6, "\"/var/");
  write(path, text);
  v = check_regression(dir.path(), "rename", *r.benchmark);
  EXPECT_EQ(v.kind, VerdictKind::kChanged);
  EXPECT_TRUE(v.same_shape);
  EXPECT_EQ(v.property_delta, 1);
  EXPECT_EQ(v.node_delta, 0);

  write(path, "ng(a,\"X\").");
  v = check_regression(dir.path(), "rename", *r.benchmark);
  EXPECT_EQ(v.kind, VerdictKind::kChanged);
  EXPECT_FALSE(v.same_shape);
  EXPECT_EQ(v.node_delta,
            static_cast<std::int64_t>(r.benchmark->graph.node_count()) - 1);

  write(path, "ng(a,");
  EXPECT_EQ(code_of([&] { check_regression(dir.path(), "rename", *r.benchmark); }),
            ErrorCode::kCorruptBaseline);
}

TEST(Regression, DummyFlagMatters) {
  BenchmarkGraph a;
  a.graph.add_node("n1", "P");
  a.graph.add_node("n2", "P");
  a.graph.add_edge("e1", "n1", "n2", "R");
  a.dummy_nodes = {"n1"};
  a.empty = false;
  BenchmarkGraph b = a;
  b.dummy_nodes = {"n2"};
  EXPECT_EQ(compare_to_baseline(a, a).kind, VerdictKind::kUnchanged);
  EXPECT_EQ(compare_to_baseline(a, b).kind, VerdictKind::kChanged);
}

}  // namespace
}  // namespace provbench::pipeline
