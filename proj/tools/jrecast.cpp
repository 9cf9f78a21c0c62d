// Copyright 2026 The jrecast Authors
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

// jrecast: semantics-preserving transformation of Defects4J-style bug
// datasets and evaluation of repair prompts against a text-completion
// endpoint. Subcommands mirror the pipeline stages:
//
//   transform  rewrite each bug's function with the T1-T5 operators
//   verify     re-run project build/test pairs, or a differential probe
//   prompt     render the four repair-prompt templates
//   evaluate   sample patches from an endpoint and judge plausibility
//   report     decline / improvement tables from an evaluation ledger
//
// Exit status: 0 success, 1 any bug-case failure, 2 configuration error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "jrecast/dataset/builder.hpp"
#include "jrecast/dataset/manifest.hpp"
#include "jrecast/eval/report.hpp"
#include "jrecast/eval/runner.hpp"
#include "jrecast/prompt/templates.hpp"
#include "jrecast/transform/endpoint_names.hpp"
#include "jrecast/transform/pipeline.hpp"
#include "jrecast/verify/differential.hpp"
#include "jrecast/verify/project.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace jrecast;

namespace {

constexpr int kOk = 0;
constexpr int kBugFailure = 1;
constexpr int kConfigError = 2;

std::string env_or(const char* name, const std::string& fallback) {
  const char* v = std::getenv(name);
  return v ? v : fallback;
}

void write_run_json(const fs::path& dir, const std::string& subcommand,
                    const json& config) {
  json j;
  j["subcommand"] = subcommand;
  j["config"] = config;
  fs::create_directories(dir);
  std::ofstream out(dir / "run.json");
  out << j.dump(2) << "\n";
}

std::vector<transform::Op> parse_ops(const std::string& spec) {
  if (spec == "all") return {transform::kAllOps.begin(), transform::kAllOps.end()};
  if (spec == "none" || spec.empty()) return {};
  std::vector<transform::Op> ops;
  size_t pos = 0;
  while (pos <= spec.size()) {
    size_t comma = spec.find(',', pos);
    std::string tok = spec.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    bool known = false;
    for (transform::Op op : transform::kAllOps) {
      if (tok == transform::op_name(op)) {
        ops.push_back(op);
        known = true;
      }
    }
    if (!known) throw CLI::ValidationError("--ops", "unknown operator " + tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return ops;
}

// ---- transform -------------------------------------------------------------

struct TransformArgs {
  std::string manifest;
  std::string out;
  uint64_t seed = 0;
  std::string ops = "all";
  int max_dead_blocks = 3;
  int parallelism = 1;
  std::string provider = "deterministic";
  std::string endpoint;
  std::string endpoint_model = "name-provider";
};

int run_transform(const TransformArgs& a) {
  dataset::Manifest manifest = dataset::load_manifest(a.manifest);
  transform::TransformConfig cfg;
  cfg.seed = a.seed;
  cfg.enabled_ops = parse_ops(a.ops);
  cfg.max_dead_blocks = a.max_dead_blocks;

  std::unique_ptr<transform::NameProvider> provider;
  if (a.provider == "endpoint") {
    std::string url = !a.endpoint.empty() ? a.endpoint
                                          : env_or("JRECAST_ENDPOINT", "");
    if (url.empty())
      throw CLI::ValidationError("--name-provider",
                                 "endpoint provider needs --endpoint or "
                                 "JRECAST_ENDPOINT");
    provider = std::make_unique<transform::EndpointNameProvider>(
        url, a.endpoint_model, a.seed);
  }

  fs::path out_dir(a.out);
  json cfg_json = {{"manifest", a.manifest},
                   {"out", a.out},
                   {"seed", a.seed},
                   {"ops", a.ops},
                   {"max_dead_blocks", a.max_dead_blocks},
                   {"parallelism", a.parallelism},
                   {"name_provider", a.provider}};
  write_run_json(out_dir, "transform", cfg_json);

  dataset::BuildResult result = dataset::build_transformed_dataset(
      manifest, cfg, out_dir, a.parallelism, provider.get());

  dataset::export_provenance(result.records, out_dir / "provenance.jsonl");
  dataset::export_summary(result, manifest.bugs.size(), a.seed,
                          out_dir / "summary.json");
  dataset::export_diagnostics(result, out_dir / "diagnostics.jsonl");
  dataset::save_manifest(result.transformed, out_dir / "manifest.trans.json");

  std::cout << "transformed " << result.transformed.bugs.size() << "/"
            << manifest.bugs.size() << " bugs into " << a.out << "\n";
  for (const auto& [op, counts] : result.op_counts)
    std::cout << "  " << op << ": " << counts.first << " applied, "
              << counts.second << " skipped\n";
  for (const auto& f : result.failures)
    std::cerr << "FAIL " << f.bug_id << ": " << f.error << "\n";
  return result.failures.empty() ? kOk : kBugFailure;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string manifest;
  std::string out_tree;
  std::string report = "verify_report.json";
  int parallelism = 1;
  double timeout = 300;
  // differential mode
  bool differential = false;
  std::string original;
  std::string transformed;
  std::string probe;
};

int run_verify(const VerifyArgs& a) {
  if (a.differential) {
    std::ifstream in(a.probe);
    if (!in) throw CLI::ValidationError("--probe", "cannot open " + a.probe);
    json pj;
    in >> pj;
    verify::ExecProbe probe;
    probe.entry_command = pj.at("entry_command").get<std::string>();
    probe.timeout_sec = pj.value("timeout_sec", 30.0);
    for (const auto& g : pj.at("grid")) {
      verify::ExecProbe::Input input;
      for (const auto& arg : g.value("args", json::array()))
        input.args.push_back(arg.get<std::string>());
      input.stdin_bytes = g.value("stdin", "");
      probe.grid.push_back(std::move(input));
    }
    auto rep = verify::differential_check(
        syntax::SourceUnit::from_file(a.original),
        syntax::SourceUnit::from_file(a.transformed), probe);
    for (size_t i = 0; i < rep.verdicts.size(); ++i)
      std::cout << "grid[" << i << "]: " << verify::verdict_name(rep.verdicts[i])
                << (rep.details[i].empty() ? "" : " (" + rep.details[i] + ")")
                << "\n";
    std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
    return rep.pass ? kOk : kBugFailure;
  }

  dataset::Manifest manifest = dataset::load_manifest(a.manifest);
  verify::VerifyOptions opt;
  opt.build_timeout_sec = a.timeout;
  opt.test_timeout_sec = a.timeout;
  verify::BatchVerifyReport report =
      verify::batch_verify(manifest, a.out_tree, a.parallelism, opt);

  json j;
  j["entries"] = json::array();
  for (const auto& e : report.entries) {
    j["entries"].push_back({{"bug_id", e.bug_id},
                            {"equivalent", e.equivalent},
                            {"error", e.error}});
    std::cout << (e.equivalent ? "ok   " : "DIFF ") << e.bug_id
              << (e.error.empty() ? "" : "  [" + e.error + "]") << "\n";
  }
  j["exclusion_list"] = report.exclusion_list;
  fs::path report_path(a.report);
  if (report_path.has_parent_path())
    fs::create_directories(report_path.parent_path());
  std::ofstream out(report_path);
  out << j.dump(2) << "\n";
  write_run_json(report_path.has_parent_path() ? report_path.parent_path()
                                               : fs::path("."),
                 "verify",
                 {{"manifest", a.manifest},
                  {"out_tree", a.out_tree},
                  {"parallelism", a.parallelism}});
  std::cout << report.exclusion_list.size() << " bug(s) for manual review\n";
  return report.exclusion_list.empty() ? kOk : kBugFailure;
}

// ---- prompt ----------------------------------------------------------------

struct PromptArgs {
  std::string manifest;
  std::string out;
  std::string kind = "all";
  int budget = 4096;
  int chars_per_token = 4;
};

int run_prompt(const PromptArgs& a) {
  dataset::Manifest manifest = dataset::load_manifest(a.manifest);
  prompt::PromptConfig cfg;
  cfg.token_budget = a.budget;
  cfg.chars_per_token = a.chars_per_token;

  std::vector<prompt::PromptKind> kinds;
  if (a.kind == "all") {
    kinds = {prompt::PromptKind::TwoShot, prompt::PromptKind::TwoShotFL,
             prompt::PromptKind::BugReport, prompt::PromptKind::TriggerTest};
  } else if (auto k = prompt::kind_from_slug(a.kind)) {
    kinds = {*k};
  } else {
    throw CLI::ValidationError("--kind", "unknown prompt kind " + a.kind);
  }

  fs::path out_dir(a.out);
  fs::create_directories(out_dir);
  write_run_json(out_dir, "prompt",
                 {{"manifest", a.manifest},
                  {"out", a.out},
                  {"kind", a.kind},
                  {"budget", a.budget}});

  std::map<std::string, std::vector<dataset::BugCase>> by_project;
  for (const auto& b : manifest.bugs) by_project[b.project].push_back(b);

  prompt::RepairExample toy = prompt::toy_example();
  json index;
  index["prompts"] = json::object();
  int failures = 0;
  for (const auto& bug : manifest.bugs) {
    json per_bug = json::object();
    std::optional<prompt::RepairExample> proj;
    std::string example_note;
    try {
      proj = prompt::select_shortest_example(by_project[bug.project], bug.bug_id);
    } catch (const prompt::NoExampleAvailable&) {
      example_note = "toy-example-only";  // recorded fallback
    }
    for (prompt::PromptKind kind : kinds) {
      try {
        prompt::PromptDocument doc;
        switch (kind) {
          case prompt::PromptKind::TwoShot:
            doc = prompt::build_two_shot(bug, toy, proj ? &*proj : nullptr, cfg);
            break;
          case prompt::PromptKind::TwoShotFL:
            doc = prompt::build_two_shot_fl(bug, toy, proj ? &*proj : nullptr,
                                            cfg);
            break;
          case prompt::PromptKind::BugReport:
            doc = prompt::build_bug_report(bug, cfg);
            break;
          case prompt::PromptKind::TriggerTest:
            doc = prompt::build_trigger_test(bug, cfg);
            break;
        }
        std::string name =
            bug.bug_id + "." + prompt::kind_slug(kind) + ".prompt.txt";
        std::ofstream out(out_dir / name, std::ios::binary);
        out << doc.text;
        per_bug[prompt::kind_slug(kind)] = {
            {"file", name}, {"token_estimate", doc.token_estimate}};
        if (!example_note.empty()) per_bug["note"] = example_note;
      } catch (const Error& e) {
        per_bug[prompt::kind_slug(kind)] = {{"error", e.what()}};
        std::cerr << "FAIL " << bug.bug_id << " " << prompt::kind_slug(kind)
                  << ": " << e.what() << "\n";
        failures++;
      }
    }
    index["prompts"][bug.bug_id] = per_bug;
  }
  std::ofstream out(out_dir / "index.json");
  out << index.dump(2) << "\n";
  std::cout << "prompts written to " << a.out << "\n";
  return failures == 0 ? kOk : kBugFailure;
}

// ---- evaluate ----------------------------------------------------------------

struct EvaluateArgs {
  std::string manifest;
  std::string prompts;
  std::string kind = "two_shot";
  std::string out;
  std::string model = "unknown-model";
  std::string dataset_label = "original";
  std::string endpoint;
  int samples = 200;
  int max_tokens = 2048;
  double temperature = 0.8;
  double top_p = 0.95;
  int window = 8;
  int parallelism = 1;
  double judge_timeout = 300;
};

int run_evaluate(const EvaluateArgs& a) {
  dataset::Manifest manifest = dataset::load_manifest(a.manifest);

  fs::path prompts_dir(a.prompts);
  std::ifstream index_in(prompts_dir / "index.json");
  if (!index_in)
    throw CLI::ValidationError("--prompts",
                               "no index.json under " + a.prompts);
  json index;
  index_in >> index;

  eval::EvaluateOptions opt;
  opt.sampling.endpoint_url =
      !a.endpoint.empty() ? a.endpoint : env_or("JRECAST_ENDPOINT", "");
  opt.sampling.auth_token = env_or("JRECAST_ENDPOINT_TOKEN", "");
  opt.sampling.model_id = a.model;
  opt.sampling.samples_per_bug = a.samples;
  opt.sampling.max_new_tokens = a.max_tokens;
  opt.sampling.temperature = a.temperature;
  opt.sampling.top_p = a.top_p;
  opt.sampling.batch_window = a.window;
  opt.judge.build_timeout_sec = a.judge_timeout;
  opt.judge.test_timeout_sec = a.judge_timeout;
  opt.prompt_kind = a.kind;
  opt.dataset_label = a.dataset_label;
  opt.out_dir = a.out;
  opt.parallelism = a.parallelism;
  opt.log = [](const std::string& line) { std::cout << line << "\n"; };

  write_run_json(a.out, "evaluate",
                 {{"manifest", a.manifest},
                  {"prompts", a.prompts},
                  {"kind", a.kind},
                  {"model", a.model},
                  {"dataset", a.dataset_label},
                  {"samples", a.samples},
                  {"temperature", a.temperature},
                  {"top_p", a.top_p},
                  {"max_tokens", a.max_tokens},
                  {"endpoint", opt.sampling.endpoint_url}});

  auto prompt_for = [&](const dataset::BugCase& bug) -> std::string {
    const json& prompts = index["prompts"];
    if (!prompts.contains(bug.bug_id)) return "";
    const json& per_bug = prompts[bug.bug_id];
    if (!per_bug.contains(a.kind) || !per_bug[a.kind].contains("file"))
      return "";
    std::ifstream in(prompts_dir / per_bug[a.kind]["file"].get<std::string>(),
                     std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  eval::LedgerEntry entry = eval::run_evaluate(manifest, prompt_for, opt);
  std::cout << "model=" << entry.model << " kind=" << entry.prompt_kind
            << " dataset=" << entry.dataset
            << " fixed_plausible=" << entry.fixed_plausible << "/"
            << entry.bugs_total << " fixed_correct="
            << (entry.fixed_correct ? std::to_string(*entry.fixed_correct)
                                    : std::string("pending review"))
            << "\n";
  return kOk;
}

// ---- report ----------------------------------------------------------------

struct ReportArgs {
  std::string ledger;
  std::string mode = "auto";
  std::string kind = "two_shot";
  std::string json_out;
};

int run_report(const ReportArgs& a) {
  eval::EvalLedger ledger = eval::load_ledger(a.ledger);
  eval::ReportMode mode = eval::ReportMode::Auto;
  if (a.mode == "decline") mode = eval::ReportMode::Decline;
  else if (a.mode == "improvement") mode = eval::ReportMode::Improvement;
  else if (a.mode != "auto")
    throw CLI::ValidationError("--mode", "unknown mode " + a.mode);

  eval::RenderedReport rep = eval::render_report(ledger, mode, a.kind);
  std::cout << rep.text;
  fs::path run_dir = ".";
  if (!a.json_out.empty()) {
    fs::path p(a.json_out);
    if (p.has_parent_path()) {
      fs::create_directories(p.parent_path());
      run_dir = p.parent_path();
    }
    std::ofstream out(p);
    out << rep.json.dump(2) << "\n";
  }
  write_run_json(run_dir, "report",
                 {{"ledger", a.ledger}, {"mode", a.mode}, {"kind", a.kind}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semantics-preserving bug-dataset transformation and "
               "repair-prompt evaluation"};
  app.require_subcommand(1);

  TransformArgs ta;
  auto* t = app.add_subcommand("transform",
                               "rewrite each bug's function with T1-T5");
  t->add_option("--manifest", ta.manifest, "bug manifest JSON")->required();
  t->add_option("--out", ta.out, "output directory")->required();
  t->add_option("--seed", ta.seed, "rename/dataset seed")->required();
  t->add_option("--ops", ta.ops, "comma list of T1..T5, or all/none");
  t->add_option("--max-dead-blocks", ta.max_dead_blocks,
                "dead-code insertions per function");
  t->add_option("--parallelism", ta.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  t->add_option("--name-provider", ta.provider, "deterministic | endpoint");
  t->add_option("--endpoint", ta.endpoint,
                "completion endpoint for the name provider");
  t->add_option("--endpoint-model", ta.endpoint_model,
                "model id for the name provider");

  VerifyArgs va;
  auto* v = app.add_subcommand(
      "verify", "check equivalence via project tests or a differential probe");
  v->add_option("--manifest", va.manifest, "transformed manifest JSON");
  v->add_option("--out-tree", va.out_tree,
                "transformed output tree (fallback file lookup)");
  v->add_option("--report", va.report, "report JSON path");
  v->add_option("--parallelism", va.parallelism, "worker threads")
      ->check(CLI::PositiveNumber);
  v->add_option("--timeout", va.timeout, "per-command timeout (seconds)");
  v->add_flag("--differential", va.differential,
              "compare two self-contained programs instead");
  v->add_option("--original", va.original, "original program (differential)");
  v->add_option("--transformed", va.transformed,
                "transformed program (differential)");
  v->add_option("--probe", va.probe,
                "probe JSON: entry_command, grid, timeout_sec");

  PromptArgs pa;
  auto* p = app.add_subcommand("prompt", "render repair-prompt documents");
  p->add_option("--manifest", pa.manifest, "bug manifest JSON")->required();
  p->add_option("--out", pa.out, "output directory")->required();
  p->add_option("--kind", pa.kind,
                "two_shot | two_shot_fl | bug_report | trigger_test | all");
  p->add_option("--budget", pa.budget, "token budget per prompt");
  p->add_option("--chars-per-token", pa.chars_per_token,
                "token estimator divisor");

  EvaluateArgs ea;
  auto* e = app.add_subcommand("evaluate",
                               "sample patches from an endpoint and judge them");
  e->add_option("--manifest", ea.manifest, "bug manifest JSON")->required();
  e->add_option("--prompts", ea.prompts, "prompt directory (from `prompt`)")
      ->required();
  e->add_option("--out", ea.out, "evaluation output directory")->required();
  e->add_option("--kind", ea.kind, "prompt kind to evaluate");
  e->add_option("--model", ea.model, "model id sent to the endpoint");
  e->add_option("--dataset-label", ea.dataset_label,
                "ledger dataset label (original | transformed)");
  e->add_option("--endpoint", ea.endpoint,
                "completion endpoint (or JRECAST_ENDPOINT)");
  e->add_option("--samples", ea.samples, "samples per bug");
  e->add_option("--max-tokens", ea.max_tokens, "max new tokens per sample");
  e->add_option("--temperature", ea.temperature, "sampling temperature");
  e->add_option("--top-p", ea.top_p, "nucleus sampling threshold");
  e->add_option("--window", ea.window, "completions requested per call");
  e->add_option("--parallelism", ea.parallelism, "judging workers")
      ->check(CLI::PositiveNumber);
  e->add_option("--judge-timeout", ea.judge_timeout,
                "build/test timeout while judging (seconds)");

  ReportArgs ra;
  auto* r = app.add_subcommand("report", "render decline/improvement tables");
  r->add_option("--ledger", ra.ledger, "evaluation ledger JSON")->required();
  r->add_option("--mode", ra.mode, "auto | decline | improvement");
  r->add_option("--kind", ra.kind, "prompt kind for decline pairing");
  r->add_option("--json", ra.json_out, "also write the report as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kConfigError;
  }

  try {
    if (t->parsed()) return run_transform(ta);
    if (v->parsed()) {
      if (!va.differential && va.manifest.empty())
        throw CLI::ValidationError("--manifest", "required unless --differential");
      if (va.differential &&
          (va.original.empty() || va.transformed.empty() || va.probe.empty()))
        throw CLI::ValidationError(
            "--differential", "needs --original, --transformed and --probe");
      return run_verify(va);
    }
    if (p->parsed()) return run_prompt(pa);
    if (e->parsed()) return run_evaluate(ea);
    if (r->parsed()) return run_report(ra);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kConfigError;
  } catch (const SchemaError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kConfigError;
  } catch (const IoError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kConfigError;
  } catch (const eval::EndpointUnavailable& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kBugFailure;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kBugFailure;
  }
  return kConfigError;
}
