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

#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "jrecast/dataset/manifest.hpp"
#include "jrecast/eval/extract.hpp"
#include "jrecast/eval/judge.hpp"
#include "jrecast/eval/ledger.hpp"
#include "jrecast/eval/sampling.hpp"

// Orchestration of the evaluate stage: sample completions from the endpoint,
// extract candidate functions, judge deduplicated candidates by test
// execution, and aggregate a ledger entry. Every artifact is persisted
// incrementally so a killed run resumes where disk state ends:
//
//   <out>/samples/<bug>.jsonl     one completion per line, appended per batch
//   <out>/candidates/<bug>.jsonl  extraction + verdict per sample
//   <out>/verdicts/<bug>.json     per-bug summary; "complete": true marks done
//   <out>/ledger.json             aggregated counts per (model, kind, dataset)

namespace jrecast::eval {

struct EvaluateOptions {
  SamplingConfig sampling;
  JudgeOptions judge;
  std::string prompt_kind = "two_shot";
  std::string dataset_label = "original";
  std::filesystem::path out_dir;
  int parallelism = 1;  // judging workers
  std::function<void(const std::string&)> log = [](const std::string&) {};
};

namespace detail {

inline int count_lines(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) return 0;
  int n = 0;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) n++;
  return n;
}

inline std::vector<std::string> read_samples(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line);
    out.push_back(j.value("completion", ""));
  }
  return out;
}

}  // namespace detail

/// Evaluates one bug end to end; returns the candidates (already persisted).
inline std::vector<PatchCandidate> evaluate_bug(const dataset::BugCase& bug,
                                                const std::string& prompt_text,
                                                EndpointClient& client,
                                                const EvaluateOptions& opt) {
  namespace fs = std::filesystem;
  fs::path samples_path = opt.out_dir / "samples" / (bug.bug_id + ".jsonl");
  fs::path cand_path = opt.out_dir / "candidates" / (bug.bug_id + ".jsonl");
  fs::path verdict_path = opt.out_dir / "verdicts" / (bug.bug_id + ".json");
  fs::create_directories(samples_path.parent_path());
  fs::create_directories(cand_path.parent_path());
  fs::create_directories(verdict_path.parent_path());

  // resume: a completed bug is never re-sampled or re-judged
  if (fs::exists(verdict_path)) {
    std::ifstream in(verdict_path);
    nlohmann::json j;
    in >> j;
    if (j.value("complete", false)) {
      std::vector<PatchCandidate> out;
      std::ifstream cin_(cand_path);
      std::string line;
      while (std::getline(cin_, line)) {
        if (line.empty()) continue;
        nlohmann::json cj = nlohmann::json::parse(line);
        PatchCandidate c;
        c.bug_id = bug.bug_id;
        c.sample_index = cj.value("sample_index", 0);
        if (cj.contains("extracted") && !cj["extracted"].is_null())
          c.extracted_fn = cj["extracted"].get<std::string>();
        c.normalized_hash = cj.value("hash", "");
        c.verdict = verdict_from_name(cj.value("verdict", "unparsed"));
        out.push_back(std::move(c));
      }
      opt.log(bug.bug_id + ": resume, already judged");
      return out;
    }
  }

  // sampling, resumable at batch granularity
  int already = detail::count_lines(samples_path);
  if (already < opt.sampling.samples_per_bug) {
    std::ofstream app(samples_path, std::ios::app);
    if (!app) throw IoError("cannot append " + samples_path.string());
    int index = already;
    client.sample_to(prompt_text, opt.sampling.samples_per_bug, already,
                     [&](const std::vector<std::string>& batch) {
                       for (const auto& text : batch) {
                         nlohmann::json j;
                         j["sample_index"] = index++;
                         j["completion"] = text;
                         app << j.dump() << "\n";
                       }
                       app.flush();
                     });
  }
  opt.log(bug.bug_id + ": " + std::to_string(opt.sampling.samples_per_bug) +
          " samples on disk");

  std::vector<std::string> completions = detail::read_samples(samples_path);
  std::vector<PatchCandidate> candidates(completions.size());
  std::map<std::string, std::vector<size_t>> by_hash;
  for (size_t i = 0; i < completions.size(); ++i) {
    PatchCandidate& c = candidates[i];
    c.bug_id = bug.bug_id;
    c.sample_index = static_cast<int>(i);
    c.raw_completion = completions[i];
    c.extracted_fn = extract_function(completions[i]);
    if (c.extracted_fn) {
      c.normalized_hash = normalized_hash(*c.extracted_fn);
      by_hash[c.normalized_hash].push_back(i);
    } else {
      c.verdict = Verdict::Unparsed;
    }
  }

  // judge each unique candidate once; share the verdict across duplicates
  std::vector<std::string> hashes;
  for (const auto& [h, _] : by_hash) hashes.push_back(h);
  std::map<std::string, Verdict> verdict_of;
  std::map<std::string, std::string> note_of;
  std::mutex mu;
  std::atomic<size_t> cursor{0};
  int workers = std::max(1, opt.parallelism);
  auto work = [&](int wid) {
    while (true) {
      size_t i = cursor.fetch_add(1);
      if (i >= hashes.size()) return;
      const std::string& h = hashes[i];
      const PatchCandidate& rep = candidates[by_hash[h].front()];
      fs::path ws = opt.out_dir / "work" /
                    (bug.bug_id + "-w" + std::to_string(wid));
      std::string note;
      Verdict v = judge_plausible(bug, *rep.extracted_fn, ws, opt.judge, &note);
      std::error_code ec;
      fs::remove_all(ws, ec);
      std::lock_guard<std::mutex> lock(mu);
      verdict_of[h] = v;
      if (!note.empty()) note_of[h] = note;
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();

  for (auto& c : candidates)
    if (c.extracted_fn) c.verdict = verdict_of[c.normalized_hash];

  {
    std::ofstream out(cand_path, std::ios::trunc);
    for (const auto& c : candidates) {
      nlohmann::json j;
      j["bug_id"] = c.bug_id;
      j["sample_index"] = c.sample_index;
      if (c.extracted_fn) j["extracted"] = *c.extracted_fn;
      else j["extracted"] = nullptr;
      j["hash"] = c.normalized_hash;
      j["verdict"] = verdict_name(c.verdict);
      auto note = note_of.find(c.normalized_hash);
      if (note != note_of.end()) j["note"] = note->second;
      out << j.dump() << "\n";
    }
  }
  {
    Verdict best = Verdict::Unparsed;
    for (const auto& c : candidates)
      if (static_cast<int>(c.verdict) > static_cast<int>(best)) best = c.verdict;
    nlohmann::json j;
    j["bug_id"] = bug.bug_id;
    j["best"] = verdict_name(best);
    j["unique_candidates"] = hashes.size();
    j["samples"] = candidates.size();
    j["complete"] = true;
    std::ofstream out(verdict_path, std::ios::trunc);
    out << j.dump(2) << "\n";
  }
  opt.log(bug.bug_id + ": judged " + std::to_string(hashes.size()) +
          " unique candidates");
  return candidates;
}

/// Runs evaluate over a manifest given rendered prompt files. Returns the
/// aggregated ledger entry (also upserted into <out>/ledger.json).
inline LedgerEntry run_evaluate(
    const dataset::Manifest& manifest,
    const std::function<std::string(const dataset::BugCase&)>& prompt_text_for,
    const EvaluateOptions& opt) {
  EndpointClient client(opt.sampling);
  std::map<std::string, std::vector<PatchCandidate>> by_bug;
  for (const auto& bug : manifest.bugs) {
    std::string prompt = prompt_text_for(bug);
    if (prompt.empty()) {
      opt.log(bug.bug_id + ": no prompt available, excluded");
      continue;
    }
    by_bug[bug.bug_id] = evaluate_bug(bug, prompt, client, opt);
  }
  LedgerEntry entry = aggregate(opt.sampling.model_id, opt.prompt_kind,
                                opt.dataset_label, by_bug);

  std::filesystem::path ledger_path = opt.out_dir / "ledger.json";
  EvalLedger ledger;
  if (std::filesystem::exists(ledger_path)) ledger = load_ledger(ledger_path);
  upsert_entry(ledger, entry);
  save_ledger(ledger, ledger_path);
  return entry;
}

}  // namespace jrecast::eval
