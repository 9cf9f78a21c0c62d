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

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jrecast/eval/judge.hpp"

namespace jrecast::eval {

struct PatchCandidate {
  std::string bug_id;
  int sample_index = 0;
  std::string raw_completion;
  std::optional<std::string> extracted_fn;
  std::string normalized_hash;  // empty when nothing extracted
  Verdict verdict = Verdict::Unparsed;
  bool flagged_correct = false;  // manual annotation slot
};

/// Aggregated counts for one (model, prompt kind, dataset) cell: the
/// fixed-bug numbers the paper's tables are built from.
struct LedgerEntry {
  std::string model;
  std::string prompt_kind;  // two_shot / two_shot_fl / bug_report / trigger_test
  std::string dataset;      // original / transformed
  int bugs_total = 0;
  int fixed_plausible = 0;
  std::optional<int> fixed_correct;  // absent until plausible patches reviewed
  std::map<std::string, std::string> per_bug_best;  // bug_id -> verdict name
};

struct EvalLedger {
  std::vector<LedgerEntry> entries;
};

/// Per-bug best verdict in the order unparsed < compile_fail < test_fail <
/// plausible; a bug is fixed-plausible when at least one sample is
/// plausible, fixed-correct when at least one plausible sample carries the
/// manual annotation. Bugs with zero samples are excluded (reported by the
/// caller as a warning).
inline LedgerEntry aggregate(
    const std::string& model, const std::string& prompt_kind,
    const std::string& dataset,
    const std::map<std::string, std::vector<PatchCandidate>>& by_bug) {
  LedgerEntry entry;
  entry.model = model;
  entry.prompt_kind = prompt_kind;
  entry.dataset = dataset;
  bool any_annotation = false;
  int correct = 0;
  for (const auto& [bug_id, candidates] : by_bug) {
    if (candidates.empty()) continue;  // degenerate: nothing sampled
    Verdict best = Verdict::Unparsed;
    bool flagged = false;
    for (const auto& c : candidates) {
      if (static_cast<int>(c.verdict) > static_cast<int>(best)) best = c.verdict;
      if (c.flagged_correct) {
        any_annotation = true;
        // only plausible patches can be annotated correct
        if (c.verdict == Verdict::Plausible) flagged = true;
      }
    }
    entry.bugs_total++;
    if (best == Verdict::Plausible) entry.fixed_plausible++;
    if (flagged) correct++;
    entry.per_bug_best[bug_id] = verdict_name(best);
  }
  if (any_annotation) entry.fixed_correct = correct;
  return entry;
}

inline nlohmann::json entry_to_json(const LedgerEntry& e) {
  nlohmann::json j;
  j["model"] = e.model;
  j["prompt_kind"] = e.prompt_kind;
  j["dataset"] = e.dataset;
  j["bugs_total"] = e.bugs_total;
  j["fixed_plausible"] = e.fixed_plausible;
  if (e.fixed_correct) j["fixed_correct"] = *e.fixed_correct;
  else j["fixed_correct"] = nullptr;
  j["per_bug_best"] = e.per_bug_best;
  return j;
}

inline LedgerEntry entry_from_json(const nlohmann::json& j) {
  LedgerEntry e;
  e.model = j.value("model", "");
  e.prompt_kind = j.value("prompt_kind", "two_shot");
  e.dataset = j.value("dataset", "original");
  e.bugs_total = j.value("bugs_total", 0);
  e.fixed_plausible = j.value("fixed_plausible", 0);
  if (j.contains("fixed_correct") && !j["fixed_correct"].is_null())
    e.fixed_correct = j["fixed_correct"].get<int>();
  if (j.contains("per_bug_best"))
    for (auto it = j["per_bug_best"].begin(); it != j["per_bug_best"].end(); ++it)
      e.per_bug_best[it.key()] = it.value().get<std::string>();
  return e;
}

inline void save_ledger(const EvalLedger& ledger,
                        const std::filesystem::path& path) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : ledger.entries) j["entries"].push_back(entry_to_json(e));
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

inline EvalLedger load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ledger " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("ledger " + path.string() + ": " + e.what());
  }
  EvalLedger ledger;
  for (const auto& ej : j.value("entries", nlohmann::json::array()))
    ledger.entries.push_back(entry_from_json(ej));
  return ledger;
}

/// Replaces the entry with the same (model, prompt_kind, dataset) key or
/// appends a new one.
inline void upsert_entry(EvalLedger& ledger, LedgerEntry entry) {
  for (auto& e : ledger.entries) {
    if (e.model == entry.model && e.prompt_kind == entry.prompt_kind &&
        e.dataset == entry.dataset) {
      e = std::move(entry);
      return;
    }
  }
  ledger.entries.push_back(std::move(entry));
}

}  // namespace jrecast::eval
