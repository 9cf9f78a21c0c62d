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

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jrecast/eval/arith.hpp"
#include "jrecast/eval/ledger.hpp"

namespace jrecast::eval {

enum class ReportMode { Auto, Decline, Improvement };

struct RenderedReport {
  std::string text;
  nlohmann::json json;
};

namespace detail {

inline const LedgerEntry* find_entry(const EvalLedger& ledger,
                                     const std::string& model,
                                     const std::string& kind,
                                     const std::string& dataset) {
  for (const auto& e : ledger.entries)
    if (e.model == model && e.prompt_kind == kind && e.dataset == dataset)
      return &e;
  return nullptr;
}

inline std::vector<std::string> models_in_order(const EvalLedger& ledger) {
  std::vector<std::string> out;
  for (const auto& e : ledger.entries)
    if (std::find(out.begin(), out.end(), e.model) == out.end())
      out.push_back(e.model);
  return out;
}

inline std::string pad(const std::string& s, size_t w) {
  return s + std::string(s.size() < w ? w - s.size() : 0, ' ');
}

inline std::string table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return "";
  std::vector<size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].size());
  }
  std::ostringstream out;
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t i = 0; i < rows[r].size(); ++i)
      out << pad(rows[r][i], widths[i]) << (i + 1 < rows[r].size() ? "  " : "");
    out << "\n";
    if (r == 0) {
      size_t total = 0;
      for (size_t w : widths) total += w + 2;
      out << std::string(total > 2 ? total - 2 : 0, '-') << "\n";
    }
  }
  return out.str();
}

inline std::string fmt_avg(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

}  // namespace detail

/// Original-vs-transformed comparison: per model, correct and plausible
/// counts on both datasets with the percentage decline. The aggregate row is
/// computed from summed counts, never from averaged percentages. Correct
/// counts await manual review when annotations are absent.
inline RenderedReport render_decline_report(const EvalLedger& ledger,
                                            const std::string& prompt_kind) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"LLM", "Correct(orig)", "Correct(trans)", "Dec.(%)",
                  "Plausible(orig)", "Plausible(trans)", "Dec.(%)"});
  nlohmann::json jrows = nlohmann::json::array();

  int64_t co_sum = 0, ct_sum = 0, po_sum = 0, pt_sum = 0;
  bool all_correct_known = true;
  size_t model_rows = 0;
  for (const auto& model : detail::models_in_order(ledger)) {
    const LedgerEntry* orig =
        detail::find_entry(ledger, model, prompt_kind, "original");
    const LedgerEntry* trans =
        detail::find_entry(ledger, model, prompt_kind, "transformed");
    if (!orig || !trans) continue;
    model_rows++;
    std::vector<std::string> row = {model};
    nlohmann::json jr;
    jr["model"] = model;
    if (orig->fixed_correct && trans->fixed_correct) {
      double dec = compute_decline(int64_t(*orig->fixed_correct),
                                   int64_t(*trans->fixed_correct));
      row.push_back(std::to_string(*orig->fixed_correct));
      row.push_back(std::to_string(*trans->fixed_correct));
      row.push_back(format_pct(dec));
      co_sum += *orig->fixed_correct;
      ct_sum += *trans->fixed_correct;
      jr["correct_original"] = *orig->fixed_correct;
      jr["correct_transformed"] = *trans->fixed_correct;
      jr["correct_decline_pct"] = dec;
    } else {
      all_correct_known = false;
      row.insert(row.end(), {"pending review", "pending review", "--"});
      jr["correct_original"] = nullptr;
    }
    double pdec =
        compute_decline(int64_t(orig->fixed_plausible), int64_t(trans->fixed_plausible));
    row.push_back(std::to_string(orig->fixed_plausible));
    row.push_back(std::to_string(trans->fixed_plausible));
    row.push_back(format_pct(pdec));
    po_sum += orig->fixed_plausible;
    pt_sum += trans->fixed_plausible;
    jr["plausible_original"] = orig->fixed_plausible;
    jr["plausible_transformed"] = trans->fixed_plausible;
    jr["plausible_decline_pct"] = pdec;
    rows.push_back(std::move(row));
    jrows.push_back(std::move(jr));
  }

  nlohmann::json j;
  j["mode"] = "decline";
  j["prompt_kind"] = prompt_kind;
  j["rows"] = std::move(jrows);
  if (model_rows > 1) {
    std::vector<std::string> avg = {"Average"};
    nlohmann::json ja;
    double n = static_cast<double>(model_rows);
    if (all_correct_known) {
      double dec = compute_decline(co_sum, ct_sum);
      avg.push_back(detail::fmt_avg(co_sum / n));
      avg.push_back(detail::fmt_avg(ct_sum / n));
      avg.push_back(format_pct(dec));
      ja["correct_decline_pct"] = dec;
    } else {
      avg.insert(avg.end(), {"--", "--", "--"});
    }
    double pdec = compute_decline(po_sum, pt_sum);
    avg.push_back(detail::fmt_avg(po_sum / n));
    avg.push_back(detail::fmt_avg(pt_sum / n));
    avg.push_back(format_pct(pdec));
    ja["plausible_decline_pct"] = pdec;
    rows.push_back(std::move(avg));
    j["average"] = std::move(ja);
  }
  return {detail::table(rows), std::move(j)};
}

/// Prompt-enrichment comparison on one dataset: per model, the base
/// two-shot counts and for every enriched prompt the counts with signed
/// improvement percentages.
inline RenderedReport render_improvement_report(
    const EvalLedger& ledger, const std::string& dataset = "transformed") {
  static const std::vector<std::string> kinds = {"two_shot_fl", "trigger_test",
                                                 "bug_report"};
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head = {"LLM", "TwoShot C", "TwoShot P"};
  for (const auto& k : kinds) head.push_back(k + " C"), head.push_back(k + " P");
  rows.push_back(head);
  nlohmann::json jrows = nlohmann::json::array();

  struct Sums {
    int64_t c = 0, p = 0;
    bool c_known = true;
  };
  Sums base_sum;
  std::map<std::string, Sums> kind_sums;
  size_t model_rows = 0;

  for (const auto& model : detail::models_in_order(ledger)) {
    const LedgerEntry* base =
        detail::find_entry(ledger, model, "two_shot", dataset);
    if (!base) continue;
    model_rows++;
    std::vector<std::string> row = {model};
    nlohmann::json jr;
    jr["model"] = model;
    bool base_c_known = base->fixed_correct.has_value();
    row.push_back(base_c_known ? std::to_string(*base->fixed_correct)
                               : "pending review");
    row.push_back(std::to_string(base->fixed_plausible));
    if (base_c_known) base_sum.c += *base->fixed_correct;
    else base_sum.c_known = false;
    base_sum.p += base->fixed_plausible;
    jr["two_shot"] = entry_to_json(*base);

    for (const auto& kind : kinds) {
      const LedgerEntry* e = detail::find_entry(ledger, model, kind, dataset);
      if (!e) {
        row.push_back("--");
        row.push_back("--");
        kind_sums[kind].c_known = false;
        continue;
      }
      if (base_c_known && e->fixed_correct) {
        double imp = compute_improvement(int64_t(*base->fixed_correct),
                                         int64_t(*e->fixed_correct));
        row.push_back(std::to_string(*e->fixed_correct) + " (" +
                      format_signed_pct(imp) + "%)");
        kind_sums[kind].c += *e->fixed_correct;
        jr[kind]["correct_improvement_pct"] = imp;
      } else {
        row.push_back("pending review");
        kind_sums[kind].c_known = false;
      }
      double pimp = compute_improvement(int64_t(base->fixed_plausible),
                                        int64_t(e->fixed_plausible));
      row.push_back(std::to_string(e->fixed_plausible) + " (" +
                    format_signed_pct(pimp) + "%)");
      kind_sums[kind].p += e->fixed_plausible;
      jr[kind]["plausible_improvement_pct"] = pimp;
    }
    rows.push_back(std::move(row));
    jrows.push_back(std::move(jr));
  }

  nlohmann::json j;
  j["mode"] = "improvement";
  j["dataset"] = dataset;
  j["rows"] = std::move(jrows);
  if (model_rows > 1) {
    double n = static_cast<double>(model_rows);
    std::vector<std::string> avg = {"Average"};
    nlohmann::json ja;
    avg.push_back(base_sum.c_known ? detail::fmt_avg(base_sum.c / n) : "--");
    avg.push_back(detail::fmt_avg(base_sum.p / n));
    for (const auto& kind : kinds) {
      const Sums& s = kind_sums[kind];
      if (base_sum.c_known && s.c_known && base_sum.c > 0) {
        double imp = compute_improvement(base_sum.c, s.c);
        avg.push_back(detail::fmt_avg(s.c / n) + " (" + format_signed_pct(imp) +
                      "%)");
        ja[kind]["correct_improvement_pct"] = imp;
      } else {
        avg.push_back("--");
      }
      if (base_sum.p > 0) {
        double pimp = compute_improvement(base_sum.p, s.p);
        avg.push_back(detail::fmt_avg(s.p / n) + " (" + format_signed_pct(pimp) +
                      "%)");
        ja[kind]["plausible_improvement_pct"] = pimp;
      } else {
        avg.push_back("--");
      }
    }
    rows.push_back(std::move(avg));
    j["average"] = std::move(ja);
  }
  return {detail::table(rows), std::move(j)};
}

inline RenderedReport render_report(const EvalLedger& ledger,
                                    ReportMode mode = ReportMode::Auto,
                                    const std::string& prompt_kind = "two_shot") {
  if (mode == ReportMode::Auto) {
    bool has_both_datasets = false;
    for (const auto& e : ledger.entries) {
      if (e.dataset == "original" &&
          detail::find_entry(ledger, e.model, e.prompt_kind, "transformed"))
        has_both_datasets = true;
    }
    mode = has_both_datasets ? ReportMode::Decline : ReportMode::Improvement;
  }
  if (mode == ReportMode::Decline)
    return render_decline_report(ledger, prompt_kind);
  // improvement compares prompt kinds within one dataset; prefer the
  // transformed dataset when present, otherwise whatever the ledger holds
  std::string dataset = "transformed";
  bool has_transformed = false;
  for (const auto& e : ledger.entries)
    if (e.dataset == "transformed") has_transformed = true;
  if (!has_transformed && !ledger.entries.empty())
    dataset = ledger.entries.front().dataset;
  return render_improvement_report(ledger, dataset);
}

}  // namespace jrecast::eval
