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
#include <string>
#include <vector>

#include "jrecast/dataset/manifest.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/syntax/parser.hpp"

namespace jrecast::prompt {

// Marker lines, byte-exact. Every rendered document ends with the
// fixed-function marker so the model completes from there.
inline constexpr const char* kHeaderMarker =
    "// Provide a fix for the buggy function";
inline constexpr const char* kBuggyMarker = "// Buggy Function";
inline constexpr const char* kFixedMarker = "// Fixed Function";
inline constexpr const char* kReportTitleMarker = "// Bug Report Title";
inline constexpr const char* kReportContentMarker = "// Bug Report Content";
inline constexpr const char* kTriggerTestMarker = "// Trigger Test";
inline constexpr const char* kErrorMessageMarker = "// Error Message";
inline constexpr const char* kFaultMarker = "/*bug is here*/";

enum class PromptKind { TwoShot, TwoShotFL, BugReport, TriggerTest };

inline const char* kind_slug(PromptKind k) {
  switch (k) {
    case PromptKind::TwoShot: return "two_shot";
    case PromptKind::TwoShotFL: return "two_shot_fl";
    case PromptKind::BugReport: return "bug_report";
    case PromptKind::TriggerTest: return "trigger_test";
  }
  return "?";
}

inline std::optional<PromptKind> kind_from_slug(const std::string& s) {
  if (s == "two_shot") return PromptKind::TwoShot;
  if (s == "two_shot_fl") return PromptKind::TwoShotFL;
  if (s == "bug_report") return PromptKind::BugReport;
  if (s == "trigger_test") return PromptKind::TriggerTest;
  return std::nullopt;
}

class NoExampleAvailable : public Error {
 public:
  explicit NoExampleAvailable(const std::string& m) : Error(m) {}
};
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& m) : Error(m) {}
};
class MissingIngredient : public Error {
 public:
  explicit MissingIngredient(const std::string& m) : Error(m) {}
};
class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& m) : Error(m) {}
};

struct RepairExample {
  std::string buggy_fn;
  std::string fixed_fn;
  enum class Origin { Toy, SameProject } origin = Origin::Toy;

  size_t context_size() const { return buggy_fn.size() + fixed_fn.size(); }
};

struct PromptDocument {
  PromptKind kind = PromptKind::TwoShot;
  std::string text;
  int token_estimate = 0;
  std::vector<std::string> ingredients;  // bug ids / pieces used
};

struct PromptConfig {
  int token_budget = 4096;
  int chars_per_token = 4;  // simple monotone length heuristic
};

inline int estimate_tokens(const std::string& text, const PromptConfig& cfg) {
  return static_cast<int>((text.size() + cfg.chars_per_token - 1) /
                          cfg.chars_per_token);
}

/// The manually constructed toy pair: a versioned asset so prompt bytes are
/// reproducible across runs.
inline RepairExample toy_example() {
  RepairExample ex;
  ex.origin = RepairExample::Origin::Toy;
  ex.buggy_fn =
      "public static int sumUpTo(int[] values, int n) {\n"
      "    int total = 0;\n"
      "    for (int i = 0; i <= n; i++) {\n"
      "        total += values[i];\n"
      "    }\n"
      "    return total;\n"
      "}";
  ex.fixed_fn =
      "public static int sumUpTo(int[] values, int n) {\n"
      "    int total = 0;\n"
      "    for (int i = 0; i < n; i++) {\n"
      "        total += values[i];\n"
      "    }\n"
      "    return total;\n"
      "}";
  return ex;
}

/// Text of the bug's function, sliced from its (possibly transformed) file.
/// Also reports the 1-based file line the function starts on.
inline std::string function_text(const dataset::BugCase& bug,
                                 int* first_line = nullptr) {
  syntax::SourceUnit unit =
      syntax::SourceUnit::from_file(bug.source_path().string());
  syntax::SyntaxTree tree = syntax::parse(unit);
  syntax::NodeId fn =
      syntax::locate_function(tree, bug.function_name, bug.function_line_hint);
  syntax::Span s = tree.span(fn);
  if (first_line) *first_line = unit.line_of(s.begin);
  return std::string(unit.slice(s));
}

/// The same-project repair example with the shortest context, measured in
/// characters of the buggy+fixed pair. Ties break toward the smaller bug_id.
inline RepairExample select_shortest_example(
    const std::vector<dataset::BugCase>& project_bugs,
    const std::string& exclude_bug_id) {
  const dataset::BugCase* best = nullptr;
  size_t best_size = 0;
  std::string best_buggy;
  for (const auto& b : project_bugs) {
    if (b.bug_id == exclude_bug_id || !b.developer_patch) continue;
    std::string buggy;
    try {
      buggy = function_text(b);
    } catch (const Error&) {
      continue;  // unreadable candidate is simply not available
    }
    size_t size = buggy.size() + b.developer_patch->size();
    if (!best || size < best_size ||
        (size == best_size && b.bug_id < best->bug_id)) {
      best = &b;
      best_size = size;
      best_buggy = std::move(buggy);
    }
  }
  if (!best)
    throw NoExampleAvailable("no other bug with a developer patch in project");
  RepairExample ex;
  ex.origin = RepairExample::Origin::SameProject;
  ex.buggy_fn = std::move(best_buggy);
  ex.fixed_fn = *best->developer_patch;
  return ex;
}

namespace detail {

inline std::string example_section(const RepairExample& ex) {
  return std::string(kBuggyMarker) + "\n" + ex.buggy_fn + "\n" + kFixedMarker +
         "\n" + ex.fixed_fn + "\n";
}

inline std::string target_section(const std::string& target_fn) {
  return std::string(kBuggyMarker) + "\n" + target_fn + "\n" + kFixedMarker +
         "\n";
}

inline PromptDocument finish(PromptKind kind, std::string text,
                             std::vector<std::string> ingredients,
                             const PromptConfig& cfg) {
  PromptDocument doc;
  doc.kind = kind;
  doc.text = std::move(text);
  doc.token_estimate = estimate_tokens(doc.text, cfg);
  doc.ingredients = std::move(ingredients);
  if (doc.token_estimate > cfg.token_budget)
    throw BudgetExceeded("prompt estimate " +
                         std::to_string(doc.token_estimate) + " over budget " +
                         std::to_string(cfg.token_budget));
  return doc;
}

inline std::string two_shot_text(const std::string& target_fn,
                                 const RepairExample& toy,
                                 const RepairExample* proj) {
  std::string text = std::string(kHeaderMarker) + "\n";
  text += example_section(toy);
  if (proj) text += example_section(*proj);
  text += std::string(kHeaderMarker) + "\n";
  text += target_section(target_fn);
  return text;
}

}  // namespace detail

/// Two-shot: toy example, then the same-project example, then the target.
/// When the budget is tight the project example is dropped first; the toy
/// example is never dropped.
inline PromptDocument build_two_shot(
    const dataset::BugCase& bug, const RepairExample& toy,
    const RepairExample* proj, const PromptConfig& cfg = {},
    std::optional<std::string> target_override = std::nullopt) {
  std::string target =
      target_override ? std::move(*target_override) : function_text(bug);
  if (target.empty())
    throw PreconditionViolation("bug '" + bug.bug_id + "': empty target function");
  std::vector<std::string> used = {"toy"};
  std::string text = detail::two_shot_text(target, toy, proj);
  if (proj && estimate_tokens(text, cfg) > cfg.token_budget) {
    text = detail::two_shot_text(target, toy, nullptr);  // drop project example
  } else if (proj) {
    used.push_back("project-example");
  }
  return detail::finish(PromptKind::TwoShot, std::move(text), std::move(used),
                        cfg);
}

/// Two-shot with perfect line-level fault localization: each buggy line of
/// the target carries the fault marker as a suffix. Omission faults mark the
/// line preceding the insertion point.
inline PromptDocument build_two_shot_fl(const dataset::BugCase& bug,
                                        const RepairExample& toy,
                                        const RepairExample* proj,
                                        const PromptConfig& cfg = {}) {
  int first_line = 1;
  std::string target = function_text(bug, &first_line);
  if (target.empty())
    throw PreconditionViolation("bug '" + bug.bug_id + "': empty target function");

  std::vector<int> mark_lines = bug.buggy_lines;
  if (mark_lines.empty()) {
    if (!bug.insertion_line)
      throw MissingIngredient("bug '" + bug.bug_id +
                              "': no buggy lines and no insertion_line");
    mark_lines.push_back(*bug.insertion_line);
  }

  // split the function text into lines and append the marker per buggy line
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= target.size()) {
    size_t nl = target.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(target.substr(start));
      break;
    }
    lines.push_back(target.substr(start, nl - start));
    start = nl + 1;
  }
  for (int file_line : mark_lines) {
    int idx = file_line - first_line;
    if (idx < 0 || idx >= static_cast<int>(lines.size()))
      throw SchemaError("bug '" + bug.bug_id + "': buggy line " +
                        std::to_string(file_line) +
                        " outside the function span");
    std::string& ln = lines[idx];
    size_t end = ln.size();
    while (end > 0 && ln[end - 1] == '\r') end--;  // keep CR outside the marker
    ln = ln.substr(0, end) + kFaultMarker + ln.substr(end);
  }
  std::string marked;
  for (size_t i = 0; i < lines.size(); ++i) {
    marked += lines[i];
    if (i + 1 < lines.size()) marked += "\n";
  }

  PromptDocument doc =
      build_two_shot(bug, toy, proj, cfg, std::move(marked));
  doc.kind = PromptKind::TwoShotFL;
  return doc;
}

/// Bug-report prompt: no examples; the report replaces them. The content is
/// tail-truncated to the budget, the title never is.
inline PromptDocument build_bug_report(const dataset::BugCase& bug,
                                       const PromptConfig& cfg = {}) {
  if (!bug.bug_report)
    throw MissingIngredient("bug '" + bug.bug_id + "': no bug report");
  std::string target = function_text(bug);
  if (target.empty())
    throw PreconditionViolation("bug '" + bug.bug_id + "': empty target function");

  auto assemble = [&](const std::string& content) {
    std::string text = std::string(kReportTitleMarker) + "\n" +
                       bug.bug_report->title + "\n" + kReportContentMarker +
                       "\n" + content + "\n";
    text += std::string(kHeaderMarker) + "\n";
    text += detail::target_section(target);
    return text;
  };
  std::string text = assemble(bug.bug_report->content);
  if (estimate_tokens(text, cfg) > cfg.token_budget) {
    size_t overhead = assemble("").size();
    size_t budget_chars =
        static_cast<size_t>(cfg.token_budget) * cfg.chars_per_token;
    size_t allowed = budget_chars > overhead ? budget_chars - overhead : 0;
    text = assemble(bug.bug_report->content.substr(0, allowed));
  }
  return detail::finish(PromptKind::BugReport, std::move(text),
                        {"bug-report"}, cfg);
}

/// Trigger-test prompt: the failing test and its error message replace the
/// examples. With several trigger tests the shortest snippet is used.
inline PromptDocument build_trigger_test(const dataset::BugCase& bug,
                                         const PromptConfig& cfg = {}) {
  if (bug.trigger_tests.empty())
    throw MissingIngredient("bug '" + bug.bug_id + "': no trigger tests");
  std::string target = function_text(bug);
  if (target.empty())
    throw PreconditionViolation("bug '" + bug.bug_id + "': empty target function");

  const dataset::TriggerTest* chosen = &bug.trigger_tests[0];
  for (const auto& t : bug.trigger_tests)
    if (t.source_snippet.size() < chosen->source_snippet.size()) chosen = &t;

  std::string text = std::string(kTriggerTestMarker) + "\n" +
                     chosen->source_snippet + "\n" + kErrorMessageMarker +
                     "\n" + chosen->error_message + "\n";
  text += std::string(kHeaderMarker) + "\n";
  text += detail::target_section(target);
  return detail::finish(PromptKind::TriggerTest, std::move(text),
                        {"trigger-test:" + chosen->name}, cfg);
}

}  // namespace jrecast::prompt
