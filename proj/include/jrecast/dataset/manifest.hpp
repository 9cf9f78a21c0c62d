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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "jrecast/support/error.hpp"

namespace jrecast::dataset {

struct BugReport {
  std::string title;
  std::string content;
};

struct TriggerTest {
  std::string name;
  std::string source_snippet;
  std::string error_message;
};

/// One Defects4J-style bug: where the faulty function lives, what exposes
/// it, and how to build and test the project it belongs to.
struct BugCase {
  std::string bug_id;
  std::string project;
  std::string checkout_dir;
  std::string file_relpath;
  std::string function_name;
  int function_line_hint = 1;
  std::vector<int> buggy_lines;          // 1-based; empty for omission faults
  std::optional<int> insertion_line;     // omission faults: line before the gap
  std::optional<BugReport> bug_report;
  std::vector<TriggerTest> trigger_tests;
  std::string build_cmd;
  std::string test_cmd;
  std::optional<std::string> developer_patch;  // fixed function text
  std::optional<std::string> transformed_file; // set in transformed manifests

  std::filesystem::path source_path() const {
    if (transformed_file) return *transformed_file;
    return std::filesystem::path(checkout_dir) / file_relpath;
  }
};

struct Manifest {
  int schema_version = 1;
  std::vector<BugCase> bugs;
};

namespace detail {

inline std::string require_string(const nlohmann::json& j, const char* field,
                                  const std::string& bug_id) {
  if (!j.contains(field) || !j[field].is_string() ||
      j[field].get<std::string>().empty())
    throw SchemaError("bug '" + bug_id + "': missing or empty field '" + field +
                      "'");
  return j[field].get<std::string>();
}

}  // namespace detail

inline BugCase bug_from_json(const nlohmann::json& j) {
  std::string id = j.value("bug_id", "");
  if (id.empty()) throw SchemaError("bug entry without bug_id");
  BugCase b;
  b.bug_id = id;
  b.project = detail::require_string(j, "project", id);
  b.checkout_dir = detail::require_string(j, "checkout_dir", id);
  b.file_relpath = detail::require_string(j, "file_relpath", id);
  b.function_name = detail::require_string(j, "function_name", id);
  if (!j.contains("function_line_hint") || !j["function_line_hint"].is_number())
    throw SchemaError("bug '" + id + "': missing field 'function_line_hint'");
  b.function_line_hint = j["function_line_hint"].get<int>();
  for (const auto& l : j.value("buggy_lines", nlohmann::json::array())) {
    int line = l.get<int>();
    if (line < 1) throw SchemaError("bug '" + id + "': buggy line < 1");
    b.buggy_lines.push_back(line);
  }
  if (j.contains("insertion_line")) b.insertion_line = j["insertion_line"].get<int>();
  if (j.contains("bug_report") && !j["bug_report"].is_null()) {
    const auto& r = j["bug_report"];
    b.bug_report = BugReport{r.value("title", ""), r.value("content", "")};
    if (b.bug_report->title.empty())
      throw SchemaError("bug '" + id + "': bug_report without title");
  }
  for (const auto& t : j.value("trigger_tests", nlohmann::json::array())) {
    b.trigger_tests.push_back(TriggerTest{t.value("name", ""),
                                          t.value("source_snippet", ""),
                                          t.value("error_message", "")});
  }
  b.build_cmd = detail::require_string(j, "build_cmd", id);
  b.test_cmd = detail::require_string(j, "test_cmd", id);
  if (j.contains("developer_patch") && !j["developer_patch"].is_null())
    b.developer_patch = j["developer_patch"].get<std::string>();
  if (j.contains("transformed_file") && !j["transformed_file"].is_null())
    b.transformed_file = j["transformed_file"].get<std::string>();
  return b;
}

inline nlohmann::json bug_to_json(const BugCase& b) {
  nlohmann::json j;
  j["bug_id"] = b.bug_id;
  j["project"] = b.project;
  j["checkout_dir"] = b.checkout_dir;
  j["file_relpath"] = b.file_relpath;
  j["function_name"] = b.function_name;
  j["function_line_hint"] = b.function_line_hint;
  j["buggy_lines"] = b.buggy_lines;
  if (b.insertion_line) j["insertion_line"] = *b.insertion_line;
  if (b.bug_report)
    j["bug_report"] = {{"title", b.bug_report->title},
                       {"content", b.bug_report->content}};
  j["trigger_tests"] = nlohmann::json::array();
  for (const auto& t : b.trigger_tests)
    j["trigger_tests"].push_back({{"name", t.name},
                                  {"source_snippet", t.source_snippet},
                                  {"error_message", t.error_message}});
  j["build_cmd"] = b.build_cmd;
  j["test_cmd"] = b.test_cmd;
  if (b.developer_patch) j["developer_patch"] = *b.developer_patch;
  if (b.transformed_file) j["transformed_file"] = *b.transformed_file;
  return j;
}

/// Loads and validates a manifest. Everything checkable without touching the
/// project checkouts is verified here; per-file invariants (buggy lines
/// inside the function span) are enforced when the bug is processed.
inline Manifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw SchemaError("manifest " + path.string() + ": " + e.what());
  }
  Manifest m;
  m.schema_version = j.value("schema_version", 0);
  if (m.schema_version != 1)
    throw SchemaError("manifest " + path.string() +
                      ": unrecognized schema_version");
  if (!j.contains("bugs") || !j["bugs"].is_array() || j["bugs"].empty())
    throw SchemaError("manifest " + path.string() + ": empty bug list");
  std::set<std::string> seen;
  std::filesystem::path base = path.has_parent_path() ? path.parent_path()
                                                      : std::filesystem::path(".");
  for (const auto& bj : j["bugs"]) {
    BugCase b = bug_from_json(bj);
    if (!seen.insert(b.bug_id).second)
      throw SchemaError("bug '" + b.bug_id + "': duplicate bug_id");
    // relative paths inside a manifest resolve against the manifest itself
    if (std::filesystem::path(b.checkout_dir).is_relative())
      b.checkout_dir = (base / b.checkout_dir).string();
    if (b.transformed_file &&
        std::filesystem::path(*b.transformed_file).is_relative())
      b.transformed_file = (base / *b.transformed_file).string();
    m.bugs.push_back(std::move(b));
  }
  return m;
}

/// Transformed-file paths under the manifest's own directory are written
/// relative to it, so a dataset tree is portable and two runs over the same
/// inputs produce byte-identical manifests.
inline void save_manifest(const Manifest& m, const std::filesystem::path& path) {
  nlohmann::json j;
  j["schema_version"] = m.schema_version;
  j["bugs"] = nlohmann::json::array();
  std::filesystem::path base =
      std::filesystem::absolute(path.has_parent_path() ? path.parent_path()
                                                       : ".");
  for (const auto& b : m.bugs) {
    nlohmann::json bj = bug_to_json(b);
    if (b.transformed_file) {
      std::error_code ec;
      std::filesystem::path rel = std::filesystem::relative(
          std::filesystem::absolute(*b.transformed_file), base, ec);
      if (!ec && !rel.empty() && rel.native().rfind("..", 0) != 0)
        bj["transformed_file"] = rel.string();
    }
    j["bugs"].push_back(std::move(bj));
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace jrecast::dataset
