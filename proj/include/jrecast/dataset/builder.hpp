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
#include <atomic>
#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "jrecast/dataset/manifest.hpp"
#include "jrecast/transform/pipeline.hpp"

namespace jrecast::dataset {

struct ProvenanceRow {
  std::string bug_id;
  transform::Op op;
  uint32_t start_byte = 0;
  uint32_t end_byte = 0;
  bool applied = true;
  std::string skip_reason;
};

struct BugFailure {
  std::string bug_id;
  std::string error;
};

struct BuildResult {
  Manifest transformed;                 // remapped manifest, failures omitted
  std::vector<ProvenanceRow> records;
  std::vector<BugFailure> failures;
  std::map<std::string, std::pair<int, int>> op_counts;  // applied / skipped
  // opaque regions the parser could not model, per bug (input coordinates)
  std::vector<std::pair<std::string, syntax::Span>> opaque_diagnostics;
};

namespace detail {

inline void write_text(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out << text;
}

}  // namespace detail

/// Transforms every bug's file in place within a mirrored output tree
/// (out_dir/<bug_id>/<file_relpath>), remapping buggy-line positions through
/// the edit offsets. Per-bug failures are isolated: the run continues and
/// reports them. Re-running with identical inputs reproduces identical bytes.
inline BuildResult build_transformed_dataset(
    const Manifest& manifest, const transform::TransformConfig& config,
    const std::filesystem::path& out_dir, int parallelism = 1,
    transform::NameProvider* provider = nullptr) {
  namespace fs = std::filesystem;
  BuildResult result;
  result.transformed.schema_version = manifest.schema_version;

  struct Slot {
    bool ok = false;
    BugCase bug;
    std::vector<ProvenanceRow> rows;
    std::string error;
    std::vector<syntax::Span> opaque;
  };
  std::vector<Slot> slots(manifest.bugs.size());
  std::atomic<size_t> next{0};

  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= manifest.bugs.size()) return;
      const BugCase& bug = manifest.bugs[i];
      Slot& slot = slots[i];
      try {
        syntax::SourceUnit unit =
            syntax::SourceUnit::from_file(bug.source_path().string());
        // eager invariant: buggy lines must sit inside the function's span
        {
          syntax::SyntaxTree tree = syntax::parse(unit);
          syntax::NodeId fn = syntax::locate_function(tree, bug.function_name,
                                                      bug.function_line_hint);
          syntax::Span fs_ = tree.span(fn);
          int first = unit.line_of(fs_.begin), last = unit.line_of(fs_.end - 1);
          for (int line : bug.buggy_lines)
            if (line < first || line > last)
              throw SchemaError("bug '" + bug.bug_id + "': buggy line " +
                                std::to_string(line) +
                                " outside the function span");
        }
        transform::PipelineResult pr = transform::transform_pipeline(
            unit, {bug.function_name, bug.function_line_hint}, config,
            bug.bug_id, provider);

        fs::path out_file = out_dir / bug.bug_id / bug.file_relpath;
        detail::write_text(out_file, pr.output.text());

        BugCase updated = bug;
        updated.transformed_file = out_file.string();
        updated.function_line_hint =
            pr.output.line_of(pr.map_offset(unit.offset_of_line(
                std::min<int>(bug.function_line_hint,
                              static_cast<int>(unit.line_count())))));
        for (int& line : updated.buggy_lines)
          line = pr.output.line_of(pr.map_offset(unit.offset_of_line(line)));
        if (updated.insertion_line)
          updated.insertion_line = pr.output.line_of(
              pr.map_offset(unit.offset_of_line(*updated.insertion_line)));

        for (const auto& e : pr.record.edits)
          slot.rows.push_back({bug.bug_id, e.op, e.start_byte, e.end_byte,
                               e.applied, e.skip_reason});
        slot.opaque = pr.opaque_regions;
        slot.bug = std::move(updated);
        slot.ok = true;
      } catch (const std::exception& e) {
        slot.error = e.what();
      }
    }
  };
  int workers = std::max(1, parallelism);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  for (size_t i = 0; i < slots.size(); ++i) {
    Slot& slot = slots[i];
    if (!slot.ok) {
      result.failures.push_back({manifest.bugs[i].bug_id, slot.error});
      continue;
    }
    result.transformed.bugs.push_back(std::move(slot.bug));
    for (auto& row : slot.rows) {
      auto& c = result.op_counts[transform::op_name(row.op)];
      if (row.applied) c.first++;
      else c.second++;
      result.records.push_back(std::move(row));
    }
    for (const auto& span : slot.opaque)
      result.opaque_diagnostics.emplace_back(manifest.bugs[i].bug_id, span);
  }
  return result;
}

/// JSON-lines log of regions the parser treated as opaque: transformations
/// never fire inside them, and a reviewer may want to know what was skipped.
inline void export_diagnostics(const BuildResult& result,
                               const std::filesystem::path& path) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& [bug_id, span] : result.opaque_diagnostics) {
    nlohmann::json j;
    j["bug_id"] = bug_id;
    j["kind"] = "opaque-region";
    j["start_byte"] = span.begin;
    j["end_byte"] = span.end;
    out << j.dump() << "\n";
  }
}

/// JSON-lines provenance, one line per edit, stably ordered by
/// (bug_id, start_byte). Offsets refer to the text the operator stage saw.
inline void export_provenance(std::vector<ProvenanceRow> records,
                              const std::filesystem::path& path) {
  std::stable_sort(records.begin(), records.end(),
                   [](const ProvenanceRow& a, const ProvenanceRow& b) {
                     if (a.bug_id != b.bug_id) return a.bug_id < b.bug_id;
                     return a.start_byte < b.start_byte;
                   });
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  for (const auto& r : records) {
    nlohmann::json j;
    j["bug_id"] = r.bug_id;
    j["op"] = transform::op_name(r.op);
    j["start_byte"] = r.start_byte;
    j["end_byte"] = r.end_byte;
    j["status"] = r.applied ? "applied" : "skipped";
    if (!r.skip_reason.empty()) j["skip_reason"] = r.skip_reason;
    out << j.dump() << "\n";
  }
}

inline void export_summary(const BuildResult& result, size_t bugs_total,
                           uint64_t seed,
                           const std::filesystem::path& path) {
  nlohmann::json j;
  j["bugs_total"] = bugs_total;
  j["bugs_transformed"] = result.transformed.bugs.size();
  j["seed"] = seed;
  j["operators"] = nlohmann::json::object();
  for (const auto& [op, counts] : result.op_counts)
    j["operators"][op] = {{"applied", counts.first},
                          {"skipped", counts.second}};
  j["failures"] = nlohmann::json::array();
  for (const auto& f : result.failures)
    j["failures"].push_back({{"bug_id", f.bug_id}, {"error", f.error}});
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace jrecast::dataset
