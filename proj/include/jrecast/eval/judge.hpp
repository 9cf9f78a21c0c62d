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
#include <string>

#include "jrecast/dataset/manifest.hpp"
#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/syntax/parser.hpp"
#include "jrecast/verify/process.hpp"
#include "jrecast/verify/project.hpp"

namespace jrecast::eval {

enum class Verdict : uint8_t { Unparsed = 0, CompileFail = 1, TestFail = 2, Plausible = 3 };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Unparsed: return "unparsed";
    case Verdict::CompileFail: return "compile_fail";
    case Verdict::TestFail: return "test_fail";
    case Verdict::Plausible: return "plausible";
  }
  return "?";
}

inline Verdict verdict_from_name(const std::string& s) {
  if (s == "compile_fail") return Verdict::CompileFail;
  if (s == "test_fail") return Verdict::TestFail;
  if (s == "plausible") return Verdict::Plausible;
  return Verdict::Unparsed;
}

struct JudgeOptions {
  double build_timeout_sec = 300;
  double test_timeout_sec = 300;
  std::vector<std::pair<std::string, std::string>> extra_env;
};

/// Splices the candidate function over the bug's function span inside a
/// scratch copy of the checkout, then runs the project's build and test
/// commands. Timeouts count as test failures (with the timeout noted by the
/// caller), never as infrastructure errors: a patch that loops forever is a
/// bad patch.
inline Verdict judge_plausible(const dataset::BugCase& bug,
                               const std::string& candidate_fn,
                               const std::filesystem::path& workspace,
                               const JudgeOptions& opt = {},
                               std::string* note = nullptr) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::remove_all(workspace, ec);
  verify::detail::copy_tree(bug.checkout_dir, workspace);

  // the version under repair may be the transformed variant
  syntax::SourceUnit unit =
      syntax::SourceUnit::from_file(bug.source_path().string());
  syntax::Span fn_span;
  try {
    syntax::SyntaxTree tree = syntax::parse(unit);
    fn_span = tree.span(syntax::locate_function(tree, bug.function_name,
                                                bug.function_line_hint));
  } catch (const Error&) {
    return Verdict::CompileFail;  // the baseline itself is unusable
  }

  syntax::SourceUnit patched = syntax::render(
      unit, {{fn_span, candidate_fn}});
  {
    std::ofstream out(workspace / bug.file_relpath, std::ios::binary);
    if (!out) throw IoError("cannot write workspace file");
    out << patched.text();
  }

  verify::ProcessResult build = verify::run_command(
      bug.build_cmd, workspace.string(), opt.build_timeout_sec, "", opt.extra_env);
  if (build.timed_out || build.exit_code != 0) {
    if (note && build.timed_out) *note = "build timeout";
    return Verdict::CompileFail;
  }

  verify::ProcessResult test = verify::run_command(
      bug.test_cmd, workspace.string(), opt.test_timeout_sec, "", opt.extra_env);
  if (test.timed_out || test.exit_code != 0) {
    if (note && test.timed_out) *note = "timeout";
    return Verdict::TestFail;
  }
  return Verdict::Plausible;
}

}  // namespace jrecast::eval
