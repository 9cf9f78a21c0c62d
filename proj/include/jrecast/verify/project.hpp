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
#include <map>
#include <mutex>
#include <regex>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "jrecast/dataset/manifest.hpp"
#include "jrecast/verify/process.hpp"

namespace jrecast::verify {

/// Compile result plus which tests passed and failed, the paper's notion of
/// observable project behavior.
struct OutcomeSignature {
  bool compiled = false;
  std::set<std::string> passing;
  std::set<std::string> failing;
  std::map<std::string, std::string> failure_messages;  // first line per test

  friend bool operator==(const OutcomeSignature& a, const OutcomeSignature& b) {
    return a.compiled == b.compiled && a.passing == b.passing &&
           a.failing == b.failing;
  }
};

/// How test ids are recovered from command output. The default matches
/// `testName(ClassName)` ids on lines carrying a PASS or FAIL marker.
struct TestOutputParser {
  std::string id_pattern = R"(([A-Za-z_$][A-Za-z0-9_$]*\([A-Za-z0-9_$.]*\)))";
  std::string pass_marker = "PASS";
  std::string fail_marker = "FAIL";

  void parse(const std::string& output, OutcomeSignature& sig) const {
    std::regex id_re(id_pattern);
    size_t start = 0;
    while (start <= output.size()) {
      size_t nl = output.find('\n', start);
      std::string line = output.substr(
          start, nl == std::string::npos ? std::string::npos : nl - start);
      std::smatch m;
      if (std::regex_search(line, m, id_re)) {
        std::string id = m[1];
        if (line.find(fail_marker) != std::string::npos) {
          sig.failing.insert(id);
          sig.failure_messages.emplace(id, line);
        } else if (line.find(pass_marker) != std::string::npos) {
          sig.passing.insert(id);
        }
      }
      if (nl == std::string::npos) break;
      start = nl + 1;
    }
  }
};

struct VerifyOptions {
  double build_timeout_sec = 300;
  double test_timeout_sec = 300;
  TestOutputParser parser;
  std::vector<std::pair<std::string, std::string>> extra_env;
};

struct VerifyOutcome {
  bool equivalent = false;
  OutcomeSignature before;
  OutcomeSignature after;
  std::string infra_error;  // timeout or spawn failure; distinct from non-equivalence
};

namespace detail {

inline void copy_tree(const std::filesystem::path& from,
                      const std::filesystem::path& to) {
  std::filesystem::create_directories(to);
  std::filesystem::copy(from, to,
                        std::filesystem::copy_options::recursive |
                            std::filesystem::copy_options::overwrite_existing);
}

inline OutcomeSignature run_signature(const std::string& dir,
                                      const dataset::BugCase& bug,
                                      const VerifyOptions& opt,
                                      std::string& infra_error) {
  OutcomeSignature sig;
  ProcessResult build =
      run_command(bug.build_cmd, dir, opt.build_timeout_sec, "", opt.extra_env);
  if (build.timed_out) {
    infra_error = "build timeout";
    return sig;
  }
  sig.compiled = build.exit_code == 0;
  if (!sig.compiled) return sig;
  ProcessResult test =
      run_command(bug.test_cmd, dir, opt.test_timeout_sec, "", opt.extra_env);
  if (test.timed_out) {
    infra_error = "test timeout";
    return sig;
  }
  opt.parser.parse(test.out + "\n" + test.err, sig);
  return sig;
}

}  // namespace detail

/// The paper's project-level equivalence: both versions compile and the
/// passing/failing test sets are identical, which in particular means the
/// transformed bug still fails exactly its trigger tests. The transformed
/// version runs in a scratch copy of the checkout with the transformed file
/// spliced over the original.
inline VerifyOutcome verify_bug_case(const dataset::BugCase& bug,
                                     const std::filesystem::path& transformed_file,
                                     const VerifyOptions& opt = {}) {
  namespace fs = std::filesystem;
  VerifyOutcome out;
  if (!fs::exists(bug.checkout_dir))
    throw CommandFailure("checkout_dir missing: " + bug.checkout_dir);
  if (!fs::exists(transformed_file))
    throw CommandFailure("transformed file missing: " + transformed_file.string());

  out.before = detail::run_signature(bug.checkout_dir, bug, opt, out.infra_error);
  if (!out.infra_error.empty()) return out;

  fs::path scratch = fs::temp_directory_path() /
                     ("jrecast-verify-" + bug.bug_id + "-" +
                      std::to_string(::getpid()));
  std::error_code ec;
  fs::remove_all(scratch, ec);
  detail::copy_tree(bug.checkout_dir, scratch);
  fs::copy_file(transformed_file, scratch / bug.file_relpath,
                fs::copy_options::overwrite_existing);

  out.after = detail::run_signature(scratch.string(), bug, opt, out.infra_error);
  fs::remove_all(scratch, ec);
  if (!out.infra_error.empty()) return out;

  out.equivalent = out.before.compiled && out.after.compiled &&
                   out.before == out.after;
  return out;
}

struct BatchVerifyEntry {
  std::string bug_id;
  bool equivalent = false;
  std::string error;  // infrastructure error or exception text
};

struct BatchVerifyReport {
  std::vector<BatchVerifyEntry> entries;
  std::vector<std::string> exclusion_list;  // non-equivalent bugs, for review
};

/// Verifies every bug with bounded process parallelism. Failures are
/// isolated per bug; the run always completes. The exclusion list mirrors
/// the paper's manual-inspection backstop: a human decides what to do with
/// non-equivalent cases, the harness only flags them.
inline BatchVerifyReport batch_verify(
    const dataset::Manifest& manifest, const std::filesystem::path& out_tree,
    int parallelism, const VerifyOptions& opt = {}) {
  BatchVerifyReport report;
  report.entries.resize(manifest.bugs.size());
  std::atomic<size_t> next{0};
  int workers = std::max(1, parallelism);

  auto work = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= manifest.bugs.size()) return;
      const auto& bug = manifest.bugs[i];
      BatchVerifyEntry entry;
      entry.bug_id = bug.bug_id;
      try {
        std::filesystem::path transformed =
            bug.transformed_file ? std::filesystem::path(*bug.transformed_file)
                                 : out_tree / bug.bug_id / bug.file_relpath;
        VerifyOutcome v = verify_bug_case(bug, transformed, opt);
        entry.equivalent = v.equivalent;
        entry.error = v.infra_error;
      } catch (const std::exception& e) {
        entry.error = e.what();
      }
      report.entries[i] = std::move(entry);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  for (const auto& e : report.entries)
    if (!e.equivalent) report.exclusion_list.push_back(e.bug_id);
  return report;
}

}  // namespace jrecast::verify
