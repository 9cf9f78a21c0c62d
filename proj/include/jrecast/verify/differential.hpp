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
#include <vector>

#include "jrecast/syntax/source.hpp"
#include "jrecast/verify/process.hpp"

namespace jrecast::verify {

/// How to execute a self-contained program for the differential oracle.
/// entry_command must contain the {file} placeholder; grid inputs are
/// appended as shell-quoted arguments.
struct ExecProbe {
  struct Input {
    std::vector<std::string> args;
    std::string stdin_bytes;
  };
  std::string entry_command;
  std::vector<Input> grid;
  double timeout_sec = 30.0;
};

enum class GridVerdict { Equal, Different, Timeout, InfraFailure };

inline const char* verdict_name(GridVerdict v) {
  switch (v) {
    case GridVerdict::Equal: return "equal";
    case GridVerdict::Different: return "different";
    case GridVerdict::Timeout: return "timeout";
    case GridVerdict::InfraFailure: return "infra-failure";
  }
  return "?";
}

struct DifferentialReport {
  std::vector<GridVerdict> verdicts;  // one per grid input
  std::vector<std::string> details;   // non-empty for non-Equal verdicts
  bool pass = false;                  // all Equal
};

namespace detail {

inline std::filesystem::path write_temp(const syntax::SourceUnit& unit,
                                        const std::filesystem::path& dir,
                                        const std::string& stem) {
  std::filesystem::path p = dir / (stem + ".java");
  std::ofstream out(p, std::ios::binary);
  out << unit.text();
  return p;
}

inline std::string substitute_file(const std::string& command,
                                   const std::string& path) {
  std::string out = command;
  size_t at = out.find("{file}");
  if (at == std::string::npos)
    throw CommandFailure("probe entry_command lacks {file} placeholder");
  while (at != std::string::npos) {
    out.replace(at, 6, shell_quote(path));
    at = out.find("{file}");
  }
  return out;
}

}  // namespace detail

/// Runs both programs on every grid input and compares observable behavior:
/// stdout bytes and exit status. Exit code 70 (the runner's unsupported-
/// construct code) from either side is an infrastructure failure rather than
/// a behavioral difference; like timeouts, it fails the check.
inline DifferentialReport differential_check(const syntax::SourceUnit& original,
                                             const syntax::SourceUnit& transformed,
                                             const ExecProbe& probe) {
  namespace fs = std::filesystem;
  if (probe.grid.empty()) throw Error("differential probe grid is empty");
  DifferentialReport report;
  fs::path dir = fs::temp_directory_path() /
                 ("jrecast-diff-" + std::to_string(::getpid()) + "-" +
                  std::to_string(reinterpret_cast<uintptr_t>(&report) & 0xFFFF));
  fs::create_directories(dir);
  fs::path a = detail::write_temp(original, dir, "original");
  fs::path b = detail::write_temp(transformed, dir, "transformed");

  report.pass = true;
  for (const auto& input : probe.grid) {
    std::string suffix;
    for (const auto& arg : input.args) suffix += " " + shell_quote(arg);
    ProcessResult ra = run_command(
        detail::substitute_file(probe.entry_command, a.string()) + suffix, "",
        probe.timeout_sec, input.stdin_bytes);
    ProcessResult rb = run_command(
        detail::substitute_file(probe.entry_command, b.string()) + suffix, "",
        probe.timeout_sec, input.stdin_bytes);
    GridVerdict v;
    std::string detail;
    if (ra.timed_out || rb.timed_out) {
      v = GridVerdict::Timeout;
      detail = "timeout";
    } else if (ra.exit_code == 70 || rb.exit_code == 70) {
      v = GridVerdict::InfraFailure;
      detail = ra.exit_code == 70 ? ra.err : rb.err;
    } else if (ra.out == rb.out && ra.exit_code == rb.exit_code) {
      v = GridVerdict::Equal;
    } else {
      v = GridVerdict::Different;
      detail = "exit " + std::to_string(ra.exit_code) + " vs " +
               std::to_string(rb.exit_code);
      if (ra.out != rb.out) detail += "; stdout differs";
    }
    if (v != GridVerdict::Equal) report.pass = false;
    report.verdicts.push_back(v);
    report.details.push_back(detail);
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  return report;
}

}  // namespace jrecast::verify
