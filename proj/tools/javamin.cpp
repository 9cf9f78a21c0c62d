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

// javamin: deterministic runner for the self-contained Java subset used by
// the oracle corpus. Three modes:
//
//   javamin <file.java> [program args...]      run main(String[])
//   javamin --check <file.java>                parse + static sanity checks
//   javamin --parse <file.java>                lossless parse/render check
//   javamin --suite <tests.json> --file <f>    run a test suite; prints one
//                                              "PASS name(Class)" or
//                                              "FAIL name(Class)" line each
//
// Exit codes: program exit (run mode), 0/1 (check, parse and suite modes),
// 65 usage/parse failure, 70 unsupported construct.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "jrecast/interp/interpreter.hpp"
#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/parser.hpp"

using jrecast::interp::RunResult;
using nlohmann::json;

namespace {

int do_run(const std::string& file, const std::vector<std::string>& args) {
  jrecast::syntax::SourceUnit unit;
  try {
    unit = jrecast::syntax::SourceUnit::from_file(file);
  } catch (const jrecast::Error& e) {
    std::cerr << "javamin: " << e.what() << "\n";
    return 66;
  }
  RunResult r = jrecast::interp::run_program(unit, args);
  std::fwrite(r.out.data(), 1, r.out.size(), stdout);
  std::fwrite(r.err.data(), 1, r.err.size(), stderr);
  return r.exit_code;
}

int do_parse(const std::string& file) {
  try {
    auto unit = jrecast::syntax::SourceUnit::from_file(file);
    auto tree = jrecast::syntax::parse(unit);
    auto back = jrecast::syntax::render(tree, {});
    if (back.text() != unit.text()) {
      std::cerr << file << ": render(parse(f)) differs from f\n";
      return 1;
    }
    return 0;
  } catch (const jrecast::Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 1;
  }
}

int do_check(const std::string& file) {
  try {
    auto tree = jrecast::syntax::parse_file(file);
    auto problems = jrecast::interp::static_check(tree);
    for (const auto& p : problems) std::cerr << file << ": " << p << "\n";
    return problems.empty() ? 0 : 1;
  } catch (const jrecast::Error& e) {
    std::cerr << file << ": " << e.what() << "\n";
    return 1;
  }
}

int do_suite(const std::string& suite_path, const std::string& file) {
  std::ifstream in(suite_path);
  if (!in) {
    std::cerr << "javamin: cannot open " << suite_path << "\n";
    return 66;
  }
  json suite;
  try {
    in >> suite;
  } catch (const std::exception& e) {
    std::cerr << "javamin: bad suite json: " << e.what() << "\n";
    return 65;
  }
  jrecast::syntax::SourceUnit unit;
  std::string cls = "Main";
  try {
    unit = jrecast::syntax::SourceUnit::from_file(file);
    auto tree = jrecast::syntax::parse(unit);
    cls = jrecast::interp::Program(tree).class_name();
  } catch (const jrecast::Error& e) {
    // every case fails when the program does not even parse
    for (const auto& c : suite.value("cases", json::array()))
      std::cout << "FAIL " << c.value("name", "case") << "(" << cls << ")\n";
    std::cerr << "javamin: " << e.what() << "\n";
    return 1;
  }
  int failures = 0;
  for (const auto& c : suite.value("cases", json::array())) {
    std::string name = c.value("name", "case");
    std::vector<std::string> args;
    for (const auto& a : c.value("args", json::array()))
      args.push_back(a.get<std::string>());
    RunResult r = jrecast::interp::run_program(unit, args);
    bool ok = r.exit_code == c.value("expected_exit", 0) &&
              r.out == c.value("expected_stdout", "");
    if (ok) {
      std::cout << "PASS " << name << "(" << cls << ")\n";
    } else {
      failures++;
      std::cout << "FAIL " << name << "(" << cls << ")\n";
      std::cerr << "  expected exit " << c.value("expected_exit", 0) << ", got "
                << r.exit_code << "\n";
      if (r.out != c.value("expected_stdout", ""))
        std::cerr << "  stdout mismatch (got " << r.out.size() << " bytes)\n";
      if (!r.err.empty()) std::cerr << "  stderr: " << r.err;
    }
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::cerr << "usage: javamin <file.java> [args...] | --check <file> | "
                 "--suite <tests.json> --file <file>\n";
    return 65;
  }
  if (args[0] == "--check") {
    if (args.size() != 2) {
      std::cerr << "javamin: --check takes one file\n";
      return 65;
    }
    return do_check(args[1]);
  }
  if (args[0] == "--parse") {
    if (args.size() != 2) {
      std::cerr << "javamin: --parse takes one file\n";
      return 65;
    }
    return do_parse(args[1]);
  }
  if (args[0] == "--suite") {
    std::string suite, file;
    for (size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--suite" && i + 1 < args.size()) suite = args[++i];
      else if (args[i] == "--file" && i + 1 < args.size()) file = args[++i];
    }
    if (suite.empty() || file.empty()) {
      std::cerr << "javamin: --suite requires --file\n";
      return 65;
    }
    return do_suite(suite, file);
  }
  return do_run(args[0], {args.begin() + 1, args.end()});
}
