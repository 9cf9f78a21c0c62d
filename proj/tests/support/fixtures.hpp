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

// Shared helpers for tests that spawn the javamin runner or need a
// Defects4J-shaped scratch project on disk.

#pragma once

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "jrecast/dataset/manifest.hpp"

namespace testsupport {

/// Locates the javamin binary: the JAVAMIN env var (set by ctest), falling
/// back to the tools directory next to the test binary's build tree.
inline std::string javamin_path() {
  if (const char* env = std::getenv("JAVAMIN")) return env;
  namespace fs = std::filesystem;
  for (const char* rel : {"../tools/javamin", "tools/javamin", "./javamin"}) {
    std::error_code ec;
    fs::path p = fs::absolute(rel, ec);
    if (!ec && fs::exists(p)) return p.string();
  }
  return "javamin";
}

/// Exports JAVAMIN so `"$JAVAMIN" ...` command lines expand in child shells.
inline void export_javamin() {
  setenv("JAVAMIN", javamin_path().c_str(), 0);
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  out << text;
}

inline std::filesystem::path fresh_dir(const std::string& slug) {
  auto p = std::filesystem::temp_directory_path() /
           (slug + "-" + std::to_string(::getpid()));
  std::error_code ec;
  std::filesystem::remove_all(p, ec);
  std::filesystem::create_directories(p);
  return p;
}

inline const char* kBuggyAbsDiff =
    "public class Main {\n"
    "    static int absDiff(int a, int b) {\n"
    "        return a - b;\n"
    "    }\n"
    "\n"
    "    public static void main(String[] args) {\n"
    "        int a = Integer.parseInt(args[0]);\n"
    "        int b = Integer.parseInt(args[1]);\n"
    "        System.out.println(absDiff(a, b));\n"
    "    }\n"
    "}\n";

inline const char* kFixedAbsDiff =
    "static int absDiff(int a, int b) {\n"
    "        if (a > b) {\n"
    "            return a - b;\n"
    "        }\n"
    "        return b - a;\n"
    "    }";

/// A one-bug project in `dir`: src/Main.java with a sign bug in absDiff plus
/// a three-case suite where the b>a case is the trigger test.
inline jrecast::dataset::BugCase make_abs_diff_bug(
    const std::filesystem::path& dir, const std::string& bug_id = "mini-1") {
  export_javamin();
  write_file(dir / "src" / "Main.java", kBuggyAbsDiff);
  write_file(dir / "tests.json",
             R"({"cases":[
  {"name":"testPositive","args":["7","2"],"expected_stdout":"5\n"},
  {"name":"testNegative","args":["2","7"],"expected_stdout":"5\n"},
  {"name":"testZero","args":["3","3"],"expected_stdout":"0\n"}
]})");
  jrecast::dataset::BugCase bug;
  bug.bug_id = bug_id;
  bug.project = "mini";
  bug.checkout_dir = dir.string();
  bug.file_relpath = "src/Main.java";
  bug.function_name = "absDiff";
  bug.function_line_hint = 2;
  bug.buggy_lines = {3};
  bug.bug_report = jrecast::dataset::BugReport{
      "absDiff returns negative values",
      "Calling absDiff(2, 7) returns -5 but the distance between two values "
      "can never be negative. The subtraction ignores operand order."};
  bug.trigger_tests = {jrecast::dataset::TriggerTest{
      "testNegative(Main)",
      "public void testNegative() {\n    assertEquals(5, Main.absDiff(2, 7));\n}",
      "expected:<5> but was:<-5>"}};
  bug.build_cmd = "\"$JAVAMIN\" --check src/Main.java";
  bug.test_cmd = "\"$JAVAMIN\" --suite tests.json --file src/Main.java";
  bug.developer_patch = kFixedAbsDiff;
  return bug;
}

}  // namespace testsupport
