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

// The fixed bug pair behind the prompt golden files. Any change here
// invalidates tests/golden/ (regenerate with UPDATE_GOLDENS=1).

#pragma once

#include <filesystem>

#include "jrecast/dataset/manifest.hpp"

namespace testsupport {

inline jrecast::dataset::BugCase golden_bug_a(const std::filesystem::path& test_dir) {
  jrecast::dataset::BugCase b;
  b.bug_id = "calc-1";
  b.project = "calcproj";
  b.checkout_dir = (test_dir / "fixtures/promptproj/bugA").string();
  b.file_relpath = "src/Calc.java";
  b.function_name = "clampedMean";
  b.function_line_hint = 6;
  b.buggy_lines = {11};
  b.bug_report = jrecast::dataset::BugReport{
      "clampedMean returns values far above the cap",
      "For any non-trivial sample array the mean comes back orders of "
      "magnitude too large, e.g. clampedMean(new int[]{2, 4}, 10) gives 10 "
      "instead of 3. Looks like the total is scaled the wrong way before "
      "clamping."};
  b.trigger_tests = {jrecast::dataset::TriggerTest{
      "testSmallArray(CalcTest)",
      "public void testSmallArray() {\n"
      "    assertEquals(3, new Calc().clampedMean(new int[]{2, 4}, 10));\n"
      "}",
      "expected:<3> but was:<10>"}};
  b.build_cmd = "true";
  b.test_cmd = "true";
  b.developer_patch =
      "int clampedMean(int[] values, int hi) {\n"
      "        int total = 0;\n"
      "        for (int i = 0; i < values.length; i++) {\n"
      "            total += values[i];\n"
      "        }\n"
      "        int mean = total / values.length;\n"
      "        if (mean > hi) {\n"
      "            mean = hi;\n"
      "        }\n"
      "        return mean;\n"
      "    }";
  return b;
}

inline jrecast::dataset::BugCase golden_bug_b(const std::filesystem::path& test_dir) {
  jrecast::dataset::BugCase b;
  b.bug_id = "util-2";
  b.project = "calcproj";
  b.checkout_dir = (test_dir / "fixtures/promptproj/bugB").string();
  b.file_relpath = "src/Util.java";
  b.function_name = "isBlank";
  b.function_line_hint = 3;
  b.buggy_lines = {4};
  b.build_cmd = "true";
  b.test_cmd = "true";
  b.developer_patch =
      "static boolean isBlank(String s) {\n"
      "        return s.trim().length() == 0;\n"
      "    }";
  return b;
}

}  // namespace testsupport
