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

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace jrecast::transform {

enum class Op : uint8_t { T1, T2, T3, T4, T5 };

inline const char* op_name(Op op) {
  switch (op) {
    case Op::T1: return "T1";
    case Op::T2: return "T2";
    case Op::T3: return "T3";
    case Op::T4: return "T4";
    case Op::T5: return "T5";
  }
  return "?";
}

inline constexpr std::array<Op, 5> kAllOps = {Op::T1, Op::T2, Op::T3, Op::T4,
                                              Op::T5};

/// One provenance row: what an operator did (or declined to do) at a span.
/// Offsets are relative to the text the operator stage received.
struct EditRecord {
  Op op = Op::T1;
  uint32_t start_byte = 0;
  uint32_t end_byte = 0;
  std::string summary;      // human-oriented description of the rewrite
  bool applied = true;
  std::string skip_reason;  // non-empty iff !applied
};

/// Provenance ledger for one bug case, in pipeline order.
struct TransformRecord {
  std::string bug_id;
  std::vector<EditRecord> edits;

  void applied(Op op, uint32_t start, uint32_t end, std::string summary) {
    edits.push_back({op, start, end, std::move(summary), true, ""});
  }
  void skipped(Op op, uint32_t start, uint32_t end, std::string reason) {
    edits.push_back({op, start, end, "", false, std::move(reason)});
  }

  std::map<std::string, std::pair<int, int>> counts_per_op() const {
    std::map<std::string, std::pair<int, int>> out;  // op -> {applied, skipped}
    for (const auto& e : edits) {
      auto& c = out[op_name(e.op)];
      if (e.applied) c.first++;
      else c.second++;
    }
    return out;
  }
};

struct TransformConfig {
  uint64_t seed = 0;
  std::vector<Op> enabled_ops{kAllOps.begin(), kAllOps.end()};
  int max_dead_blocks = 3;
  enum class Provider { Deterministic, ExternalEndpoint } rename_provider =
      Provider::Deterministic;
  std::string endpoint_url;   // used by the external name provider only
  std::string endpoint_model;

  bool enabled(Op op) const {
    for (Op e : enabled_ops)
      if (e == op) return true;
    return false;
  }
};

}  // namespace jrecast::transform
