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

#include <memory>
#include <string>
#include <vector>

#include "jrecast/syntax/bindings.hpp"
#include "jrecast/syntax/edit.hpp"
#include "jrecast/syntax/navigate.hpp"
#include "jrecast/syntax/parser.hpp"
#include "jrecast/transform/dead_code.hpp"
#include "jrecast/transform/loops.hpp"
#include "jrecast/transform/name_provider.hpp"
#include "jrecast/transform/negate.hpp"
#include "jrecast/transform/record.hpp"
#include "jrecast/transform/rename.hpp"
#include "jrecast/transform/switch_lowering.hpp"

namespace jrecast::transform {

struct FunctionLocator {
  std::string name;
  int line_hint = 1;
};

struct PipelineResult {
  syntax::SourceUnit output;
  TransformRecord record;
  std::vector<syntax::Span> synthetic_spans;  // in output coordinates
  std::vector<syntax::OffsetMap> stage_maps;  // one per stage that edited
  std::vector<syntax::Span> opaque_regions;   // in input coordinates
  syntax::Span function_span_before{};
  syntax::Span function_span_after{};

  /// Maps a byte offset of the input through every applied stage.
  uint32_t map_offset(uint32_t offset) const {
    for (const auto& m : stage_maps) offset = m.map(offset);
    return offset;
  }

  /// True if any stage rewrote the byte at this input offset.
  bool offset_rewritten(uint32_t offset) const {
    for (const auto& m : stage_maps) {
      if (m.was_rewritten(offset)) return true;
      offset = m.map(offset);
    }
    return false;
  }
};

// Applies the enabled operators in the fixed order T1 -> T2 -> T3 -> T4 ->
// T5, re-parsing between stages so each stage sees the previous rewrites as
// ordinary syntax. Spans injected by T4 travel forward as synthetic marks so
// T5 leaves the dead code alone. All edits stay inside the target function;
// identical (input, config) yields identical bytes and an identical record.
inline PipelineResult transform_pipeline(const syntax::SourceUnit& input,
                                         const FunctionLocator& where,
                                         const TransformConfig& config,
                                         std::string bug_id = "",
                                         NameProvider* provider = nullptr) {
  PipelineResult result{input, TransformRecord{std::move(bug_id), {}}, {}, {},
                        {}, {}, {}};

  // input must parse; failures here are the caller's problem, not a stage's
  {
    syntax::SyntaxTree tree = syntax::parse(input);
    result.opaque_regions = tree.opaque_regions();
    result.function_span_before =
        tree.span(syntax::locate_function(tree, where.name, where.line_hint));
  }

  std::unique_ptr<NameProvider> owned_provider;
  if (!provider) {
    owned_provider = make_deterministic_provider(config.seed);
    provider = owned_provider.get();
  }

  syntax::SourceUnit current = input;
  int line_hint = where.line_hint;
  std::vector<syntax::Span> synthetic;
  std::string last_stage;

  for (Op op : kAllOps) {
    if (!config.enabled(op)) continue;

    syntax::SyntaxTree tree = [&] {
      try {
        return syntax::parse(current);
      } catch (const Error& e) {
        throw StageParseFailure(last_stage.empty() ? "input" : last_stage,
                                e.what());
      }
    }();
    syntax::NodeId fn = syntax::locate_function(tree, where.name, line_hint);
    tree.mark_synthetic(synthetic);
    syntax::Span fn_span = tree.span(fn);

    syntax::EditScript edits;
    std::vector<syntax::Span> new_synthetic;
    switch (op) {
      case Op::T1: {
        syntax::BindingTable bt = syntax::resolve_bindings(tree, fn);
        edits = t1_rename(tree, fn, bt, *provider, result.record);
        break;
      }
      case Op::T2:
        edits = t2_loops(tree, fn, result.record);
        break;
      case Op::T3: {
        std::set<std::string> taken;
        edits = t3_switch(tree, fn, taken, result.record);
        break;
      }
      case Op::T4: {
        DeadCodeResult dc =
            t4_dead_code(tree, fn, config.max_dead_blocks, result.record);
        edits = std::move(dc.edits);
        new_synthetic = std::move(dc.synthetic_spans);
        break;
      }
      case Op::T5:
        edits = t5_double_negate(tree, fn, result.record);
        break;
    }
    last_stage = op_name(op);
    if (edits.empty()) {
      result.synthetic_spans = synthetic;
      continue;
    }

    for (const auto& e : edits) {
      if (e.span.begin < fn_span.begin || e.span.end > fn_span.end)
        throw Error(std::string("pipeline bug: ") + op_name(op) +
                    " edited outside the target function");
    }

    uint32_t hint_offset = current.offset_of_line(line_hint);
    syntax::SourceUnit next = syntax::render(current, edits);
    syntax::OffsetMap om(edits);

    std::vector<syntax::Span> carried;
    for (const auto& s : synthetic) carried.push_back(om.map(s));
    carried.insert(carried.end(), new_synthetic.begin(), new_synthetic.end());
    synthetic = std::move(carried);

    line_hint = next.line_of(om.map(hint_offset));
    result.stage_maps.push_back(std::move(om));
    current = std::move(next);
  }

  // the pipeline's own output must re-parse; anything else is a bug here
  try {
    syntax::SyntaxTree check = syntax::parse(current);
    result.function_span_after =
        check.span(syntax::locate_function(check, where.name, line_hint));
  } catch (const Error& e) {
    throw StageParseFailure(last_stage.empty() ? "input" : last_stage, e.what());
  }

  result.synthetic_spans = synthetic;
  result.output = std::move(current);
  return result;
}

}  // namespace jrecast::transform
