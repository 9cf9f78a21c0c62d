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

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "jrecast/syntax/navigate.hpp"
#include "jrecast/syntax/tree.hpp"

namespace jrecast::syntax {

enum class BindingKind { Local, Parameter };

struct BindingEntry {
  NodeId decl_node = kNoNode;   // Param or Declarator
  uint32_t name_tok = kNoTok;
  std::string name;
  BindingKind kind = BindingKind::Local;
  std::vector<NodeId> refs;     // Ident nodes bound to this declaration
};

struct BindingDiagnostic {
  std::string name;
  uint32_t offset = 0;  // byte offset of the occurrence
  std::string reason;
};

/// Locals and parameters of one function with their reference sites.
/// Names that cannot be resolved purely syntactically are excluded and
/// reported in `diagnostics` rather than guessed at.
struct BindingTable {
  std::vector<BindingEntry> entries;
  std::vector<BindingDiagnostic> diagnostics;
};

namespace detail {

class BindingResolver {
 public:
  BindingResolver(const SyntaxTree& tree, NodeId fn) : tree_(tree), fn_(fn) {}

  BindingTable run() {
    push_scope();
    const Node& fn = tree_.node(fn_);
    for (NodeId k : fn.kids) {
      const Node& kn = tree_.node(k);
      if (kn.kind == NodeKind::Param && !kn.opaque)
        declare(k, BindingKind::Parameter);
    }
    NodeId body = function_body(tree_, fn_);
    if (body != kNoNode) visit(body);
    pop_scope();

    BindingTable out;
    for (auto& e : all_) {
      if (poisoned_.count(e.entry.name)) {
        out.diagnostics.push_back(
            {e.entry.name, tree_.span(e.entry.decl_node).begin,
             "excluded: name also occurs in a region the resolver cannot "
             "analyze"});
      } else {
        out.entries.push_back(std::move(e.entry));
      }
    }
    out.diagnostics.insert(out.diagnostics.end(), diags_.begin(), diags_.end());
    return out;
  }

 private:
  struct Slot {
    BindingEntry entry;
  };

  void push_scope() { scopes_.emplace_back(); }
  void pop_scope() { scopes_.pop_back(); }

  void declare(NodeId decl, BindingKind kind) {
    const Node& n = tree_.node(decl);
    if (n.name_tok == kNoTok) return;
    std::string name(tree_.tok_text(n.name_tok));
    all_.push_back(Slot{BindingEntry{decl, n.name_tok, name, kind, {}}});
    scopes_.back()[name] = all_.size() - 1;
  }

  // Innermost visible declaration of `name`, or npos.
  size_t lookup(const std::string& name) const {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    return static_cast<size_t>(-1);
  }

  /// Conservative treatment of regions whose resolution rules we cannot
  /// replicate syntactically (anonymous/local class bodies, opaque nodes):
  /// every identifier token in the region that matches a visible binding
  /// poisons that name, excluding it from the table entirely.
  void poison_region(NodeId id) {
    const Node& n = tree_.node(id);
    for (uint32_t i = n.tok_begin; i <= n.tok_end; ++i) {
      if (tree_.tok(i).kind != TokKind::Ident) continue;
      std::string name(tree_.tok_text(i));
      if (lookup(name) != static_cast<size_t>(-1)) poisoned_.insert(name);
    }
  }

  void visit_all(const std::vector<NodeId>& kids) {
    for (NodeId k : kids) visit(k);
  }

  void visit(NodeId id) {
    const Node& n = tree_.node(id);
    if (n.opaque) {
      poison_region(id);
      return;
    }
    switch (n.kind) {
      case NodeKind::Ident: {
        std::string name(tree_.tok_text(n.name_tok));
        size_t slot = lookup(name);
        if (slot == static_cast<size_t>(-1)) {
          diags_.push_back({name, tree_.span(id).begin,
                            "unresolved: not a local or parameter"});
        } else {
          all_[slot].entry.refs.push_back(id);
        }
        return;
      }
      case NodeKind::Block: {
        push_scope();
        visit_all(n.kids);
        pop_scope();
        return;
      }
      case NodeKind::LocalVarDecl: {
        for (NodeId d : n.kids) {
          declare(d, BindingKind::Local);
          visit_all(tree_.node(d).kids);  // initializer
        }
        return;
      }
      case NodeKind::BasicFor: {
        push_scope();
        visit_all(n.kids);
        pop_scope();
        return;
      }
      case NodeKind::EnhancedFor: {
        // kids: Param, iterable, body; the variable is not visible in the
        // iterable expression
        visit(n.kids[1]);
        push_scope();
        declare(n.kids[0], BindingKind::Local);
        visit(n.kids[2]);
        pop_scope();
        return;
      }
      case NodeKind::Param: {
        declare(id, BindingKind::Local);  // pattern variable / resource form
        return;
      }
      case NodeKind::Try: {
        push_scope();  // resources scope over the try block
        size_t i = 0;
        for (; i < n.kids.size(); ++i) {
          const Node& k = tree_.node(n.kids[i]);
          if (k.kind == NodeKind::Block) break;
          visit(n.kids[i]);
        }
        if (i < n.kids.size()) visit(n.kids[i++]);
        pop_scope();
        for (; i < n.kids.size(); ++i) visit(n.kids[i]);
        return;
      }
      case NodeKind::CatchClause: {
        push_scope();
        declare(n.kids[0], BindingKind::Parameter);
        visit(n.kids[1]);
        pop_scope();
        return;
      }
      case NodeKind::Switch: {
        visit(n.kids[0]);
        push_scope();  // all case groups share one scope
        for (size_t i = 1; i < n.kids.size(); ++i) visit(n.kids[i]);
        pop_scope();
        return;
      }
      case NodeKind::Lambda: {
        push_scope();
        for (size_t i = 0; i + 1 < n.kids.size(); ++i)
          declare(n.kids[i], BindingKind::Parameter);
        visit(n.kids.back());
        pop_scope();
        return;
      }
      case NodeKind::InstanceOf: {
        visit(n.kids[0]);
        if (n.kids.size() > 1) declare(n.kids[1], BindingKind::Local);
        return;
      }
      case NodeKind::ClassBody:
      case NodeKind::LocalTypeDecl: {
        poison_region(id);
        return;
      }
      case NodeKind::NewObject: {
        for (NodeId k : n.kids) {
          if (tree_.node(k).kind == NodeKind::ClassBody) poison_region(k);
          else visit(k);
        }
        return;
      }
      case NodeKind::MethodRef: {
        visit_all(n.kids);  // the name after '::' is a token, never a binding
        return;
      }
      default:
        visit_all(n.kids);
        return;
    }
  }

  const SyntaxTree& tree_;
  NodeId fn_;
  std::vector<std::unordered_map<std::string, size_t>> scopes_;
  std::vector<Slot> all_;
  std::unordered_set<std::string> poisoned_;
  std::vector<BindingDiagnostic> diags_;
};

}  // namespace detail

/// Resolves every local and parameter declared inside the function, binding
/// references by the innermost-declaration rule. Fields, methods, and type
/// names never appear: simple names that do not resolve to a local
/// declaration are excluded (with a diagnostic), never guessed.
inline BindingTable resolve_bindings(const SyntaxTree& tree, NodeId fn) {
  return detail::BindingResolver(tree, fn).run();
}

}  // namespace jrecast::syntax
