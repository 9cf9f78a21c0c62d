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
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "jrecast/syntax/lexer.hpp"

namespace jrecast::transform {

/// Supplies replacement identifiers for variable renaming. Implementations
/// must produce valid identifiers that are not reserved words; the caller
/// supplies the set of names that must be avoided.
class NameProvider {
 public:
  virtual ~NameProvider() = default;

  /// A name for the decl_index-th declaration of the current function that
  /// avoids everything in `taken`.
  virtual std::string fresh(size_t decl_index,
                            const std::set<std::string>& taken) = 0;
};

/// Seeded provider drawing from a pool of naturalistic base names, so the
/// renamed code still reads like code. Identical (seed, declaration index,
/// taken set) always yields the identical name. When the pool is exhausted a
/// numeric suffix is appended; this cannot fail.
class DeterministicNameProvider : public NameProvider {
 public:
  explicit DeterministicNameProvider(uint64_t seed) {
    perm_.resize(pool().size());
    for (size_t i = 0; i < perm_.size(); ++i) perm_[i] = i;
    uint64_t state = seed * 0x9E3779B97F4A7C15ULL + 1;
    for (size_t i = perm_.size() - 1; i > 0; --i) {
      state = splitmix(state);
      std::swap(perm_[i], perm_[state % (i + 1)]);
    }
  }

  std::string fresh(size_t decl_index, const std::set<std::string>& taken) override {
    const auto& p = pool();
    for (size_t k = 0; k < p.size(); ++k) {
      const std::string& cand = p[perm_[(decl_index + k) % p.size()]];
      if (usable(cand, taken)) return cand;
    }
    const std::string& base = p[perm_[decl_index % p.size()]];
    for (int n = 2;; ++n) {
      std::string cand = base + std::to_string(n);
      if (usable(cand, taken)) return cand;
    }
  }

 private:
  static bool usable(const std::string& cand, const std::set<std::string>& taken) {
    return !taken.count(cand) && !syntax::java_keywords().count(cand);
  }

  static uint64_t splitmix(uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static const std::vector<std::string>& pool() {
    static const std::vector<std::string> names = {
        "value",  "result", "total",  "count",  "index",  "item",   "buffer",
        "offset", "length", "limit",  "cursor", "node",   "entry",  "key",
        "data",   "sum",    "flag",   "state",  "temp",   "items",  "name",
        "text",   "line",   "token",  "width",  "height", "depth",  "level",
        "size",   "pos",    "start",  "finish", "left",   "right",  "mid",
        "low",    "high",   "next",   "prev",   "first",  "last",   "head",
        "tail",   "cache",  "score",  "rate",   "step",   "delta",  "base",
        "scale",  "mask",   "bits",   "word",   "cell",   "row",    "col",
        "page",   "slot",   "rank",   "order",  "group",  "batch",  "probe",
        "accum"};
    return names;
  }

  std::vector<size_t> perm_;
};

inline std::unique_ptr<NameProvider> make_deterministic_provider(uint64_t seed) {
  return std::make_unique<DeterministicNameProvider>(seed);
}

}  // namespace jrecast::transform
