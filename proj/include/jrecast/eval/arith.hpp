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

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "jrecast/support/error.hpp"

namespace jrecast::eval {

class ZeroBaseline : public Error {
 public:
  explicit ZeroBaseline(const std::string& m) : Error(m) {}
};

/// Percentages are handled in centi-percent (two implied decimals) so the
/// published table values reproduce exactly. Rounding is half-up, away from
/// zero for negative values.
namespace detail {

inline int64_t ratio_centi(int64_t numer, int64_t denom) {
  // round(10000 * numer / denom) with half-away-from-zero, in integers
  int64_t scaled = numer * 10000;
  int64_t q = scaled / denom;
  int64_t rem = scaled % denom;
  if (rem != 0 && 2 * std::abs(rem) >= std::abs(denom))
    q += (scaled < 0) == (denom < 0) ? 1 : -1;
  return q;
}

inline int64_t round_centi(double percent) {
  return static_cast<int64_t>(std::llround(percent * 100.0));
}

}  // namespace detail

/// 100 * (orig - trans) / orig, half-up to two decimals.
/// Aggregate rows must be computed from summed counts, not from averaged
/// percentages; callers pass the totals here.
inline double compute_decline(int64_t orig, int64_t trans) {
  if (orig == 0) throw ZeroBaseline("decline with zero baseline");
  return detail::ratio_centi(orig - trans, orig) / 100.0;
}

/// 100 * (enriched - base) / base, half-up, sign preserved.
inline double compute_improvement(int64_t base, int64_t enriched) {
  if (base == 0) throw ZeroBaseline("improvement with zero baseline");
  return detail::ratio_centi(enriched - base, base) / 100.0;
}

/// Overloads for fractional counts (average rows carry two decimals).
inline double compute_decline(double orig, double trans) {
  if (orig == 0) throw ZeroBaseline("decline with zero baseline");
  return detail::round_centi(100.0 * (orig - trans) / orig) / 100.0;
}

inline double compute_improvement(double base, double enriched) {
  if (base == 0) throw ZeroBaseline("improvement with zero baseline");
  return detail::round_centi(100.0 * (enriched - base) / base) / 100.0;
}

/// "47.69" — exactly two decimals.
inline std::string format_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

/// "+29.41" / "-3.50" — explicit sign, two decimals.
inline std::string format_signed_pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%+.2f", v);
  return buf;
}

}  // namespace jrecast::eval
