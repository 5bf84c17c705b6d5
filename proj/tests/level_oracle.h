// Copyright 2026 The nary-kernel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Enumeration oracle for the level algebra: levels built from three heads
// with small offsets, compared against their value under every assignment
// of small naturals to the heads.

#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "nary/level.h"

namespace nary::testing {

inline const std::array<std::string, 3> kHeads = {"a", "b", "c"};
constexpr unsigned kMaxOffset = 3;

using Assignment = std::array<unsigned, 3>;

/// Constants 0..3 and every head with offset 0..3.
inline std::vector<LevelNF> level_universe() {
  std::vector<LevelNF> out;
  for (unsigned k = 0; k <= kMaxOffset; ++k) out.push_back(LevelNF::constant(k));
  for (const auto& h : kHeads) {
    for (unsigned k = 0; k <= kMaxOffset; ++k) out.push_back(LevelNF::atom(h, k));
  }
  return out;
}

inline std::vector<Assignment> assignments() {
  std::vector<Assignment> out;
  for (unsigned x = 0; x <= kMaxOffset; ++x)
    for (unsigned y = 0; y <= kMaxOffset; ++y)
      for (unsigned z = 0; z <= kMaxOffset; ++z) out.push_back({x, y, z});
  return out;
}

inline unsigned value_of(const LevelNF& l, const Assignment& env) {
  unsigned v = l.constant_part();
  for (const auto& [key, atom] : l.atoms()) {
    const auto i = std::find(kHeads.begin(), kHeads.end(), key) - kHeads.begin();
    v = std::max(v, env[static_cast<std::size_t>(i)] + atom.offset);
  }
  return v;
}

/// Equal under every assignment.
inline bool same_value(const LevelNF& x, const LevelNF& y) {
  for (const auto& env : assignments()) {
    if (value_of(x, env) != value_of(y, env)) return false;
  }
  return true;
}

/// One named law instance: both sides must be canonically and
/// semantically equal.
struct LawCheck {
  std::size_t instances = 0;
  std::vector<std::string> failures;

  void expect(const std::string& law, const LevelNF& lhs, const LevelNF& rhs) {
    ++instances;
    if (!nf_equal(lhs, rhs) || !same_value(lhs, rhs)) {
      failures.push_back(law + ": " + lhs.to_string() + " vs " + rhs.to_string());
    }
  }
};

/// Runs every law over all triples of the universe.
inline LawCheck check_level_laws() {
  LawCheck c;
  const auto u = level_universe();
  for (const auto& x : u) {
    c.expect("idempotence", nf_max(x, x), x);
    c.expect("unit", nf_max(x, LevelNF::constant(0)), x);
    for (unsigned k = 0; k <= kMaxOffset; ++k) {
      c.expect("subsumption", nf_max(nf_add(x, k), x), nf_add(x, k));
    }
    for (const auto& y : u) {
      c.expect("commutativity", nf_max(x, y), nf_max(y, x));
      c.expect("suc-distributes", nf_suc(nf_max(x, y)),
               nf_max(nf_suc(x), nf_suc(y)));
      c.expect("absorption", nf_max(x, nf_max(x, y)), nf_max(x, y));
      // Canonical forms are complete: syntactic equality of normal forms
      // coincides with semantic equality.
      ++c.instances;
      if (nf_equal(x, y) != same_value(x, y)) {
        c.failures.push_back("completeness: " + x.to_string() + " vs " +
                             y.to_string());
      }
      for (const auto& z : u) {
        const LevelNF xy = nf_max(x, y);
        c.expect("associativity", nf_max(xy, z), nf_max(x, nf_max(y, z)));
        for (unsigned k = 1; k <= 2; ++k) {
          c.expect("add-distributes", nf_add(nf_max(xy, z), k),
                   nf_max(nf_add(x, k), nf_max(nf_add(y, k), nf_add(z, k))));
        }
      }
    }
  }
  const LevelNF a = LevelNF::atom("a");
  c.expect("suc-of-max-zero", nf_suc(nf_max(a, LevelNF::constant(0))), nf_suc(a));
  return c;
}

}  // namespace nary::testing
