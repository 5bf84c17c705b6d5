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

// Acceptance harness: one PASS/FAIL line per acceptance criterion.

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <string>
#include <vector>

#include "level_oracle.h"
#include "roundtrip.h"
#include "test_support.h"

namespace {

using nary::DeclStatus;
using nary::testing::Checked;

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::vector<std::string> files_in(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<std::string> out;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.path().extension() == ".nry") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::unique_ptr<Checked> run(const std::string& path,
                             nary::Options opts = {}) {
  return nary::testing::check(nary::read_file(path), true, opts);
}

std::string base(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

Verdict unifier_problems() {
  Verdict v;
  auto files = files_in(nary::testing::corpus_path("unifier"));
  if (files.size() != 9) v.fail(fmt::format("{} files, want 9", files.size()));
  auto start = std::chrono::steady_clock::now();
  for (const auto& f : files) {
    auto c = run(f);
    if (c->exit_code != 0) v.fail(base(f) + " missed its expectation");
    if (base(f) == "nary-unsolved.nry") {
      int metas = 0, constraints = 0, unsolved = 0;
      for (const auto& r : c->reports) {
        if (r.status != DeclStatus::kUnsolved) continue;
        ++unsolved;
        metas += r.metas;
        constraints += r.constraints;
      }
      if (unsolved != 1 || metas != 2 || constraints != 1) {
        v.fail(fmt::format("nary-unsolved: {} metas, {} constraints", metas,
                           constraints));
      }
    }
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  if (secs >= 1.0) v.fail(fmt::format("took {:.2f}s", secs));
  if (v.pass) v.detail = fmt::format("{} files in {:.2f}s", files.size(), secs);
  return v;
}

Verdict all_ok(const std::string& rel, std::size_t at_least) {
  Verdict v;
  auto c = run(nary::testing::corpus_path(rel));
  if (c->reports.size() < at_least) {
    v.fail(fmt::format("{} declarations, want at least {}", c->reports.size(),
                       at_least));
  }
  for (const auto& r : c->reports) {
    if (r.status != DeclStatus::kOk) v.fail(nary::format_report(r));
  }
  if (v.pass) v.detail = fmt::format("{} declarations OK", c->reports.size());
  return v;
}

Verdict solutions_validate() {
  Verdict v;
  std::size_t metas = 0;
  for (const auto& f : files_in(NARY_CORPUS_DIR)) {
    auto c = run(f);
    metas += c->session.metas.meta_count();
    for (const auto& p : nary::validate(c->session)) v.fail(base(f) + ": " + p);
  }
  if (v.pass) v.detail = fmt::format("{} metas re-checked", metas);
  return v;
}

Verdict level_laws() {
  Verdict v;
  auto laws = nary::testing::check_level_laws();
  if (laws.instances < 4000) {
    v.fail(fmt::format("{} instances, want 4000", laws.instances));
  }
  if (!laws.failures.empty()) v.fail(laws.failures.front());
  if (v.pass) v.detail = fmt::format("{} instances", laws.instances);
  return v;
}

Verdict inversions_sound() {
  Verdict v;
  std::size_t events = 0, alternatives = 0;
  for (const auto& f : files_in(NARY_CORPUS_DIR)) {
    auto c = std::make_unique<Checked>();
    c->session.audit_inversions = true;
    std::ostringstream out;
    nary::Options o;
    o.prelude = NARY_PRELUDE_PATH;
    nary::load_prelude(c->session, o, out);
    nary::check_source(c->session, nary::read_file(f), o, out);
    for (const auto& e : c->session.inversions) {
      ++events;
      for (std::size_t i = 0; i < e.alternatives.size(); ++i) {
        ++alternatives;
        if (!e.alternative_failed[i]) {
          v.fail(fmt::format("{}: inverting {} at clause {} also admits "
                             "clause {}",
                             base(f), e.global, e.chosen + 1,
                             e.alternatives[i] + 1));
        }
      }
    }
  }
  if (events == 0) v.fail("no inversion fired");
  if (v.pass) {
    v.detail = fmt::format("{} inversions, {} alternatives refuted", events,
                           alternatives);
  }
  return v;
}

struct Mutation {
  const char* from;
  const char* to;
  const char* decl;
  const char* error;
};

Verdict robustness() {
  Verdict v;
  const Mutation mutations[] = {
      {"Arrows (suc n) as b = fst as -> Arrows n (snd as) b\n", "", "Arrows",
       "coverage error"},
      {"sup (suc n) ls = lmax (fst ls) (sup n (snd ls))\n", "", "sup",
       "coverage error"},
      {"sup zero ls = lzero\n", "sup zero ls = lzero\nsup n ls = lzero\n",
       "sup", "overlap error"},
      {"sup (suc n) ls = lmax (fst ls) (sup n (snd ls))",
       "sup (suc n) ls = lmax (fst ls) (sup (suc n) ls)", "sup",
       "termination error"},
  };
  const std::string prelude = nary::read_file(NARY_PRELUDE_PATH);
  for (const auto& m : mutations) {
    std::string text = prelude;
    auto at = text.find(m.from);
    if (at == std::string::npos) {
      v.fail(fmt::format("mutation site for {} not found", m.decl));
      continue;
    }
    text.replace(at, std::string(m.from).size(), m.to);
    auto c = nary::testing::check(text, false);
    const nary::DeclReport* r = c->report(m.decl);
    if (!r || r->status != DeclStatus::kTypeError ||
        r->message.find(m.error) == std::string::npos) {
      v.fail(fmt::format("mutated {} not rejected with {}", m.decl, m.error));
    }
  }
  int round_trips = 0;
  nary::Options traced;
  traced.trace_unify = true;
  traced.print_metas = true;
  for (const auto& f : files_in(NARY_CORPUS_DIR)) {
    auto a = run(f, traced);
    auto b = run(f, traced);
    if (a->output != b->output) v.fail(base(f) + ": output differs between runs");
    auto rt = nary::testing::round_trip_globals(a->session);
    round_trips += rt.checked;
    for (const auto& why : rt.failures) v.fail(base(f) + ": " + why);
  }
  if (v.pass) {
    v.detail = fmt::format("{} mutations rejected, {} round trips, "
                           "deterministic output",
                           std::size(mutations), round_trips);
  }
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, Verdict (*)()> criteria[] = {
      {"unifier problems", unifier_problems},
      {"arity polymorphism", [] { return all_ok("arity/arity.nry", 8); }},
      {"reduction behaviour",
       [] { return all_ok("reduction/reduction.nry", 1); }},
      {"solution validation", solutions_validate},
      {"level normal forms", level_laws},
      {"inversion soundness", inversions_sound},
      {"robustness", robustness},
  };
  int failed = 0;
  int n = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v = check();
    failed += v.pass ? 0 : 1;
    fmt::print("criterion {}: {} {}: {}\n", ++n, v.pass ? "PASS" : "FAIL",
               name, v.detail);
  }
  return failed == 0 ? 0 : 1;
}
