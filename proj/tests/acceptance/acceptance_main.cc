// Copyright 2026 The Cminor Workbench Authors
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

// Runs every acceptance criterion at full size and prints one PASS/FAIL
// line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cminor/oracle.h"
#include "support/properties.h"

namespace {

using cminor::testing::PropertyResult;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<PropertyResult()> run;
};

// Keeps generating until `want` programs have been compared; programs that
// run out of fuel on either side do not count.
cminor::DiffReport difftest_until(std::size_t want, const cminor::SemanticsConfig& config,
                                  bool erasure) {
  cminor::DiffReport total;
  cminor::GenConfig cfg;
  cfg.seed = 1;
  while (total.compared < want && total.total < 4 * want) {
    const std::size_t batch = want - total.compared;
    cminor::DiffReport rep = erasure ? cminor::difftest_erasure(cfg, batch, 100000, config)
                                     : cminor::difftest_smallstep_vs_bigstep(cfg, batch, 100000, config);
    total.total += rep.total;
    total.compared += rep.compared;
    total.skipped += rep.skipped;
    total.finished += rep.finished;
    total.stuck += rep.stuck;
    total.newly_stuck += rep.newly_stuck;
    total.divergences.insert(total.divergences.end(), rep.divergences.begin(),
                             rep.divergences.end());
    cfg.seed += batch;
  }
  return total;
}

std::string counts(const cminor::DiffReport& rep) {
  return std::to_string(rep.compared) + " compared (" + std::to_string(rep.finished) +
         " finished, " + std::to_string(rep.stuck) + " stuck, " + std::to_string(rep.skipped) +
         " out of fuel), " + std::to_string(rep.divergences.size()) + " divergences";
}

PropertyResult erasure() {
  PropertyResult r;
  const cminor::DiffReport rep = difftest_until(500, {}, true);
  r.cases = rep.compared;
  r.failures = rep.divergences.size();
  if (rep.compared < 500) r.fail("fewer than 500 programs terminated");
  for (const auto& d : rep.divergences) {
    if (r.notes.size() < 3) r.notes.push_back("seed " + std::to_string(d.seed) + ": " + d.detail);
  }
  r.summary_extra = counts(rep) + ", " + std::to_string(rep.newly_stuck) + " stuck only with footprints";
  return r;
}

PropertyResult bigstep_equivalence() {
  PropertyResult r;
  const cminor::DiffReport rep = difftest_until(500, {}, false);
  r.cases = rep.compared;
  r.failures = rep.divergences.size();
  if (rep.compared < 500) r.fail("fewer than 500 programs terminated");
  for (const auto& d : rep.divergences) {
    if (r.notes.size() < 3) r.notes.push_back("seed " + std::to_string(d.seed) + ": " + d.detail);
  }
  std::string detected;
  for (cminor::Mutation m :
       {cminor::Mutation::kBrokenExit, cminor::Mutation::kBrokenLoop,
        cminor::Mutation::kBrokenStorePermission, cminor::Mutation::kBrokenReturnBinding,
        cminor::Mutation::kBrokenBlock}) {
    cminor::SemanticsConfig config;
    config.mutation = m;
    cminor::GenConfig cfg;
    cfg.seed = 1;
    const cminor::DiffReport mrep = cminor::difftest_smallstep_vs_bigstep(cfg, 500, 100000, config);
    const std::string name(cminor::mutation_name(m));
    r.expect(!mrep.ok(), "mutation " + name + " not detected");
    if (!mrep.ok()) {
      detected += (detected.empty() ? "" : ", ") + name + " (seed " +
                  std::to_string(mrep.divergences.front().seed) + ")";
    }
  }
  r.summary_extra = counts(rep) + "; detected " + detected;
  return r;
}

}  // namespace

int main() {
  using namespace cminor::testing;
  const std::vector<Criterion> criteria = {
      {1, "small-step rule conformance", 1, [] { return check_rule_conformance(); }},
      {2, "evaluation determinism", 10, [] { return check_eval_determinism(10000, 2); }},
      {3, "values evaluate to themselves", 5, [] { return check_eval_of_values(1000, 3); }},
      {4, "substitution of evaluated subexpressions", 10,
       [] { return check_substitution(1000, 4); }},
      {5, "erasure", 60, erasure},
      {6, "small-step/big-step equivalence and mutations", 120, bigstep_equivalence},
      {7, "absorption", 30, [] { return check_absorption(1000, 7); }},
      {8, "footprint algebra", 10, [] { return check_footprint_algebra(10000, 8); }},
      {9, "memory model", 30, [] { return check_memory_model(10000, 9); }},
      {10, "separation checker vs reference", 60,
       [] { return check_satisfies_reference(2000, 10); }},
      {11, "checked list reversal", 10, [] { return check_list_reversal({0, 1, 3, 8}); }},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const PropertyResult r = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = r.ok() && in_time;
    failed += !pass;
    std::printf("%s %2d %s: %.2f s (budget %.0f s)%s; %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.budget_seconds, in_time ? "" : " OVER BUDGET",
                r.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
