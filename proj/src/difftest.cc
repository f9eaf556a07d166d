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

#include <utility>

#include "cminor/oracle.h"
#include "cminor/parser.h"

namespace cminor {

std::string DiffReport::to_text() const {
  std::string out = std::to_string(total) + " programs, " +
                    std::to_string(compared) + " compared, " +
                    std::to_string(skipped) + " skipped (fuel), " +
                    std::to_string(finished) + " finished, " +
                    std::to_string(stuck) + " stuck, ";
  if (newly_stuck) out += std::to_string(newly_stuck) + " newly stuck, ";
  out += std::to_string(divergences.size()) + " divergences\n";
  for (const DiffCase& d : divergences) {
    out += "--- divergence seed=" + std::to_string(d.seed) + "\n";
    out += "left: " + d.left + "\n";
    out += "right: " + d.right + "\n";
    out += "detail: " + d.detail + "\n";
    out += "program:\n" + d.program;
    out += "--- end\n";
  }
  return out;
}

namespace {

GenConfig with_seed(const GenConfig& cfg, std::size_t i) {
  GenConfig c = cfg;
  c.seed = cfg.seed + i;
  return c;
}

// First difference between two finished runs, empty when equal.
std::string compare_finished(const std::vector<Value>& r1, const Env& e1,
                             const Memory& m1, const std::vector<Value>& r2,
                             const Env& e2, const Memory& m2) {
  if (r1 != r2) return "results differ";
  if (e1 != e2) return "environments at function exit differ";
  if (!(m1 == m2)) return "memories differ";
  return {};
}

}  // namespace

DiffReport difftest_smallstep_vs_bigstep(const GenConfig& cfg, std::size_t count,
                                         std::size_t fuel,
                                         const SemanticsConfig& config) {
  DiffReport rep;
  SemanticsConfig reference;
  reference.erased = config.erased;
  for (std::size_t i = 0; i < count; ++i) {
    const GenConfig c = with_seed(cfg, i);
    const Program p = gen_program(c);
    ++rep.total;
    const Outcome small = run(p, "main", {}, fuel, config);
    const BigRun big = bigstep_run(p, "main", {}, fuel, reference);
    if (small.kind == OutcomeKind::kOutOfFuel || big.kind == OutcomeKind::kOutOfFuel) {
      ++rep.skipped;
      continue;
    }
    ++rep.compared;
    std::string detail;
    if (small.kind != big.kind) {
      detail = "classification differs";
    } else if (small.kind == OutcomeKind::kStuck) {
      ++rep.stuck;
      if (small.reason != big.reason) detail = "stuck reasons differ";
    } else {
      ++rep.finished;
      detail = compare_finished(small.results, small.exit_env, small.at.state.mem,
                                big.results, big.exit_env, big.state.mem);
      if (detail.empty() && !(small.at.state == big.state)) {
        detail = "final states differ";
      }
    }
    if (!detail.empty()) {
      rep.divergences.push_back(
          {c.seed, print_program(p), small.describe(), big.describe(), detail});
    }
  }
  return rep;
}

DiffReport difftest_erasure(const GenConfig& cfg, std::size_t count,
                            std::size_t fuel, const SemanticsConfig& config) {
  DiffReport rep;
  SemanticsConfig footprint = config;
  footprint.erased = false;
  SemanticsConfig erased;
  erased.erased = true;
  for (std::size_t i = 0; i < count; ++i) {
    const GenConfig c = with_seed(cfg, i);
    const Program p = gen_program(c);
    ++rep.total;
    const Outcome fp = run(p, "main", {}, fuel, footprint);
    if (fp.kind == OutcomeKind::kOutOfFuel) {
      ++rep.skipped;
      continue;
    }
    const Outcome er = run(p, "main", {}, fuel, erased);
    ++rep.compared;
    if (fp.kind == OutcomeKind::kStuck) {
      ++rep.stuck;
      if (er.kind == OutcomeKind::kFinished) ++rep.newly_stuck;
      continue;
    }
    ++rep.finished;
    std::string detail;
    if (er.kind != OutcomeKind::kFinished) {
      detail = "footprint run finished, erased run did not";
    } else {
      detail = compare_finished(fp.results, fp.exit_env, fp.at.state.mem,
                                er.results, er.exit_env, er.at.state.mem);
    }
    if (!detail.empty()) {
      rep.divergences.push_back(
          {c.seed, print_program(p), fp.describe(), er.describe(), detail});
    }
  }
  return rep;
}

}  // namespace cminor
