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

// Reference semantics and test generators: a compositional big-step
// interpreter, a random program generator, and the differential harnesses
// comparing small-step with big-step and footprint with erased execution.

#ifndef CMINOR_ORACLE_H_
#define CMINOR_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cminor/eval.h"
#include "cminor/smallstep.h"
#include "cminor/syntax.h"

namespace cminor {

enum class BigKind : std::uint8_t { kNormal, kExitOut, kReturnOut, kOutOfFuel, kStuck };

struct BigOutcome {
  BigKind kind = BigKind::kNormal;
  State state;               // kNormal, kExitOut, kReturnOut
  std::uint32_t exit_level = 0;  // kExitOut
  std::vector<Value> values;     // kReturnOut
  StuckReason reason = StuckReason::kNone;  // kStuck
};

// Executes s from sigma. `fuel` is decremented once per statement rule
// applied and shared with nested calls.
BigOutcome bigstep_exec(const GlobalEnv& genv, const State& s,
                        const StmtPtr& stmt, std::size_t& fuel,
                        const SemanticsConfig& config = {});

struct BigRun {
  OutcomeKind kind = OutcomeKind::kOutOfFuel;
  std::vector<Value> results;
  Env exit_env;  // the entry function's rho when it returned
  State state;   // after the entry's stack block is released
  StuckReason reason = StuckReason::kNone;

  std::string describe() const;
};

// Same initial state as the small-step runner, then the entry body.
BigRun bigstep_run(const GlobalEnv& genv, const Ident& entry,
                   const std::vector<Value>& args, std::size_t fuel,
                   const SemanticsConfig& config = {});

struct GenConfig {
  std::uint64_t seed = 1;
  int max_depth = 3;        // statement nesting
  int max_loop_iterations = 4;
  int max_statements = 4;   // per statement list
  std::vector<OpCode> operators = {OpCode::kAdd, OpCode::kSub, OpCode::kMul,
                                   OpCode::kAnd, OpCode::kOr,  OpCode::kXor,
                                   OpCode::kShl, OpCode::kShru, OpCode::kDivu,
                                   OpCode::kCmp};
  bool enable_calls = true;
};

// Deterministic in the whole configuration. Programs use a 32-byte scratch
// global, a stack frame, bounded loops in the block/exit pattern and,
// when enabled, calls to generated leaf functions. The entry is "main".
Program gen_program(const GenConfig& cfg);

struct DiffCase {
  std::uint64_t seed = 0;
  std::string program;
  std::string left;   // outcome of the first semantics
  std::string right;  // outcome of the second
  std::string detail;
};

struct DiffReport {
  std::size_t total = 0;
  std::size_t compared = 0;
  std::size_t skipped = 0;  // out of fuel on either side
  std::size_t finished = 0;
  std::size_t stuck = 0;
  std::size_t newly_stuck = 0;  // erasure: footprint stuck, erased finished
  std::vector<DiffCase> divergences;

  bool ok() const { return divergences.empty(); }
  // Summary line, then one block per divergence.
  std::string to_text() const;
};

// `config` is applied to the small-step side only, so a mutation there is
// reported as divergence. Seeds are cfg.seed, cfg.seed + 1, ...
DiffReport difftest_smallstep_vs_bigstep(const GenConfig& cfg, std::size_t count,
                                         std::size_t fuel = 100000,
                                         const SemanticsConfig& config = {});

// Footprint runs (under `config`) against erased runs. Only footprint
// Finished results are required to be matched.
DiffReport difftest_erasure(const GenConfig& cfg, std::size_t count,
                            std::size_t fuel = 100000,
                            const SemanticsConfig& config = {});

}  // namespace cminor

#endif  // CMINOR_ORACLE_H_
