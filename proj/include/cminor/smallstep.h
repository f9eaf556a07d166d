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

// Continuation-based small-step semantics: control stacks, the step
// relation (including call and return), the fuel-bounded runner, control
// concatenation and absorption.

#ifndef CMINOR_SMALLSTEP_H_
#define CMINOR_SMALLSTEP_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cminor/eval.h"
#include "cminor/syntax.h"

namespace cminor {

struct ControlNode;
using ControlPtr = std::shared_ptr<const ControlNode>;

// Activation record saved by a call. `function` is the callee whose body
// runs above this frame; `sp` and `rho` belong to the caller. The runner's
// bottom frame is marked `sentinel`.
struct CallFrame {
  std::vector<Ident> results;
  std::shared_ptr<const FunDef> function;
  std::optional<BlockId> sp;
  Env rho;
  bool sentinel = false;
};

// kHole is an opaque tail used to measure absorption; no rule may look
// into it.
enum class ControlKind : std::uint8_t { kStop, kSeq, kBlock, kCall, kHole };

struct ControlNode {
  ControlKind kind = ControlKind::kStop;
  StmtPtr stmt;    // kSeq
  StmtPtr origin;  // kBlock: the block statement that pushed it, if known
  std::shared_ptr<const CallFrame> frame;  // kCall
  int hole = 0;    // kHole
  ControlPtr next;
};

ControlPtr kstop();
ControlPtr kseq(StmtPtr s, ControlPtr next);
ControlPtr kblock(ControlPtr next, StmtPtr origin = nullptr);
ControlPtr kcall(std::shared_ptr<const CallFrame> frame, ControlPtr next);
ControlPtr khole(int id);

// Structural equality. Frames compare field by field; block origins are
// ignored.
bool same_control(const ControlPtr& a, const ControlPtr& b);
std::size_t control_depth(const ControlPtr& k);

struct Continuation {
  State state;
  ControlPtr control;
};

bool same_continuation(const Continuation& a, const Continuation& b);

enum class Rule : std::uint8_t {
  kNone,
  kSeq,
  kAssign,
  kStore,
  kIfTrue,
  kIfFalse,
  kSkip,
  kLoop,
  kBlock,
  kExitZero,
  kExitSucc,
  kBlockEnd,
  kCall,
  kReturn,
  kReturnFallthrough,
  kAnnot,
};

std::string_view rule_name(Rule r);

// Deliberately wrong variants of single rules, for mutation testing.
enum class Mutation : std::uint8_t {
  kNone,
  kBrokenExit,             // exit n+1 leaves like exit 0
  kBrokenLoop,             // the loop body runs once
  kBrokenStorePermission,  // checks one byte past the chunk
  kBrokenReturnBinding,    // results are not written to the caller
  kBrokenBlock,            // entering a block pushes no Kblock
  kDropStackGrant,         // calls allocate the stack block without a grant
};

std::string_view mutation_name(Mutation m);
std::optional<Mutation> mutation_from_name(std::string_view name);

struct SemanticsConfig {
  // Erased semantics: no footprint checks, grants and revokes are no-ops.
  bool erased = false;
  Mutation mutation = Mutation::kNone;
};

struct StepInfo {
  Rule rule = Rule::kNone;  // kNone when stuck
  StuckReason reason = StuckReason::kNone;
  std::string detail;
  // Filled by kReturn and kReturnFallthrough.
  std::vector<Value> returned;
  std::shared_ptr<const FunDef> returned_from;
  std::optional<Env> callee_env;

  bool ok() const { return rule != Rule::kNone; }
};

// One step in place. On stuckness `k` is left untouched. Kstop never steps
// (reason kNone).
StepInfo advance(const GlobalEnv& genv, Continuation& k,
                 const SemanticsConfig& config = {});

std::optional<Continuation> step(const GlobalEnv& genv, const Continuation& k,
                                 const SemanticsConfig& config = {});

// Reason text when k is stuck, nothing when it steps or is Kstop.
std::optional<std::string> is_stuck(const GlobalEnv& genv,
                                    const Continuation& k,
                                    const SemanticsConfig& config = {});

// Initial continuation of a run: initial memory, a fresh stack block,
// full share on every global data block and on the stack, and control
// Kseq(body, Kcall(sentinel, Kstop)). Throws Error for an unknown entry or
// an argument count mismatch.
Continuation initial_continuation(const GlobalEnv& genv, const Ident& entry,
                                  const std::vector<Value>& args,
                                  const SemanticsConfig& config = {});

enum class OutcomeKind : std::uint8_t { kFinished, kStuck, kOutOfFuel };

struct TraceEntry {
  std::size_t index = 0;
  Rule rule = Rule::kNone;
  std::string head;
  std::string rho_delta;
  std::string phi_delta;
  std::string mem_delta;
};

// "index<TAB>rule<TAB>head<TAB>rho<TAB>phi<TAB>mem", "-" for empty fields.
std::string format_trace_entry(const TraceEntry& t);
// Abbreviated control head, e.g. "seq x = (x + 1);" or "block".
std::string describe_head(const ControlPtr& k);

struct Outcome {
  OutcomeKind kind = OutcomeKind::kOutOfFuel;
  std::vector<Value> results;  // kFinished
  Env exit_env;                // kFinished: rho of the last returning activation
  Continuation at;             // final, stuck or last continuation
  StuckReason reason = StuckReason::kNone;
  std::string detail;
  std::size_t steps = 0;

  // "Finished [42]", "Stuck after 3 steps: bad address", "OutOfFuel after
  // 1000 steps".
  std::string describe() const;
};

Outcome run_from(const GlobalEnv& genv, Continuation k, std::size_t fuel,
                 const SemanticsConfig& config = {},
                 std::vector<TraceEntry>* trace = nullptr);
Outcome run(const GlobalEnv& genv, const Ident& entry,
            const std::vector<Value>& args, std::size_t fuel,
            const SemanticsConfig& config = {},
            std::vector<TraceEntry>* trace = nullptr);

// cat(prefix, k): the prefix's Kstop replaced by k.
ControlPtr cat(const ControlPtr& prefix, const ControlPtr& k);

// If `k` ends in the hole `hole`, the prefix with that hole replaced by
// Kstop. Nothing if the hole is absent.
std::optional<ControlPtr> strip_hole(const ControlPtr& k, int hole);

// Steps (s, Kseq(s, hole)) j times; nothing if some step is stuck or
// inspects the hole. Otherwise the reached state and control prefix.
std::optional<Continuation> absorbed_steps(const GlobalEnv& genv,
                                           const StmtPtr& s, const State& st,
                                           std::size_t j, int hole = 0,
                                           const SemanticsConfig& config = {});

bool absorbs(const GlobalEnv& genv, std::size_t n, const StmtPtr& s,
             const State& st, const SemanticsConfig& config = {});

struct AbsorbBound {
  std::size_t steps = 0;
  bool at_least_bound = false;  // absorbs(bound) holds
};

AbsorbBound max_absorb(const GlobalEnv& genv, const StmtPtr& s,
                       const State& st, std::size_t bound,
                       const SemanticsConfig& config = {});

// s; s; ... (n copies) loop { skip; }
StmtPtr unfold_loop(const StmtPtr& s, std::size_t n);

}  // namespace cminor

#endif  // CMINOR_SMALLSTEP_H_
