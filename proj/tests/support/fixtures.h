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

// Test fixtures shared by the unit tests and the acceptance runner: random
// states and expressions, the annotated list-reversal program and an
// independent walker for its final memory.

#ifndef CMINOR_TESTS_SUPPORT_FIXTURES_H_
#define CMINOR_TESTS_SUPPORT_FIXTURES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cminor/eval.h"
#include "cminor/smallstep.h"
#include "cminor/syntax.h"

namespace cminor::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
bool chance(Rng& rng, double p);

// A program with two data globals (g0[16], g1[8]) and a function f, plus a
// state sigma over its initial memory: a 16-byte stack block, random
// contents, a random footprint of full and half shares, and variables
// x, y, z, p.
struct Sandbox {
  Program program;
  State state;
  std::vector<BlockId> data_blocks;  // g0, g1, stack
  std::vector<Ident> vars;
};

Sandbox random_sandbox(Rng& rng);

// Any kind of value, pointers aimed at the sandbox blocks.
Value random_value(Rng& rng, const Sandbox& box);

// Random expression over every operator, variables, literals, symbol and
// stack addresses and loads.
ExprPtr random_expr(Rng& rng, const Sandbox& box, int depth);

// A state equivalent to s in the sense of the logic's state equivalence:
// same sp, environment and footprint, memory changed only where the
// footprint grants nothing (plus an extra unrelated block).
State equivalent_state(Rng& rng, const State& s);

// Random assign, if or store statement.
StmtPtr random_simple_stmt(Rng& rng, const Sandbox& box);

// Random statement with control: blocks, exits, loops, ifs, returns.
StmtPtr random_control_stmt(Rng& rng, const Sandbox& box, int depth);

// Fig. 2 rules whose premises hold at k, decided by direct pattern match
// on k rather than by the interpreter.
std::vector<Rule> applicable_fig2_rules(const GlobalEnv& genv,
                                        const Continuation& k);

// Annotated in-place reversal of an n-node list in `global heap[8n]`.
// Node k sits at &heap + 8k with value 10(k+1) at +0 and the next pointer
// at +4. `main` builds the list and calls rev(&heap). With `drop_case`
// set, the loop invariant omits the disjunct for that many reversed nodes.
std::string list_reversal_source(int n, std::optional<int> drop_case = {});

// Follows next pointers from `head` through the heap block; nothing on a
// cycle, a bad pointer or an unreadable cell. Returns the node values.
std::optional<std::vector<std::int32_t>> walk_list(const Memory& m,
                                                   BlockId heap,
                                                   const Value& head);

}  // namespace cminor::testing

#endif  // CMINOR_TESTS_SUPPORT_FIXTURES_H_
