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

// Separation-logic assertions as a deep embedding, and a three-valued
// satisfaction checker on concrete states.
//
// Concrete syntax (loosest binding first):
//
//   A := "exists" x "." A            extends as far right as possible
//      | A "=>" A                    right associative
//      | A "||" A
//      | A "&&" A
//      | A "*" A
//      | "!" A
//      | "emp" | "true" | "false"
//      | "[" e "]"                   the expression is a true value
//      | "defined" "(" e ")"
//      | "prop" "(" e ")"            pure fact over logic variables only
//      | e "==>" v                   v is a literal or a logic variable
//      | e "|->[" chunk "]" e        maps-to; the right operand is a primary
//      | "(" A ")"
//
// Inside assertions, names bound by "exists" and the result variables $0,
// $1... are logic variables; every other name is a program variable unless
// the parsing scope says otherwise (see AssertionScope).

#ifndef CMINOR_ASSERTIONS_H_
#define CMINOR_ASSERTIONS_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cminor/eval.h"
#include "cminor/syntax.h"

namespace cminor {

enum class AssertionKind : std::uint8_t {
  kEmp,
  kStar,
  kAnd,
  kOr,
  kImp,
  kNot,
  kExists,
  kProp,
  kEval,
  kExpr,
  kDefined,
  kMapsto,
};

// Literal value or logic variable, the right-hand side of "e ==> v".
struct ValueTerm {
  bool is_logic = false;
  Value value;
  Ident name;

  static ValueTerm literal(const Value& v) { return ValueTerm{false, v, {}}; }
  static ValueTerm logic(Ident x) { return ValueTerm{true, {}, std::move(x)}; }
  friend bool operator==(const ValueTerm&, const ValueTerm&) = default;
};

struct Assertion {
  AssertionKind kind = AssertionKind::kEmp;
  AssertionPtr left;   // binary operators, not, exists body
  AssertionPtr right;
  Ident binder;        // kExists
  ExprPtr e1;          // prop / eval / expr / defined / maps-to address
  ExprPtr e2;          // maps-to contents
  Chunk chunk = Chunk::kInt32;
  ValueTerm term;      // kEval

  // Factories. The expression-carrying ones throw Error on impure input.
  static AssertionPtr emp();
  static AssertionPtr star(AssertionPtr p, AssertionPtr q);
  static AssertionPtr conj(AssertionPtr p, AssertionPtr q);
  static AssertionPtr disj(AssertionPtr p, AssertionPtr q);
  static AssertionPtr imp(AssertionPtr p, AssertionPtr q);
  static AssertionPtr neg(AssertionPtr p);
  static AssertionPtr exists(Ident x, AssertionPtr body);
  static AssertionPtr prop(ExprPtr e);
  static AssertionPtr truth();     // prop(1)
  static AssertionPtr falsity();   // prop(0)
  static AssertionPtr evals_to(ExprPtr e, ValueTerm v);
  static AssertionPtr expr(ExprPtr e);
  static AssertionPtr defined(ExprPtr e);
  static AssertionPtr mapsto(ExprPtr addr, Chunk ch, ExprPtr contents);
};

bool operator==(const Assertion& a, const Assertion& b);
bool same_assertion(const AssertionPtr& a, const AssertionPtr& b);

// Program variables occurring in embedded expressions.
std::set<Ident> assertion_free_vars(const Assertion& a);
// Logic variables occurring free (not under a binding exists).
std::set<Ident> assertion_free_logic_vars(const Assertion& a);
// Nesting depth of assertion operators (atoms have depth 1).
std::size_t assertion_depth(const Assertion& a);
void collect_literals(const Assertion& a, std::vector<Value>& out);

enum class Verdict : std::uint8_t { kHolds, kFails, kUnknown };
std::string_view to_string(Verdict v);

struct CheckResult {
  Verdict verdict = Verdict::kHolds;
  std::string reason;

  static CheckResult holds() { return {Verdict::kHolds, {}}; }
  static CheckResult fails(std::string why) { return {Verdict::kFails, std::move(why)}; }
  static CheckResult unknown(std::string why) {
    return {Verdict::kUnknown, std::move(why)};
  }
  bool is_holds() const { return verdict == Verdict::kHolds; }
  bool is_fails() const { return verdict == Verdict::kFails; }
  bool is_unknown() const { return verdict == Verdict::kUnknown; }
};

struct SatisfiesOptions {
  // Above this many footprint addresses an undirected star split search
  // gives up with Unknown.
  std::size_t split_bound = 24;
  // Total atom evaluations one satisfies() call may spend on witness and
  // split searches before answering Unknown.
  std::size_t max_work = std::size_t{1} << 22;
};

// Witness candidates for existentials: every value bound in rho, every value
// loadable at an aligned i32 or f64 offset whose bytes are all in the
// footprint, the program's and the assertion's literals, and Vundef, 0, 1.
// Deterministic order, no duplicates.
std::vector<Value> witness_candidates(const GlobalEnv& genv, const State& s,
                                      const Assertion& a, const Env& logic_env);

// Three-valued satisfaction of `a` by (genv, s) under the logic environment.
CheckResult satisfies(const GlobalEnv& genv, const State& s, const Assertion& a,
                      const Env& logic_env = {},
                      const SatisfiesOptions& options = {});

// Searches values for `vars` (free logic variables of `a`) under which `a`
// holds, trying values suggested by the assertion's atoms before the generic
// candidates. Returns logic_env extended with the binding, or nothing; in
// that case `last` (when given) receives the best verdict seen.
std::optional<Env> find_witnesses(const GlobalEnv& genv, const State& s,
                                  const Assertion& a,
                                  const std::vector<Ident>& vars,
                                  const Env& logic_env = {},
                                  const SatisfiesOptions& options = {},
                                  CheckResult* last = nullptr);

// Names that parse as program variables (Evar). With `implicit_logic` set,
// any other free name becomes a logic variable (function-level auxiliary
// variable); otherwise every unbound name is a program variable.
struct AssertionScope {
  std::set<Ident> program_vars;
  bool implicit_logic = false;
};

// Throws SyntaxError (see parser.h) on malformed text or impure embedded
// expressions.
AssertionPtr parse_assertion(const std::string& text,
                             const AssertionScope& scope = {});
std::string print_assertion(const Assertion& a);

}  // namespace cminor

#endif  // CMINOR_ASSERTIONS_H_
