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

// Big-step expression evaluation, with footprints and erased.

#ifndef CMINOR_EVAL_H_
#define CMINOR_EVAL_H_

#include <map>
#include <optional>
#include <string_view>
#include <vector>

#include "cminor/footprint.h"
#include "cminor/memory.h"
#include "cminor/syntax.h"

namespace cminor {

using GlobalEnv = Program;
using Env = std::map<Ident, Value>;

// sigma = (sp, rho, phi, m). sp is empty only outside any activation
// (e.g. when checking global-environment facts before entry).
struct State {
  std::optional<BlockId> sp;
  Env rho;
  Footprint phi;
  Memory mem;

  friend bool operator==(const State&, const State&) = default;
};

// Why no rule or evaluation applies.
enum class StuckReason : std::uint8_t {
  kNone,
  kUnboundVariable,
  kUnboundLogicVariable,
  kOperatorStuck,
  kLoadPermission,
  kBadAddress,
  kStorePermission,
  kUndefinedBranch,
  kExitPastBlock,
  kArityMismatch,
  kNotAFunction,
  kReturnOutsideFunction,
  kStackPermissionLost,
  kOpaqueControl,
};

std::string_view to_string(StuckReason r);

struct EvalResult {
  std::optional<Value> value;
  StuckReason reason = StuckReason::kNone;

  static EvalResult ok(const Value& v) { return {v, StuckReason::kNone}; }
  static EvalResult stuck(StuckReason r) { return {std::nullopt, r}; }
  explicit operator bool() const { return value.has_value(); }
};

// Everything an expression may read. A null `phi` means erased evaluation
// (no footprint check on loads). `logic` binds logic variables occurring in
// assertion expressions.
struct EvalContext {
  std::optional<BlockId> sp;
  const Env* rho = nullptr;
  const Footprint* phi = nullptr;
  const Memory* mem = nullptr;
  const Env* logic = nullptr;
};

// op(vl) => v. None on arity or kind mismatch, division by zero, signed
// overflow of division, shift amounts >= 32, Vundef operands, a nonzero
// integer compared with a pointer, and ordering across distinct blocks.
std::optional<Value> eval_operation(const GlobalEnv& genv,
                                    std::optional<BlockId> sp, const Op& op,
                                    const std::vector<Value>& vl);

EvalResult evaluate(const GlobalEnv& genv, const EvalContext& ctx,
                    const Expr& e);
std::optional<std::vector<Value>> evaluate_list(
    const GlobalEnv& genv, const EvalContext& ctx,
    const std::vector<ExprPtr>& el, StuckReason* reason = nullptr);

EvalContext footprint_context(const State& s);
EvalContext erased_context(std::optional<BlockId> sp, const Env& rho,
                           const Memory& m);

std::optional<Value> eval_expr(const GlobalEnv& genv, const State& s,
                               const Expr& e);
std::optional<std::vector<Value>> eval_exprlist(const GlobalEnv& genv,
                                                const State& s,
                                                const std::vector<ExprPtr>& el);
std::optional<Value> eval_expr_erased(const GlobalEnv& genv,
                                      std::optional<BlockId> sp, const Env& rho,
                                      const Memory& m, const Expr& e);

}  // namespace cminor

#endif  // CMINOR_EVAL_H_
