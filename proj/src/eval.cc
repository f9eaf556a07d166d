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

#include "cminor/eval.h"

#include <cmath>

namespace cminor {

std::string_view to_string(StuckReason r) {
  switch (r) {
    case StuckReason::kNone: return "not stuck";
    case StuckReason::kUnboundVariable: return "unbound variable";
    case StuckReason::kUnboundLogicVariable: return "unbound logic variable";
    case StuckReason::kOperatorStuck: return "operator stuck";
    case StuckReason::kLoadPermission: return "load permission required";
    case StuckReason::kBadAddress: return "bad address";
    case StuckReason::kStorePermission: return "store permission required";
    case StuckReason::kUndefinedBranch: return "undefined branch condition";
    case StuckReason::kExitPastBlock: return "exit past outermost block";
    case StuckReason::kArityMismatch: return "arity mismatch";
    case StuckReason::kNotAFunction: return "non-function call target";
    case StuckReason::kReturnOutsideFunction: return "return outside function";
    case StuckReason::kStackPermissionLost: return "stack permission lost";
    case StuckReason::kOpaqueControl: return "opaque control inspected";
  }
  return "?";
}

namespace {

using OptValue = std::optional<Value>;

Value vint(Int32 i) { return Value::integer(i); }
Value vbool(bool b) { return Value::integer(b ? 1 : 0); }

template <typename T>
bool compare(Comparison c, T a, T b) {
  switch (c) {
    case Comparison::kEq: return a == b;
    case Comparison::kNe: return a != b;
    case Comparison::kLt: return a < b;
    case Comparison::kLe: return a <= b;
    case Comparison::kGt: return a > b;
    case Comparison::kGe: return a >= b;
  }
  return false;
}

bool is_equality(Comparison c) {
  return c == Comparison::kEq || c == Comparison::kNe;
}

// Ocmp and Ocmpu share everything but the integer interpretation.
OptValue integer_compare(Comparison c, bool is_signed, const Value& a,
                         const Value& b) {
  if (a.is_int() && b.is_int()) {
    if (is_signed) {
      return vbool(compare(c, a.as_int().signed_value(), b.as_int().signed_value()));
    }
    return vbool(compare(c, a.as_int().unsigned_value(), b.as_int().unsigned_value()));
  }
  if (a.is_ptr() && b.is_ptr()) {
    if (a.ptr_block() == b.ptr_block()) {
      Int32 x = a.ptr_offset(), y = b.ptr_offset();
      if (is_signed) return vbool(compare(c, x.signed_value(), y.signed_value()));
      return vbool(compare(c, x.unsigned_value(), y.unsigned_value()));
    }
    if (!is_equality(c)) return std::nullopt;
    return vbool(c == Comparison::kNe);
  }
  // NULL test: only Vint(0) may be compared with a pointer, and only for
  // (in)equality.
  const Value* i = a.is_int() ? &a : b.is_int() ? &b : nullptr;
  const Value* p = a.is_ptr() ? &a : b.is_ptr() ? &b : nullptr;
  if (i == nullptr || p == nullptr) return std::nullopt;
  if (i->as_int().bits() != 0 || !is_equality(c)) return std::nullopt;
  return vbool(c == Comparison::kNe);
}

OptValue int_binary(OpCode code, Int32 a, Int32 b) {
  std::uint32_t ua = a.unsigned_value(), ub = b.unsigned_value();
  switch (code) {
    case OpCode::kAdd: return vint(a + b);
    case OpCode::kSub: return vint(a - b);
    case OpCode::kMul: return vint(a * b);
    case OpCode::kAnd: return vint(a & b);
    case OpCode::kOr: return vint(a | b);
    case OpCode::kXor: return vint(a ^ b);
    case OpCode::kDivs:
    case OpCode::kMods:
      if (ub == 0 || (a == kIntMin && b.signed_value() == -1)) return std::nullopt;
      if (code == OpCode::kDivs) {
        return vint(Int32::from_signed(a.signed_value() / b.signed_value()));
      }
      return vint(Int32::from_signed(a.signed_value() % b.signed_value()));
    case OpCode::kDivu:
      if (ub == 0) return std::nullopt;
      return vint(Int32(ua / ub));
    case OpCode::kModu:
      if (ub == 0) return std::nullopt;
      return vint(Int32(ua % ub));
    case OpCode::kShl:
      if (ub >= 32) return std::nullopt;
      return vint(Int32(ua << ub));
    case OpCode::kShru:
      if (ub >= 32) return std::nullopt;
      return vint(Int32(ua >> ub));
    case OpCode::kShrs:
      if (ub >= 32) return std::nullopt;
      // Arithmetic shift; right shift of negative values is arithmetic in
      // C++20.
      return vint(Int32::from_signed(a.signed_value() >> ub));
    default:
      return std::nullopt;
  }
}

OptValue float_binary(OpCode code, double a, double b) {
  switch (code) {
    case OpCode::kAddf: return Value::floating(a + b);
    case OpCode::kSubf: return Value::floating(a - b);
    case OpCode::kMulf: return Value::floating(a * b);
    case OpCode::kDivf: return Value::floating(a / b);
    default: return std::nullopt;
  }
}

OptValue unary(OpCode code, const Value& v) {
  switch (code) {
    case OpCode::kNeg:
      if (!v.is_int()) return std::nullopt;
      return vint(-v.as_int());
    case OpCode::kNotInt:
      if (!v.is_int()) return std::nullopt;
      return vint(~v.as_int());
    case OpCode::kNegf:
      if (!v.is_float()) return std::nullopt;
      return Value::floating(-v.as_float());
    case OpCode::kIntOfFloat: {
      if (!v.is_float()) return std::nullopt;
      double f = std::trunc(v.as_float());
      if (std::isnan(f) || f < -2147483648.0 || f > 2147483647.0) {
        return std::nullopt;
      }
      return Value::integer(static_cast<std::int32_t>(f));
    }
    case OpCode::kFloatOfInt:
      if (!v.is_int()) return std::nullopt;
      return Value::floating(static_cast<double>(v.as_int().signed_value()));
    case OpCode::kFloatOfIntu:
      if (!v.is_int()) return std::nullopt;
      return Value::floating(static_cast<double>(v.as_int().unsigned_value()));
    case OpCode::kCast8s:
      if (!v.is_int()) return std::nullopt;
      return normalize_for_chunk(Chunk::kInt8Signed, v);
    case OpCode::kCast8u:
      if (!v.is_int()) return std::nullopt;
      return normalize_for_chunk(Chunk::kInt8Unsigned, v);
    case OpCode::kCast16s:
      if (!v.is_int()) return std::nullopt;
      return normalize_for_chunk(Chunk::kInt16Signed, v);
    case OpCode::kCast16u:
      if (!v.is_int()) return std::nullopt;
      return normalize_for_chunk(Chunk::kInt16Unsigned, v);
    default:
      return std::nullopt;
  }
}

OptValue binary(OpCode code, Comparison cmp, const Value& a, const Value& b) {
  switch (code) {
    case OpCode::kCmp:
      return integer_compare(cmp, true, a, b);
    case OpCode::kCmpu:
      return integer_compare(cmp, false, a, b);
    case OpCode::kCmpf:
      if (!a.is_float() || !b.is_float()) return std::nullopt;
      if (cmp == Comparison::kNe) return vbool(!(a.as_float() == b.as_float()));
      return vbool(compare(cmp, a.as_float(), b.as_float()));
    case OpCode::kAddf:
    case OpCode::kSubf:
    case OpCode::kMulf:
    case OpCode::kDivf:
      if (!a.is_float() || !b.is_float()) return std::nullopt;
      return float_binary(code, a.as_float(), b.as_float());
    case OpCode::kAdd:
      if (a.is_ptr() && b.is_int()) {
        return Value::pointer(a.ptr_block(), a.ptr_offset() + b.as_int());
      }
      if (a.is_int() && b.is_ptr()) {
        return Value::pointer(b.ptr_block(), b.ptr_offset() + a.as_int());
      }
      break;
    case OpCode::kSub:
      if (a.is_ptr() && b.is_int()) {
        return Value::pointer(a.ptr_block(), a.ptr_offset() - b.as_int());
      }
      if (a.is_ptr() && b.is_ptr()) {
        if (a.ptr_block() != b.ptr_block()) return Value::undef();
        return vint(a.ptr_offset() - b.ptr_offset());
      }
      break;
    default:
      break;
  }
  if (!a.is_int() || !b.is_int()) return std::nullopt;
  return int_binary(code, a.as_int(), b.as_int());
}

}  // namespace

std::optional<Value> eval_operation(const GlobalEnv& genv,
                                    std::optional<BlockId> sp, const Op& op,
                                    const std::vector<Value>& vl) {
  if (vl.size() != op_arity(op.code)) return std::nullopt;
  switch (op.code) {
    case OpCode::kIntConst:
      return vint(op.int_arg);
    case OpCode::kFloatConst:
      return Value::floating(op.float_arg);
    case OpCode::kAddrSymbol: {
      auto b = genv.find_global(op.symbol);
      if (!b) return std::nullopt;
      return Value::pointer(*b, 0);
    }
    case OpCode::kAddrStack:
      if (!sp) return std::nullopt;
      return Value::pointer(*sp, op.int_arg);
    default:
      break;
  }
  for (const Value& v : vl) {
    if (v.is_undef()) return std::nullopt;
  }
  if (vl.size() == 1) return unary(op.code, vl[0]);
  return binary(op.code, op.cmp, vl[0], vl[1]);
}

EvalResult evaluate(const GlobalEnv& genv, const EvalContext& ctx,
                    const Expr& e) {
  switch (e.kind) {
    case ExprKind::kVal:
      return EvalResult::ok(e.value);
    case ExprKind::kVar: {
      if (ctx.rho == nullptr) return EvalResult::stuck(StuckReason::kUnboundVariable);
      auto it = ctx.rho->find(e.name);
      if (it == ctx.rho->end()) return EvalResult::stuck(StuckReason::kUnboundVariable);
      return EvalResult::ok(it->second);
    }
    case ExprKind::kLogic: {
      if (ctx.logic == nullptr) {
        return EvalResult::stuck(StuckReason::kUnboundLogicVariable);
      }
      auto it = ctx.logic->find(e.name);
      if (it == ctx.logic->end()) {
        return EvalResult::stuck(StuckReason::kUnboundLogicVariable);
      }
      return EvalResult::ok(it->second);
    }
    case ExprKind::kOp: {
      StuckReason why = StuckReason::kNone;
      auto vl = evaluate_list(genv, ctx, e.args, &why);
      if (!vl) return EvalResult::stuck(why);
      auto v = eval_operation(genv, ctx.sp, e.op, *vl);
      if (!v) return EvalResult::stuck(StuckReason::kOperatorStuck);
      return EvalResult::ok(*v);
    }
    case ExprKind::kLoad: {
      EvalResult a = evaluate(genv, ctx, *e.args[0]);
      if (!a) return a;
      if (!a.value->is_ptr() || ctx.mem == nullptr) {
        return EvalResult::stuck(StuckReason::kBadAddress);
      }
      if (ctx.phi != nullptr &&
          !allows(*ctx.phi, *a.value, e.chunk, Access::kLoad)) {
        return EvalResult::stuck(StuckReason::kLoadPermission);
      }
      auto v = ctx.mem->load(e.chunk, *a.value);
      if (!v) return EvalResult::stuck(StuckReason::kBadAddress);
      return EvalResult::ok(*v);
    }
  }
  return EvalResult::stuck(StuckReason::kOperatorStuck);
}

std::optional<std::vector<Value>> evaluate_list(const GlobalEnv& genv,
                                                const EvalContext& ctx,
                                                const std::vector<ExprPtr>& el,
                                                StuckReason* reason) {
  std::vector<Value> out;
  out.reserve(el.size());
  for (const ExprPtr& e : el) {
    EvalResult r = evaluate(genv, ctx, *e);
    if (!r) {
      if (reason != nullptr) *reason = r.reason;
      return std::nullopt;
    }
    out.push_back(*r.value);
  }
  return out;
}

EvalContext footprint_context(const State& s) {
  return EvalContext{s.sp, &s.rho, &s.phi, &s.mem, nullptr};
}

EvalContext erased_context(std::optional<BlockId> sp, const Env& rho,
                           const Memory& m) {
  return EvalContext{sp, &rho, nullptr, &m, nullptr};
}

std::optional<Value> eval_expr(const GlobalEnv& genv, const State& s,
                               const Expr& e) {
  return evaluate(genv, footprint_context(s), e).value;
}

std::optional<std::vector<Value>> eval_exprlist(const GlobalEnv& genv,
                                                const State& s,
                                                const std::vector<ExprPtr>& el) {
  return evaluate_list(genv, footprint_context(s), el);
}

std::optional<Value> eval_expr_erased(const GlobalEnv& genv,
                                      std::optional<BlockId> sp, const Env& rho,
                                      const Memory& m, const Expr& e) {
  return evaluate(genv, erased_context(sp, rho, m), e).value;
}

}  // namespace cminor
