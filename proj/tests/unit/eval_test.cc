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

#include <gtest/gtest.h>

#include "cminor/eval.h"
#include "support/properties.h"

namespace cminor {
namespace {

class EvalTest : public ::testing::Test {
 protected:
  void SetUp() override {
    prog.add_global("g", 8);
    g = *prog.find_global("g");
    s.mem = prog.initial_memory();
    s.sp = s.mem.alloc_in_place(0, 8);
    s.rho["x"] = Value::integer(2);
    ASSERT_TRUE(s.mem.store_in_place(Chunk::kInt32, Value::pointer(g, 0), Value::integer(11)));
  }
  std::optional<Value> op(OpCode code, std::vector<Value> args) {
    return eval_operation(prog, s.sp, Op::simple(code), args);
  }
  std::optional<Value> cmp(Comparison c, const Value& a, const Value& b) {
    return eval_operation(prog, s.sp, Op::compare(OpCode::kCmp, c), {a, b});
  }

  Program prog;
  BlockId g;
  State s;
};

TEST_F(EvalTest, AddWraps) {
  EXPECT_EQ(op(OpCode::kAdd, {Value::integer(Int32(0xFFFFFFFFu)), Value::integer(1)}),
            Value::integer(0));
}

TEST_F(EvalTest, PointerArithmetic) {
  EXPECT_EQ(op(OpCode::kAdd, {Value::pointer(g, 4), Value::integer(4)}), Value::pointer(g, 8));
  EXPECT_EQ(op(OpCode::kSub, {Value::pointer(g, 4), Value::integer(4)}), Value::pointer(g, 0));
  EXPECT_EQ(op(OpCode::kSub, {Value::pointer(g, 6), Value::pointer(g, 2)}), Value::integer(4));
}

TEST_F(EvalTest, IntVersusPointerComparison) {
  EXPECT_FALSE(cmp(Comparison::kEq, Value::integer(5), Value::pointer(g, 0)).has_value());
  EXPECT_EQ(cmp(Comparison::kEq, Value::integer(0), Value::pointer(g, 0)), Value::integer(0));
  EXPECT_EQ(cmp(Comparison::kNe, Value::pointer(g, 0), Value::integer(0)), Value::integer(1));
}

TEST_F(EvalTest, PointerEquality) {
  EXPECT_EQ(cmp(Comparison::kEq, Value::pointer(g, 4), Value::pointer(g, 4)), Value::integer(1));
  EXPECT_EQ(cmp(Comparison::kEq, Value::pointer(g, 0), Value::pointer(*s.sp, 0)),
            Value::integer(0));
}

TEST_F(EvalTest, DivisionByZeroIsStuck) {
  EXPECT_FALSE(op(OpCode::kDivs, {Value::integer(1), Value::integer(0)}).has_value());
  EXPECT_FALSE(op(OpCode::kDivs, {Value::integer(kIntMin), Value::integer(-1)}).has_value());
  EXPECT_EQ(op(OpCode::kDivu, {Value::integer(7), Value::integer(2)}), Value::integer(3));
}

TEST_F(EvalTest, UndefOperandsAreStuck) {
  EXPECT_FALSE(op(OpCode::kAdd, {Value::undef(), Value::integer(1)}).has_value());
}

TEST_F(EvalTest, AddressOperators) {
  EXPECT_EQ(eval_operation(prog, s.sp, Op::addr_symbol("g"), {}), Value::pointer(g, 0));
  EXPECT_EQ(eval_operation(prog, s.sp, Op::addr_stack(Int32(4u)), {}),
            Value::pointer(*s.sp, 4));
  EXPECT_FALSE(eval_operation(prog, s.sp, Op::addr_symbol("nope"), {}).has_value());
}

TEST_F(EvalTest, ValueEvaluatesToItself) {
  EXPECT_EQ(eval_expr(prog, s, *Expr::val(Value::integer(7))), Value::integer(7));
  EXPECT_EQ(eval_expr(prog, s, *Expr::val(Value::undef())), Value::undef());
}

TEST_F(EvalTest, UnboundVariable) {
  const EvalResult r = evaluate(prog, footprint_context(s), *Expr::var("nope"));
  EXPECT_FALSE(r.value.has_value());
  EXPECT_EQ(r.reason, StuckReason::kUnboundVariable);
  EXPECT_FALSE(eval_expr_erased(prog, s.sp, s.rho, s.mem, *Expr::var("nope")).has_value());
}

TEST_F(EvalTest, LoadOutsideFootprint) {
  ExprPtr e = Expr::load(Chunk::kInt32, Expr::make_op(Op::addr_symbol("g"), {}));
  const EvalResult r = evaluate(prog, footprint_context(s), *e);
  EXPECT_FALSE(r.value.has_value());
  EXPECT_EQ(r.reason, StuckReason::kLoadPermission);
  EXPECT_EQ(eval_expr_erased(prog, s.sp, s.rho, s.mem, *e), Value::integer(11));

  s.phi = *fp_grant(s.phi, g, 0, 4, Share::half());
  EXPECT_EQ(eval_expr(prog, s, *e), Value::integer(11));
}

TEST_F(EvalTest, Lists) {
  EXPECT_EQ(eval_exprlist(prog, s, {}), std::vector<Value>{});
  EXPECT_EQ(eval_exprlist(prog, s, {Expr::val(Value::integer(1)), Expr::val(Value::integer(2))}),
            (std::vector<Value>{Value::integer(1), Value::integer(2)}));
  EXPECT_FALSE(eval_exprlist(prog, s, {Expr::val(Value::integer(1)), Expr::var("nope")}));
}

TEST(EvalProperties, Determinism) {
  const auto r = testing::check_eval_determinism(2000, 5);
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(EvalProperties, ValuesEvaluateToThemselves) {
  const auto r = testing::check_eval_of_values(500, 6);
  EXPECT_TRUE(r.ok()) << r.summary();
}

}  // namespace
}  // namespace cminor
