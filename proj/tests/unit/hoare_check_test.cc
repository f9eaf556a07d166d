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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cminor/hoare_check.h"
#include "cminor/parser.h"
#include "json.hpp"
#include "support/fixtures.h"
#include "support/properties.h"

namespace cminor {
namespace {

Program corpus(const std::string& name) {
  std::ifstream in(std::string(CMINOR_CORPUS_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str());
}

ExprPtr ival(std::int32_t i) { return Expr::val(Value::integer(i)); }

TEST(ModifiedVars, Examples) {
  EXPECT_EQ(modified_vars(*Stmt::assign("x", ival(1))), std::set<Ident>{"x"});
  StmtPtr branch = Stmt::if_then_else(ival(0), Stmt::assign("a", ival(1)),
                                      Stmt::assign("b", ival(1)));
  EXPECT_EQ(modified_vars(*branch), (std::set<Ident>{"a", "b"}));
  EXPECT_TRUE(modified_vars(*Stmt::store(Chunk::kInt32, Expr::var("p"), ival(0))).empty());
  StmtPtr call = Stmt::call({"r", "s"}, Expr::var("f"), {});
  EXPECT_EQ(modified_vars(*call), (std::set<Ident>{"r", "s"}));
  EXPECT_EQ(modified_vars(*Stmt::block(Stmt::loop(Stmt::assign("i", ival(0))))),
            std::set<Ident>{"i"});
}

TEST(FrameSideCondition, Examples) {
  StmtPtr s = Stmt::assign("x", ival(1));
  EXPECT_TRUE(check_frame_side_condition(*s, *Assertion::expr(Expr::var("y"))));
  ExprPtr x_is_1 = Expr::make_op(Op::compare(OpCode::kCmp, Comparison::kEq),
                                 {Expr::var("x"), ival(1)});
  EXPECT_FALSE(check_frame_side_condition(*s, *Assertion::expr(x_is_1)));
  StmtPtr branch = Stmt::if_then_else(Expr::var("c"), s, Stmt::skip());
  EXPECT_FALSE(check_frame_side_condition(*branch, *Assertion::defined(Expr::var("x"))));
}

TEST(Gamma, EmpOnEmptyProgram) {
  EXPECT_TRUE(check_gamma(Program(), *Assertion::emp()).is_holds());
}

TEST(Gamma, DeclaredGlobalIsDefined) {
  Program p;
  p.add_global("g", 4);
  EXPECT_TRUE(check_gamma(p, *Assertion::defined(Expr::make_op(Op::addr_symbol("g"), {})))
                  .is_holds());
}

TEST(Gamma, UndeclaredNameFails) {
  Program p;
  p.add_global("g", 4);
  EXPECT_TRUE(check_gamma(p, *Assertion::defined(Expr::make_op(Op::addr_symbol("h"), {})))
                  .is_fails());
}

TEST(Gamma, CheckedBeforeRunning) {
  const Program p = parse_program("gamma false;\nfn main() : 1 { return 0; }\n");
  const CheckReport rep = check_function(p, "main", {}, 100);
  EXPECT_FALSE(rep.pass);
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->kind, EventKind::kGamma);
}

TEST(Check, ListReversalHolds) {
  const CheckReport rep = check_function(corpus("list_reversal.cm"), "main", {}, 10000);
  EXPECT_TRUE(rep.pass) << rep.to_text();
  EXPECT_EQ(rep.count(Verdict::kFails), 0u);
  EXPECT_EQ(rep.count(Verdict::kUnknown), 0u);
  EXPECT_EQ(rep.outcome, "Finished [ptr(0, 16)]");
}

TEST(Check, CorpusMatchesGenerator) {
  EXPECT_EQ(corpus("list_reversal.cm"), parse_program(testing::list_reversal_source(3)));
}

// Hand trace: 4 steps reach the loop (body seq, i = 0, seq, block), then
// each iteration takes 5 (loop, seq, if, skip, i = i + 1). The arrival
// with i = 4 is the fifth, iteration 4, after 4 + 4 * 5 = 24 steps.
TEST(Check, InvariantViolationAtFirstBadIteration) {
  const CheckReport rep = check_function(corpus("invariant_violation.cm"), "main", {}, 1000);
  EXPECT_FALSE(rep.pass);
  const CheckEvent* first = rep.first_failure();
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->kind, EventKind::kInvariant);
  EXPECT_EQ(first->iteration, 4u);
  EXPECT_EQ(first->step, 24u);
}

TEST(Check, EnsuresFalseFailsAtReturn) {
  const CheckReport rep = check_function(corpus("ensures_false.cm"), "main", {}, 1000);
  EXPECT_FALSE(rep.pass);
  const CheckEvent* first = rep.first_failure();
  ASSERT_NE(first, nullptr);
  EXPECT_EQ(first->kind, EventKind::kPostcondition);
  EXPECT_EQ(first->function, "f");
}

TEST(Check, StuckRunIsASafetyFailure) {
  const CheckReport rep = check_function(corpus("undef_branch.cm"), "main", {}, 1000);
  EXPECT_FALSE(rep.pass);
  ASSERT_NE(rep.first_failure(), nullptr);
  EXPECT_EQ(rep.first_failure()->kind, EventKind::kSafety);
}

TEST(Check, InlineAssertHolds) {
  const CheckReport rep = check_function(corpus("calls.cm"), "main", {}, 1000);
  EXPECT_TRUE(rep.pass) << rep.to_text();
}

TEST(Check, RequiresBindsArguments) {
  const Program p = parse_program(
      "fn f(a) : 1 requires [a == 3] ensures [$0 == 4] { return a + 1; }\n");
  EXPECT_TRUE(check_function(p, "f", {Value::integer(3)}, 100).pass);
  const CheckReport bad = check_function(p, "f", {Value::integer(2)}, 100);
  EXPECT_FALSE(bad.pass);
  ASSERT_NE(bad.first_failure(), nullptr);
  EXPECT_EQ(bad.first_failure()->kind, EventKind::kPrecondition);
}

TEST(Check, BlockExitAssertion) {
  const Program p = parse_program(
      "fn main() : 1 { locals i; i = 0;\n"
      "  block exits [i == 2] { loop { if (i == 2) { exit 0; } i = i + 1; } }\n"
      "  return i; }\n");
  const CheckReport rep = check_function(p, "main", {}, 1000);
  EXPECT_TRUE(rep.pass) << rep.to_text();
  const Program q = parse_program(
      "fn main() : 1 { locals i; i = 0;\n"
      "  block exits [i == 3] { loop { if (i == 2) { exit 0; } i = i + 1; } }\n"
      "  return i; }\n");
  const CheckReport bad = check_function(q, "main", {}, 1000);
  ASSERT_NE(bad.first_failure(), nullptr);
  EXPECT_EQ(bad.first_failure()->kind, EventKind::kBlockExit);
}

TEST(Check, ExitWithoutTargetBlockIsAStaticError) {
  const Program ok = parse_program(
      "fn main() : 1 { block exits emp { block { exit 1; } } return 0; }\n");
  for (const Finding& f : static_findings(ok)) EXPECT_FALSE(f.error) << f.message;
  const Program bad = parse_program("fn main() : 1 { block { exit 1; } return 0; }\n");
  bool error = false;
  for (const Finding& f : static_findings(bad)) error = error || f.error;
  EXPECT_TRUE(error);
  EXPECT_FALSE(check_function(bad, "main", {}, 100).pass);
}

TEST(Check, ReportsSerialize) {
  const CheckReport rep = check_function(corpus("invariant_violation.cm"), "main", {}, 1000);
  const auto j = nlohmann::json::parse(rep.to_json());
  EXPECT_EQ(j["verdict"], "fail");
  EXPECT_FALSE(j["events"].empty());
  EXPECT_NE(rep.to_text().find("invariant"), std::string::npos);
}

TEST(Check, ListReversalProperty) {
  const auto r = testing::check_list_reversal({0, 1, 3});
  EXPECT_TRUE(r.ok()) << r.summary();
}

TEST(DynamicFrame, FrameSurvivesUnrelatedStore) {
  Program p;
  State s;
  const BlockId b = s.mem.alloc_in_place(0, 8);
  s.phi = *fp_grant(s.phi, b, 0, 8, Share::full());
  s.rho["p"] = Value::pointer(b, 0);
  s.rho["q"] = Value::pointer(b, 4);
  ASSERT_TRUE(s.mem.store_in_place(Chunk::kInt32, Value::pointer(b, 4), Value::integer(9)));
  const StmtPtr st = Stmt::store(Chunk::kInt32, Expr::var("p"), ival(1));
  const AssertionPtr a = parse_assertion("q |->[i32] 9");
  const Footprint frame = *fp_grant(Footprint(), b, 4, 8, Share::full());
  const FrameCheck fc = dynamic_frame_check(p, s, st, *a, frame, 100);
  EXPECT_TRUE(fc.side_condition);
  EXPECT_TRUE(fc.before.is_holds());
  EXPECT_TRUE(fc.ran) << fc.run_outcome;
  EXPECT_TRUE(fc.after.is_holds());
}

}  // namespace
}  // namespace cminor
