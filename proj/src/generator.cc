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

#include <random>
#include <string>
#include <utility>

#include "cminor/oracle.h"

namespace cminor {

namespace {

constexpr int kScratchCells = 8;  // i32 cells of the scratch global

struct Leaf {
  Ident name;
  std::size_t params = 0;
  std::size_t results = 0;
};

class Generator {
 public:
  explicit Generator(const GenConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {}

  Program program() {
    Program p;
    p.add_global("scratch", 4 * kScratchCells);
    if (cfg_.enable_calls) {
      p.add_function(leaf("leaf0", {"a", "b"}, 1));
      leaves_.push_back({"leaf0", 2, 1});
      p.add_function(leaf("leaf1", {"a"}, 0));
      leaves_.push_back({"leaf1", 1, 0});
    }
    p.add_function(main_function());
    return p;
  }

 private:
  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }
  bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  ExprPtr constant(int v) { return Expr::val(Value::integer(v)); }
  ExprPtr binop(OpCode c, ExprPtr a, ExprPtr b) {
    return Expr::make_op(Op::simple(c), {std::move(a), std::move(b)});
  }

  ExprPtr scratch_cell(int k) {
    return binop(OpCode::kAdd, Expr::make_op(Op::addr_symbol("scratch"), {}),
                 constant(4 * k));
  }
  ExprPtr stack_cell(int k) {
    return Expr::make_op(Op::addr_stack(Int32::from_signed(4 * k)), {});
  }

  ExprPtr leaf_expr() {
    switch (pick(0, 5)) {
      case 0:
      case 1:
      case 2:
        return Expr::var(vars_[pick(0, static_cast<int>(vars_.size()) - 1)]);
      case 3:
        return constant(pick(-8, 100));
      case 4:
        return Expr::load(Chunk::kInt32, scratch_cell(pick(0, kScratchCells - 1)));
      default:
        if (has_stack_) return Expr::load(Chunk::kInt32, stack_cell(pick(0, 1)));
        return constant(pick(0, 3));
    }
  }

  ExprPtr expr(int depth) {
    if (depth <= 0 || coin(0.35) || cfg_.operators.empty()) return leaf_expr();
    const OpCode c =
        cfg_.operators[pick(0, static_cast<int>(cfg_.operators.size()) - 1)];
    switch (c) {
      case OpCode::kShl:
      case OpCode::kShrs:
      case OpCode::kShru: {
        ExprPtr a = expr(depth - 1);
        return binop(c, std::move(a), constant(pick(0, 31)));
      }
      case OpCode::kDivs:
      case OpCode::kDivu:
      case OpCode::kMods:
      case OpCode::kModu: {
        ExprPtr d = expr(depth - 1);
        // Mostly nonzero divisors; the rest may get stuck, which both
        // semantics must agree on.
        if (coin(0.85)) d = binop(OpCode::kOr, std::move(d), constant(1));
        ExprPtr n = expr(depth - 1);
        return binop(c, std::move(n), std::move(d));
      }
      case OpCode::kCmp:
      case OpCode::kCmpu:
        return Expr::make_op(Op::compare(c, static_cast<Comparison>(pick(0, 5))),
                             {expr(depth - 1), expr(depth - 1)});
      case OpCode::kNeg:
      case OpCode::kNotInt:
      case OpCode::kCast8s:
      case OpCode::kCast8u:
      case OpCode::kCast16s:
      case OpCode::kCast16u:
        return Expr::make_op(Op::simple(c), {expr(depth - 1)});
      default: {
        if (op_arity(c) != 2) return leaf_expr();
        ExprPtr a = expr(depth - 1);
        ExprPtr b = expr(depth - 1);
        return binop(c, std::move(a), std::move(b));
      }
    }
  }

  ExprPtr condition() {
    return Expr::make_op(Op::compare(OpCode::kCmp, static_cast<Comparison>(pick(0, 5))),
                         {expr(1), expr(1)});
  }

  StmtPtr assign() {
    const Ident& x = targets_[pick(0, static_cast<int>(targets_.size()) - 1)];
    return Stmt::assign(x, expr(2));
  }

  StmtPtr store() {
    const int r = pick(0, 19);
    if (r == 0) {
      ExprPtr addr = binop(OpCode::kAdd, Expr::make_op(Op::addr_symbol("scratch"), {}),
                           constant(pick(0, 4 * kScratchCells - 1)));
      return Stmt::store(Chunk::kInt8Unsigned, std::move(addr), expr(1));
    }
    ExprPtr addr = r <= 3 && has_stack_ ? stack_cell(pick(0, 1))
                                        : scratch_cell(pick(0, kScratchCells - 1));
    return Stmt::store(Chunk::kInt32, std::move(addr), expr(2));
  }

  StmtPtr call() {
    const Leaf& f = leaves_[pick(0, static_cast<int>(leaves_.size()) - 1)];
    std::vector<ExprPtr> args;
    for (std::size_t i = 0; i < f.params; ++i) args.push_back(expr(1));
    std::vector<Ident> results;
    for (std::size_t i = 0; i < f.results; ++i) {
      results.push_back(targets_[pick(0, static_cast<int>(targets_.size()) - 1)]);
    }
    return Stmt::call(std::move(results), Expr::make_op(Op::addr_symbol(f.name), {}),
                      std::move(args));
  }

  StmtPtr ret() {
    std::vector<ExprPtr> vl;
    for (std::size_t i = 0; i < result_arity_; ++i) vl.push_back(expr(1));
    return Stmt::ret(std::move(vl));
  }

  // i = 0; block { loop { if (i >= n) { exit 0; } i = i + 1; body } }
  StmtPtr bounded_loop(int depth) {
    const Ident counter = "i" + std::to_string(loop_level_);
    const int n = pick(0, cfg_.max_loop_iterations);
    ++loop_level_;
    ++block_depth_;
    StmtPtr body = stmts(depth - 1);
    --block_depth_;
    --loop_level_;
    ExprPtr done = Expr::make_op(Op::compare(OpCode::kCmp, Comparison::kGe),
                                 {Expr::var(counter), constant(n)});
    StmtPtr head = Stmt::if_then_else(std::move(done), Stmt::exit(0), Stmt::skip());
    StmtPtr incr = Stmt::assign(counter, binop(OpCode::kAdd, Expr::var(counter), constant(1)));
    return Stmt::seq(Stmt::assign(counter, constant(0)),
                     Stmt::block(Stmt::loop(seq_of({head, incr, body}))));
  }

  StmtPtr stmt(int depth) {
    const bool nested = depth > 0;
    for (;;) {
      const int r = pick(0, 99);
      if (r < 35) return assign();
      if (r < 50) return store();
      if (r < 62) {
        if (!nested) continue;
        ExprPtr c = condition();
        StmtPtr t = stmts(depth - 1);
        StmtPtr e = coin(0.5) ? stmts(depth - 1) : Stmt::skip();
        return Stmt::if_then_else(std::move(c), std::move(t), std::move(e));
      }
      if (r < 72) {
        if (!nested || loop_level_ >= 3) continue;
        return bounded_loop(depth);
      }
      if (r < 81) {
        if (!nested) continue;
        ++block_depth_;
        StmtPtr body = stmts(depth - 1);
        --block_depth_;
        return Stmt::block(std::move(body));
      }
      if (r < 89) {
        if (block_depth_ == 0) continue;
        StmtPtr ex = Stmt::exit(static_cast<std::uint32_t>(pick(0, block_depth_ - 1)));
        // Guarded so the code after it still runs on some paths.
        ExprPtr c = condition();
        return Stmt::if_then_else(std::move(c), std::move(ex), Stmt::skip());
      }
      if (r < 97) {
        if (leaves_.empty() || in_leaf_) continue;
        return call();
      }
      if (!nested) continue;
      ExprPtr c = condition();
      return Stmt::if_then_else(std::move(c), ret(), Stmt::skip());
    }
  }

  StmtPtr stmts(int depth) {
    std::vector<StmtPtr> out;
    const int n = pick(1, std::max(1, cfg_.max_statements));
    for (int i = 0; i < n; ++i) out.push_back(stmt(depth));
    return seq_of(out);
  }

  FunDef leaf(const Ident& name, std::vector<Ident> params, std::size_t results) {
    FunDef f;
    f.name = name;
    f.params = params;
    f.locals = {"t", "i0", "i1", "i2"};  // i0..i2 count bounded loops
    f.result_arity = results;
    vars_ = params;
    vars_.push_back("t");
    targets_ = {"t"};
    has_stack_ = false;
    in_leaf_ = true;
    block_depth_ = 0;
    loop_level_ = 0;
    result_arity_ = results;
    std::vector<StmtPtr> body;
    body.push_back(Stmt::assign("t", Expr::var(params[0])));
    body.push_back(stmts(std::min(cfg_.max_depth, 1)));
    if (results > 0) body.push_back(Stmt::ret({expr(2)}));
    f.body = seq_of(body);
    in_leaf_ = false;
    return f;
  }

  FunDef main_function() {
    FunDef f;
    f.name = "main";
    f.result_arity = 1;
    f.stackspace = 8;
    f.locals = {"x0", "x1", "x2", "x3", "i0", "i1", "i2"};
    vars_ = {"x0", "x1", "x2", "x3"};
    targets_ = vars_;
    has_stack_ = true;
    block_depth_ = 0;
    loop_level_ = 0;
    result_arity_ = 1;
    std::vector<StmtPtr> body;
    for (int i = 0; i < 4; ++i) {
      body.push_back(Stmt::assign("x" + std::to_string(i), constant(pick(-5, 50))));
    }
    for (int k = 0; k < kScratchCells; ++k) {
      body.push_back(Stmt::store(Chunk::kInt32, scratch_cell(k), constant(pick(0, 9))));
    }
    for (int k = 0; k < 2; ++k) {
      body.push_back(Stmt::store(Chunk::kInt32, stack_cell(k), constant(pick(0, 9))));
    }
    body.push_back(stmts(cfg_.max_depth));
    body.push_back(Stmt::ret({binop(OpCode::kAdd,
                                    binop(OpCode::kXor, Expr::var("x0"), Expr::var("x1")),
                                    Expr::var("x2"))}));
    f.body = seq_of(body);
    return f;
  }

  const GenConfig& cfg_;
  std::mt19937_64 rng_;
  std::vector<Leaf> leaves_;
  std::vector<Ident> vars_;
  std::vector<Ident> targets_;
  bool has_stack_ = false;
  bool in_leaf_ = false;
  int block_depth_ = 0;
  int loop_level_ = 0;
  std::size_t result_arity_ = 0;
};

}  // namespace

Program gen_program(const GenConfig& cfg) { return Generator(cfg).program(); }

}  // namespace cminor
