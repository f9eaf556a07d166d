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

// Abstract syntax of sequential Cminor: expressions, statements, function
// definitions and programs. ASTs are immutable and shared through
// shared_ptr<const ...>.

#ifndef CMINOR_SYNTAX_H_
#define CMINOR_SYNTAX_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cminor/memory.h"
#include "cminor/values.h"

namespace cminor {

using Ident = std::string;

struct Assertion;
using AssertionPtr = std::shared_ptr<const Assertion>;

enum class Comparison : std::uint8_t { kEq, kNe, kLt, kLe, kGt, kGe };

// 34 operator constructors (comparisons are parameterized by Comparison).
enum class OpCode : std::uint8_t {
  kIntConst,
  kFloatConst,
  kAddrSymbol,
  kAddrStack,
  kAdd,
  kSub,
  kMul,
  kDivs,
  kDivu,
  kMods,
  kModu,
  kAnd,
  kOr,
  kXor,
  kShl,
  kShrs,
  kShru,
  kNeg,
  kNotInt,
  kCmp,
  kCmpu,
  kCmpf,
  kNegf,
  kAddf,
  kSubf,
  kMulf,
  kDivf,
  kIntOfFloat,
  kFloatOfInt,
  kFloatOfIntu,
  kCast8s,
  kCast8u,
  kCast16s,
  kCast16u,
};

inline constexpr int kOpCodeCount = 34;

struct Op {
  OpCode code = OpCode::kAdd;
  Int32 int_arg;           // kIntConst, kAddrStack
  double float_arg = 0.0;  // kFloatConst
  Ident symbol;            // kAddrSymbol
  Comparison cmp = Comparison::kEq;

  static Op simple(OpCode code) { return Op{code, {}, 0.0, {}, Comparison::kEq}; }
  static Op int_const(Int32 i) { return Op{OpCode::kIntConst, i, 0.0, {}, Comparison::kEq}; }
  static Op float_const(double f) {
    return Op{OpCode::kFloatConst, {}, f, {}, Comparison::kEq};
  }
  static Op addr_symbol(Ident id) {
    return Op{OpCode::kAddrSymbol, {}, 0.0, std::move(id), Comparison::kEq};
  }
  static Op addr_stack(Int32 ofs) { return Op{OpCode::kAddrStack, ofs, 0.0, {}, Comparison::kEq}; }
  static Op compare(OpCode code, Comparison c) { return Op{code, {}, 0.0, {}, c}; }

  friend bool operator==(const Op& a, const Op& b);
};

// Number of arguments the operator consumes.
std::size_t op_arity(OpCode code);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

enum class ExprKind : std::uint8_t {
  kVal,    // Eval(v)
  kVar,    // Evar(x)
  kOp,     // Eop(op, args)
  kLoad,   // Eload(ch, addr)
  kLogic,  // logic variable; only produced inside assertions
};

struct Expr {
  ExprKind kind = ExprKind::kVal;
  Value value;
  Ident name;
  Op op;
  std::vector<ExprPtr> args;
  Chunk chunk = Chunk::kInt32;

  static ExprPtr val(const Value& v);
  static ExprPtr var(Ident x);
  static ExprPtr make_op(Op op, std::vector<ExprPtr> args);
  static ExprPtr load(Chunk ch, ExprPtr addr);
  static ExprPtr logic(Ident x);
};

bool operator==(const Expr& a, const Expr& b);
bool same_expr(const ExprPtr& a, const ExprPtr& b);

// No Eload anywhere in e.
bool pure(const Expr& e);
void collect_vars(const Expr& e, std::set<Ident>& out);
void collect_logic_vars(const Expr& e, std::set<Ident>& out);

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

enum class StmtKind : std::uint8_t {
  kAssign,
  kStore,
  kLoop,
  kBlock,
  kExit,
  kCall,
  kReturn,
  kSeq,
  kIf,
  kSkip,
  kAnnot,
};

// Arity tag carried by calls. Purely structural.
struct Signature {
  std::size_t args = 0;
  std::size_t results = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

struct Stmt {
  StmtKind kind = StmtKind::kSkip;
  Ident var;                 // kAssign
  Chunk chunk = Chunk::kInt32;  // kStore
  ExprPtr e1;                // assign rhs, store address, if condition, call target
  ExprPtr e2;                // store value
  StmtPtr s1;                // seq first, if-then, loop/block/annot body
  StmtPtr s2;                // seq second, if-else
  std::uint32_t exit_level = 0;
  std::vector<Ident> results;  // call result variables
  Signature sig;
  std::vector<ExprPtr> args;   // call arguments, returned expressions
  // Loop invariant, block exit condition, or the asserted condition of kAnnot.
  AssertionPtr annotation;

  static StmtPtr assign(Ident x, ExprPtr e);
  static StmtPtr store(Chunk ch, ExprPtr addr, ExprPtr value);
  static StmtPtr loop(StmtPtr body, AssertionPtr invariant = nullptr);
  static StmtPtr block(StmtPtr body, AssertionPtr exit_condition = nullptr);
  static StmtPtr exit(std::uint32_t n);
  static StmtPtr call(std::vector<Ident> results, ExprPtr target,
                      std::vector<ExprPtr> args);
  static StmtPtr ret(std::vector<ExprPtr> values);
  static StmtPtr seq(StmtPtr first, StmtPtr second);
  static StmtPtr if_then_else(ExprPtr cond, StmtPtr then_s, StmtPtr else_s);
  static StmtPtr skip();
  static StmtPtr annot(AssertionPtr a, StmtPtr body);
};

bool operator==(const Stmt& a, const Stmt& b);
bool same_stmt(const StmtPtr& a, const StmtPtr& b);

// Right-nested sequence of the list; skip for an empty list.
StmtPtr seq_of(const std::vector<StmtPtr>& stmts);
// Inverse of seq_of on right-nested sequences: the top-level statement list.
std::vector<StmtPtr> flatten_seq(const StmtPtr& s);

struct FunDef {
  Ident name;
  std::vector<Ident> params;
  std::vector<Ident> locals;
  std::size_t result_arity = 0;
  std::int64_t stackspace = 0;
  StmtPtr body;
  AssertionPtr precondition;   // "requires", may be null
  AssertionPtr postcondition;  // "ensures", over result variables $0, $1...

  bool annotated() const;
};

bool operator==(const FunDef& a, const FunDef& b);

enum class GlobalKind : std::uint8_t { kData, kFunction };

struct GlobalDecl {
  Ident name;
  GlobalKind kind = GlobalKind::kData;
  std::int64_t size = 0;  // kData only
  BlockId block;
};

// The global environment: names to blocks, function blocks to definitions.
// Declarations receive block ids 0, 1, 2... in declaration order, and
// initial_memory() allocates them in that same order.
class Program {
 public:
  Program() = default;

  // Throws Error on duplicate global names.
  void add_global(const Ident& name, std::int64_t size);
  void add_function(FunDef f);
  void set_gamma(AssertionPtr gamma) { gamma_ = std::move(gamma); }

  const std::vector<GlobalDecl>& decls() const { return decls_; }
  const std::vector<std::shared_ptr<const FunDef>>& functions() const {
    return functions_;
  }
  const AssertionPtr& gamma() const { return gamma_; }

  std::optional<BlockId> find_global(const Ident& name) const;
  std::shared_ptr<const FunDef> function_at(BlockId b) const;
  std::shared_ptr<const FunDef> find_function(const Ident& name) const;

  // "main" when defined, else the first function, else empty.
  Ident entry() const;

  // Globals data blocks as Uninit, function blocks as empty [0, 0) blocks.
  Memory initial_memory() const;

  // Every literal value appearing in a function body or annotation, in
  // first-occurrence order without duplicates.
  std::vector<Value> literals() const;

 private:
  std::vector<GlobalDecl> decls_;
  std::vector<std::shared_ptr<const FunDef>> functions_;
  std::map<Ident, BlockId> by_name_;
  std::map<std::uint32_t, std::shared_ptr<const FunDef>> by_block_;
  AssertionPtr gamma_;
};

bool operator==(const Program& a, const Program& b);

// Static well-formedness beyond parsing: parameter/local disjointness and
// that every Evar names a parameter or local. Throws Error.
void validate_function(const FunDef& f);

void collect_literals(const Expr& e, std::vector<Value>& out);
void collect_literals(const Stmt& s, std::vector<Value>& out);

}  // namespace cminor

#endif  // CMINOR_SYNTAX_H_
