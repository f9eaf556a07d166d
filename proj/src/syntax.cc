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

#include "cminor/syntax.h"

#include <algorithm>
#include <bit>

#include "cminor/assertions.h"

namespace cminor {

bool operator==(const Op& a, const Op& b) {
  if (a.code != b.code) return false;
  switch (a.code) {
    case OpCode::kIntConst:
    case OpCode::kAddrStack:
      return a.int_arg == b.int_arg;
    case OpCode::kFloatConst:
      return std::bit_cast<std::uint64_t>(a.float_arg) ==
             std::bit_cast<std::uint64_t>(b.float_arg);
    case OpCode::kAddrSymbol:
      return a.symbol == b.symbol;
    case OpCode::kCmp:
    case OpCode::kCmpu:
    case OpCode::kCmpf:
      return a.cmp == b.cmp;
    default:
      return true;
  }
}

std::size_t op_arity(OpCode code) {
  switch (code) {
    case OpCode::kIntConst:
    case OpCode::kFloatConst:
    case OpCode::kAddrSymbol:
    case OpCode::kAddrStack:
      return 0;
    case OpCode::kNeg:
    case OpCode::kNotInt:
    case OpCode::kNegf:
    case OpCode::kIntOfFloat:
    case OpCode::kFloatOfInt:
    case OpCode::kFloatOfIntu:
    case OpCode::kCast8s:
    case OpCode::kCast8u:
    case OpCode::kCast16s:
    case OpCode::kCast16u:
      return 1;
    default:
      return 2;
  }
}

ExprPtr Expr::val(const Value& v) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kVal;
  e->value = v;
  return e;
}

ExprPtr Expr::var(Ident x) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kVar;
  e->name = std::move(x);
  return e;
}

ExprPtr Expr::make_op(Op op, std::vector<ExprPtr> args) {
  if (args.size() != op_arity(op.code)) throw Error("operator arity mismatch");
  for (const auto& a : args) {
    if (!a) throw Error("null operand");
  }
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kOp;
  e->op = std::move(op);
  e->args = std::move(args);
  return e;
}

ExprPtr Expr::load(Chunk ch, ExprPtr addr) {
  if (!addr) throw Error("null load address");
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kLoad;
  e->chunk = ch;
  e->args.push_back(std::move(addr));
  return e;
}

ExprPtr Expr::logic(Ident x) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kLogic;
  e->name = std::move(x);
  return e;
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::kVal:
      return a.value == b.value;
    case ExprKind::kVar:
    case ExprKind::kLogic:
      return a.name == b.name;
    case ExprKind::kLoad:
      if (a.chunk != b.chunk) return false;
      break;
    case ExprKind::kOp:
      if (!(a.op == b.op)) return false;
      break;
  }
  return std::equal(a.args.begin(), a.args.end(), b.args.begin(), b.args.end(),
                    same_expr);
}

bool pure(const Expr& e) {
  if (e.kind == ExprKind::kLoad) return false;
  return std::all_of(e.args.begin(), e.args.end(),
                     [](const ExprPtr& a) { return pure(*a); });
}

void collect_vars(const Expr& e, std::set<Ident>& out) {
  if (e.kind == ExprKind::kVar) out.insert(e.name);
  for (const auto& a : e.args) collect_vars(*a, out);
}

void collect_logic_vars(const Expr& e, std::set<Ident>& out) {
  if (e.kind == ExprKind::kLogic) out.insert(e.name);
  for (const auto& a : e.args) collect_logic_vars(*a, out);
}

namespace {

std::shared_ptr<Stmt> new_stmt(StmtKind kind) {
  auto s = std::make_shared<Stmt>();
  s->kind = kind;
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(what);
}

}  // namespace

StmtPtr Stmt::assign(Ident x, ExprPtr e) {
  require(e != nullptr, "null expression");
  auto s = new_stmt(StmtKind::kAssign);
  s->var = std::move(x);
  s->e1 = std::move(e);
  return s;
}

StmtPtr Stmt::store(Chunk ch, ExprPtr addr, ExprPtr value) {
  require(addr && value, "null expression");
  auto s = new_stmt(StmtKind::kStore);
  s->chunk = ch;
  s->e1 = std::move(addr);
  s->e2 = std::move(value);
  return s;
}

StmtPtr Stmt::loop(StmtPtr body, AssertionPtr invariant) {
  require(body != nullptr, "null statement");
  auto s = new_stmt(StmtKind::kLoop);
  s->s1 = std::move(body);
  s->annotation = std::move(invariant);
  return s;
}

StmtPtr Stmt::block(StmtPtr body, AssertionPtr exit_condition) {
  require(body != nullptr, "null statement");
  auto s = new_stmt(StmtKind::kBlock);
  s->s1 = std::move(body);
  s->annotation = std::move(exit_condition);
  return s;
}

StmtPtr Stmt::exit(std::uint32_t n) {
  auto s = new_stmt(StmtKind::kExit);
  s->exit_level = n;
  return s;
}

StmtPtr Stmt::call(std::vector<Ident> results, ExprPtr target,
                   std::vector<ExprPtr> args) {
  require(target != nullptr, "null call target");
  auto s = new_stmt(StmtKind::kCall);
  s->sig = Signature{args.size(), results.size()};
  s->results = std::move(results);
  s->e1 = std::move(target);
  s->args = std::move(args);
  return s;
}

StmtPtr Stmt::ret(std::vector<ExprPtr> values) {
  auto s = new_stmt(StmtKind::kReturn);
  s->args = std::move(values);
  return s;
}

StmtPtr Stmt::seq(StmtPtr first, StmtPtr second) {
  require(first && second, "null statement");
  auto s = new_stmt(StmtKind::kSeq);
  s->s1 = std::move(first);
  s->s2 = std::move(second);
  return s;
}

StmtPtr Stmt::if_then_else(ExprPtr cond, StmtPtr then_s, StmtPtr else_s) {
  require(cond && then_s && else_s, "null if component");
  auto s = new_stmt(StmtKind::kIf);
  s->e1 = std::move(cond);
  s->s1 = std::move(then_s);
  s->s2 = std::move(else_s);
  return s;
}

StmtPtr Stmt::skip() {
  static const StmtPtr kSkip = new_stmt(StmtKind::kSkip);
  return kSkip;
}

StmtPtr Stmt::annot(AssertionPtr a, StmtPtr body) {
  require(a && body, "null annotation");
  auto s = new_stmt(StmtKind::kAnnot);
  s->annotation = std::move(a);
  s->s1 = std::move(body);
  return s;
}

bool same_stmt(const StmtPtr& a, const StmtPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Stmt& a, const Stmt& b) {
  if (a.kind != b.kind) return false;
  auto same_args = [&] {
    return std::equal(a.args.begin(), a.args.end(), b.args.begin(),
                      b.args.end(), same_expr);
  };
  switch (a.kind) {
    case StmtKind::kAssign:
      return a.var == b.var && same_expr(a.e1, b.e1);
    case StmtKind::kStore:
      return a.chunk == b.chunk && same_expr(a.e1, b.e1) && same_expr(a.e2, b.e2);
    case StmtKind::kLoop:
    case StmtKind::kBlock:
    case StmtKind::kAnnot:
      return same_assertion(a.annotation, b.annotation) && same_stmt(a.s1, b.s1);
    case StmtKind::kExit:
      return a.exit_level == b.exit_level;
    case StmtKind::kCall:
      return a.results == b.results && a.sig == b.sig && same_expr(a.e1, b.e1) &&
             same_args();
    case StmtKind::kReturn:
      return same_args();
    case StmtKind::kSeq:
      return same_stmt(a.s1, b.s1) && same_stmt(a.s2, b.s2);
    case StmtKind::kIf:
      return same_expr(a.e1, b.e1) && same_stmt(a.s1, b.s1) &&
             same_stmt(a.s2, b.s2);
    case StmtKind::kSkip:
      return true;
  }
  return false;
}

StmtPtr seq_of(const std::vector<StmtPtr>& stmts) {
  if (stmts.empty()) return Stmt::skip();
  StmtPtr out = stmts.back();
  for (auto it = stmts.rbegin() + 1; it != stmts.rend(); ++it) {
    out = Stmt::seq(*it, out);
  }
  return out;
}

std::vector<StmtPtr> flatten_seq(const StmtPtr& s) {
  std::vector<StmtPtr> out;
  StmtPtr cur = s;
  while (cur->kind == StmtKind::kSeq) {
    out.push_back(cur->s1);
    cur = cur->s2;
  }
  out.push_back(cur);
  return out;
}

bool FunDef::annotated() const {
  return precondition != nullptr || postcondition != nullptr;
}

bool operator==(const FunDef& a, const FunDef& b) {
  return a.name == b.name && a.params == b.params && a.locals == b.locals &&
         a.result_arity == b.result_arity && a.stackspace == b.stackspace &&
         same_stmt(a.body, b.body) &&
         same_assertion(a.precondition, b.precondition) &&
         same_assertion(a.postcondition, b.postcondition);
}

void Program::add_global(const Ident& name, std::int64_t size) {
  if (size < 0) throw Error("negative global size");
  if (by_name_.count(name)) throw Error("duplicate global: " + name);
  BlockId b{static_cast<std::uint32_t>(decls_.size())};
  decls_.push_back(GlobalDecl{name, GlobalKind::kData, size, b});
  by_name_[name] = b;
}

void Program::add_function(FunDef f) {
  if (by_name_.count(f.name)) throw Error("duplicate global: " + f.name);
  if (!f.body) f.body = Stmt::skip();
  BlockId b{static_cast<std::uint32_t>(decls_.size())};
  decls_.push_back(GlobalDecl{f.name, GlobalKind::kFunction, 0, b});
  by_name_[f.name] = b;
  auto fp = std::make_shared<const FunDef>(std::move(f));
  functions_.push_back(fp);
  by_block_[b.index] = fp;
}

std::optional<BlockId> Program::find_global(const Ident& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::shared_ptr<const FunDef> Program::function_at(BlockId b) const {
  auto it = by_block_.find(b.index);
  return it == by_block_.end() ? nullptr : it->second;
}

std::shared_ptr<const FunDef> Program::find_function(const Ident& name) const {
  auto b = find_global(name);
  return b ? function_at(*b) : nullptr;
}

Ident Program::entry() const {
  if (find_function("main")) return "main";
  if (!functions_.empty()) return functions_.front()->name;
  return {};
}

Memory Program::initial_memory() const {
  Memory m;
  for (const auto& d : decls_) {
    m.alloc_in_place(0, d.kind == GlobalKind::kData ? d.size : 0);
  }
  return m;
}

namespace {

void add_unique(std::vector<Value>& out, const Value& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

}  // namespace

std::vector<Value> Program::literals() const {
  std::vector<Value> raw;
  if (gamma_) collect_literals(*gamma_, raw);
  for (const auto& f : functions_) {
    if (f->precondition) collect_literals(*f->precondition, raw);
    if (f->postcondition) collect_literals(*f->postcondition, raw);
    collect_literals(*f->body, raw);
  }
  std::vector<Value> out;
  for (const Value& v : raw) add_unique(out, v);
  return out;
}

bool operator==(const Program& a, const Program& b) {
  if (a.decls().size() != b.decls().size()) return false;
  for (std::size_t i = 0; i < a.decls().size(); ++i) {
    const auto& x = a.decls()[i];
    const auto& y = b.decls()[i];
    if (x.name != y.name || x.kind != y.kind || x.size != y.size) return false;
    if (x.kind == GlobalKind::kFunction &&
        !(*a.function_at(x.block) == *b.function_at(y.block))) {
      return false;
    }
  }
  return same_assertion(a.gamma(), b.gamma());
}

namespace {

void check_names(const Stmt& s, const std::set<Ident>& vars) {
  auto check_expr = [&](const ExprPtr& e) {
    if (!e) return;
    std::set<Ident> used;
    collect_vars(*e, used);
    for (const auto& x : used) {
      if (!vars.count(x)) throw Error("unknown variable: " + x);
    }
  };
  auto check_var = [&](const Ident& x) {
    if (!vars.count(x)) throw Error("unknown variable: " + x);
  };
  switch (s.kind) {
    case StmtKind::kAssign:
      check_var(s.var);
      check_expr(s.e1);
      break;
    case StmtKind::kCall:
      for (const auto& x : s.results) check_var(x);
      check_expr(s.e1);
      for (const auto& a : s.args) check_expr(a);
      break;
    case StmtKind::kReturn:
      for (const auto& a : s.args) check_expr(a);
      break;
    default:
      check_expr(s.e1);
      check_expr(s.e2);
      break;
  }
  if (s.annotation) {
    for (const auto& x : assertion_free_vars(*s.annotation)) check_var(x);
  }
  if (s.s1) check_names(*s.s1, vars);
  if (s.s2) check_names(*s.s2, vars);
}

}  // namespace

void validate_function(const FunDef& f) {
  std::set<Ident> vars;
  for (const auto& x : f.params) {
    if (!vars.insert(x).second) throw Error("duplicate variable: " + x);
  }
  for (const auto& x : f.locals) {
    if (!vars.insert(x).second) throw Error("duplicate variable: " + x);
  }
  if (f.stackspace < 0) throw Error("negative stack size");
  if (f.body) check_names(*f.body, vars);
  for (const auto* a : {&f.precondition, &f.postcondition}) {
    if (!*a) continue;
    for (const auto& x : assertion_free_vars(**a)) {
      if (!vars.count(x)) throw Error("unknown variable: " + x);
    }
  }
}

void collect_literals(const Expr& e, std::vector<Value>& out) {
  if (e.kind == ExprKind::kVal) out.push_back(e.value);
  if (e.kind == ExprKind::kOp) {
    if (e.op.code == OpCode::kIntConst) out.push_back(Value::integer(e.op.int_arg));
    if (e.op.code == OpCode::kFloatConst) {
      out.push_back(Value::floating(e.op.float_arg));
    }
  }
  for (const auto& a : e.args) collect_literals(*a, out);
}

void collect_literals(const Stmt& s, std::vector<Value>& out) {
  if (s.e1) collect_literals(*s.e1, out);
  if (s.e2) collect_literals(*s.e2, out);
  for (const auto& a : s.args) collect_literals(*a, out);
  if (s.annotation) collect_literals(*s.annotation, out);
  if (s.s1) collect_literals(*s.s1, out);
  if (s.s2) collect_literals(*s.s2, out);
}

}  // namespace cminor
