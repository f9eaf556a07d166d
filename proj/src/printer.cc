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

#include <string>

#include "cminor/assertions.h"
#include "cminor/parser.h"

namespace cminor {
namespace {

constexpr int kUnaryLevel = 9;

std::string_view cmp_text(Comparison c) {
  switch (c) {
    case Comparison::kEq: return "==";
    case Comparison::kNe: return "!=";
    case Comparison::kLt: return "<";
    case Comparison::kLe: return "<=";
    case Comparison::kGt: return ">";
    case Comparison::kGe: return ">=";
  }
  return "?";
}

// Surface text and precedence of binary operators; level 0 for the rest.
std::pair<std::string, int> binary_op(const Op& op) {
  switch (op.code) {
    case OpCode::kOr: return {"|", 1};
    case OpCode::kXor: return {"^", 2};
    case OpCode::kAnd: return {"&", 3};
    case OpCode::kCmp:
    case OpCode::kCmpu:
    case OpCode::kCmpf: {
      std::string t(cmp_text(op.cmp));
      if (op.code == OpCode::kCmpu) t += "u";
      if (op.code == OpCode::kCmpf) t += "f";
      bool eq = op.cmp == Comparison::kEq || op.cmp == Comparison::kNe;
      return {t, eq ? 4 : 5};
    }
    case OpCode::kShl: return {"<<", 6};
    case OpCode::kShrs: return {">>", 6};
    case OpCode::kShru: return {">>u", 6};
    case OpCode::kAdd: return {"+", 7};
    case OpCode::kSub: return {"-", 7};
    case OpCode::kAddf: return {"+f", 7};
    case OpCode::kSubf: return {"-f", 7};
    case OpCode::kMul: return {"*", 8};
    case OpCode::kDivs: return {"/", 8};
    case OpCode::kMods: return {"%", 8};
    case OpCode::kDivu: return {"/u", 8};
    case OpCode::kModu: return {"%u", 8};
    case OpCode::kMulf: return {"*f", 8};
    case OpCode::kDivf: return {"/f", 8};
    default: return {"", 0};
  }
}

std::string_view unary_fn(OpCode code) {
  switch (code) {
    case OpCode::kNegf: return "negf";
    case OpCode::kCast8s: return "int8s";
    case OpCode::kCast8u: return "int8u";
    case OpCode::kCast16s: return "int16s";
    case OpCode::kCast16u: return "int16u";
    case OpCode::kIntOfFloat: return "intoffloat";
    case OpCode::kFloatOfInt: return "floatofint";
    case OpCode::kFloatOfIntu: return "floatofintu";
    default: return "";
  }
}

// `guard_star` parenthesizes multiplications that would otherwise be read
// as a separating conjunction inside an assertion.
std::string expr_text(const Expr& e, int min_level, bool guard_star) {
  switch (e.kind) {
    case ExprKind::kVal:
      return to_string(e.value);
    case ExprKind::kVar:
    case ExprKind::kLogic:
      return e.name;
    case ExprKind::kLoad:
      return std::string(chunk_name(e.chunk)) + "[" + expr_text(*e.args[0], 0, false) + "]";
    case ExprKind::kOp:
      break;
  }
  const Op& op = e.op;
  switch (op.code) {
    case OpCode::kIntConst:
      return "const(" + to_string(Value::integer(op.int_arg)) + ")";
    case OpCode::kFloatConst:
      return "const(" + format_double(op.float_arg) + ")";
    case OpCode::kAddrSymbol:
      return "&" + op.symbol;
    case OpCode::kAddrStack:
      return "stack(" + std::to_string(op.int_arg.signed_value()) + ")";
    case OpCode::kNeg:
      return "-(" + expr_text(*e.args[0], 0, false) + ")";
    case OpCode::kNotInt: {
      std::string s = "~" + expr_text(*e.args[0], kUnaryLevel, guard_star);
      return min_level > kUnaryLevel ? "(" + s + ")" : s;
    }
    default:
      break;
  }
  if (auto fn = unary_fn(op.code); !fn.empty()) {
    return std::string(fn) + "(" + expr_text(*e.args[0], 0, false) + ")";
  }
  auto [text, level] = binary_op(op);
  if (guard_star && op.code == OpCode::kMul) {
    return "(" + expr_text(e, 0, false) + ")";
  }
  std::string s = expr_text(*e.args[0], level, guard_star) + " " + text + " " +
                  expr_text(*e.args[1], level + 1, guard_star);
  return level < min_level ? "(" + s + ")" : s;
}

enum AssertLevel { kExistsLevel, kImpLevel, kOrLevel, kAndLevel, kStarLevel, kNotLevel, kAtomLevel };

std::string term_text(const ValueTerm& t) {
  return t.is_logic ? t.name : to_string(t.value);
}

std::string assertion_text(const Assertion& a, int min_level) {
  auto wrap = [&](int level, std::string s) {
    return level < min_level ? "(" + s + ")" : s;
  };
  auto lhs = [](const Expr& e) { return expr_text(e, 0, true); };
  switch (a.kind) {
    case AssertionKind::kEmp:
      return "emp";
    case AssertionKind::kProp:
      if (a.e1->kind == ExprKind::kVal && a.e1->value == Value::integer(1)) return "true";
      if (a.e1->kind == ExprKind::kVal && a.e1->value == Value::integer(0)) return "false";
      return "prop(" + print_expr(*a.e1) + ")";
    case AssertionKind::kEval:
      return lhs(*a.e1) + " ==> " + term_text(a.term);
    case AssertionKind::kExpr:
      return "[" + print_expr(*a.e1) + "]";
    case AssertionKind::kDefined:
      return "defined(" + print_expr(*a.e1) + ")";
    case AssertionKind::kMapsto:
      return lhs(*a.e1) + " |->[" + std::string(chunk_name(a.chunk)) + "] " +
             expr_text(*a.e2, kUnaryLevel, true);
    case AssertionKind::kNot:
      return wrap(kNotLevel, "!" + assertion_text(*a.left, kNotLevel));
    case AssertionKind::kExists:
      // Always parenthesized below the top so the body cannot swallow what
      // follows.
      if (min_level > kExistsLevel) {
        return "(exists " + a.binder + ". " + assertion_text(*a.left, kExistsLevel) + ")";
      }
      return "exists " + a.binder + ". " + assertion_text(*a.left, kExistsLevel);
    case AssertionKind::kImp:
      return wrap(kImpLevel, assertion_text(*a.left, kImpLevel + 1) + " => " +
                                 assertion_text(*a.right, kImpLevel));
    case AssertionKind::kOr:
      return wrap(kOrLevel, assertion_text(*a.left, kOrLevel) + " || " +
                                assertion_text(*a.right, kOrLevel + 1));
    case AssertionKind::kAnd:
      return wrap(kAndLevel, assertion_text(*a.left, kAndLevel) + " && " +
                                 assertion_text(*a.right, kAndLevel + 1));
    case AssertionKind::kStar:
      return wrap(kStarLevel, assertion_text(*a.left, kStarLevel) + " * " +
                                  assertion_text(*a.right, kStarLevel + 1));
  }
  return "?";
}

std::string pad(int indent) { return std::string(static_cast<std::size_t>(indent) * 2, ' '); }

void stmt_lines(const Stmt& s, int indent, std::string& out);

void block_body(const StmtPtr& body, int indent, std::string& out) {
  if (body->kind == StmtKind::kSkip) {
    out += "{ }";
    return;
  }
  out += "{\n";
  for (const auto& item : flatten_seq(body)) stmt_lines(*item, indent + 1, out);
  out += pad(indent) + "}";
}

std::string expr_list(const std::vector<ExprPtr>& el) {
  std::string s;
  for (std::size_t i = 0; i < el.size(); ++i) {
    if (i) s += ", ";
    s += print_expr(*el[i]);
  }
  return s;
}

void stmt_lines(const Stmt& s, int indent, std::string& out) {
  out += pad(indent);
  switch (s.kind) {
    case StmtKind::kAssign:
      out += s.var + " = " + print_expr(*s.e1) + ";\n";
      return;
    case StmtKind::kStore:
      out += "store " + std::string(chunk_name(s.chunk)) + "[" + print_expr(*s.e1) +
             "] = " + print_expr(*s.e2) + ";\n";
      return;
    case StmtKind::kLoop:
      out += "loop ";
      if (s.annotation) out += "invariant " + print_assertion(*s.annotation) + " ";
      block_body(s.s1, indent, out);
      out += "\n";
      return;
    case StmtKind::kBlock:
      out += "block ";
      if (s.annotation) out += "exits " + print_assertion(*s.annotation) + " ";
      block_body(s.s1, indent, out);
      out += "\n";
      return;
    case StmtKind::kExit:
      out += "exit " + std::to_string(s.exit_level) + ";\n";
      return;
    case StmtKind::kSkip:
      out += "skip;\n";
      return;
    case StmtKind::kReturn:
      out += s.args.empty() ? "return;\n" : "return " + expr_list(s.args) + ";\n";
      return;
    case StmtKind::kCall: {
      if (!s.results.empty()) {
        out += "(";
        for (std::size_t i = 0; i < s.results.size(); ++i) {
          if (i) out += ", ";
          out += s.results[i];
        }
        out += ") = ";
      }
      const Expr& t = *s.e1;
      bool plain = t.kind == ExprKind::kVar ||
                   (t.kind == ExprKind::kOp && t.op.code == OpCode::kAddrSymbol);
      std::string target = plain ? print_expr(t) : "(" + print_expr(t) + ")";
      out += "call " + target + "(" + expr_list(s.args) + ");\n";
      return;
    }
    case StmtKind::kIf:
      out += "if (" + print_expr(*s.e1) + ") ";
      block_body(s.s1, indent, out);
      if (s.s2->kind != StmtKind::kSkip) {
        out += " else ";
        block_body(s.s2, indent, out);
      }
      out += "\n";
      return;
    case StmtKind::kAnnot:
      out += "assert " + print_assertion(*s.annotation);
      if (s.s1->kind == StmtKind::kSkip) {
        out += ";\n";
      } else {
        out += " ";
        block_body(s.s1, indent, out);
        out += "\n";
      }
      return;
    case StmtKind::kSeq:
      out += "{\n";
      for (const auto& item : flatten_seq(std::make_shared<Stmt>(s))) {
        stmt_lines(*item, indent + 1, out);
      }
      out += pad(indent) + "}\n";
      return;
  }
}

std::string ident_list(const std::vector<Ident>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += xs[i];
  }
  return s;
}

}  // namespace

std::string print_expr(const Expr& e) { return expr_text(e, 0, false); }

std::string print_assertion(const Assertion& a) { return assertion_text(a, kExistsLevel); }

std::string print_stmt(const Stmt& s, int indent) {
  std::string out;
  stmt_lines(s, indent, out);
  return out;
}

std::string print_program(const Program& p) {
  std::string out = "# cminor\n";
  if (p.gamma()) out += "\ngamma " + print_assertion(*p.gamma()) + ";\n";
  for (const auto& d : p.decls()) {
    out += "\n";
    if (d.kind == GlobalKind::kData) {
      out += "global " + d.name + "[" + std::to_string(d.size) + "];\n";
      continue;
    }
    const FunDef& f = *p.function_at(d.block);
    out += "fn " + f.name + "(" + ident_list(f.params) + ") : " +
           std::to_string(f.result_arity) + "\n";
    if (f.precondition) out += "  requires " + print_assertion(*f.precondition) + "\n";
    if (f.postcondition) out += "  ensures " + print_assertion(*f.postcondition) + "\n";
    out += "{\n";
    if (!f.locals.empty()) out += "  locals " + ident_list(f.locals) + ";\n";
    if (f.stackspace != 0) out += "  stack " + std::to_string(f.stackspace) + ";\n";
    for (const auto& item : flatten_seq(f.body)) stmt_lines(*item, 1, out);
    out += "}\n";
  }
  return out;
}

}  // namespace cminor
