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

#include "cminor/parser.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <limits>

#include "cminor/assertions.h"

namespace cminor {

SyntaxError::SyntaxError(int line, int column, const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

enum class Tok : std::uint8_t { kIdent, kInt, kFloat, kResult, kPunct, kEnd };

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int col = 1;
  std::uint64_t int_value = 0;
  double float_value = 0.0;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Longest first. Entries ending in a letter only match when no identifier
// character follows.
constexpr std::string_view kPuncts[] = {
    "|->", "==>", ">>u", "==u", "!=u", "<=u", ">=u", "==f", "!=f", "<=f",
    ">=f", "==",  "!=",  "<=",  ">=",  "=>",  "&&",  "||",  "<<",  ">>",
    "/u",  "%u",  "<u",  ">u",  "<f",  ">f",  "+f",  "-f",  "*f",  "/f",
    "(",   ")",   "{",   "}",   "[",   "]",   ";",   ",",   ".",   "=",
    "<",   ">",   "+",   "-",   "*",   "/",   "%",   "&",   "|",   "^",
    "~",   "!",   ":",
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) advance(1);
      t.kind = Tok::kIdent;
      t.text = src.substr(start, i - start);
    } else if (c == '$') {
      advance(1);
      if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i]))) {
        throw SyntaxError(t.line, t.col, "expected digits after '$'");
      }
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        advance(1);
      }
      t.kind = Tok::kResult;
      t.text = src.substr(start, i - start);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      bool is_float = false;
      if (c == '0' && i + 1 < src.size() && (src[i + 1] == 'x' || src[i + 1] == 'X')) {
        advance(2);
        while (i < src.size() && std::isxdigit(static_cast<unsigned char>(src[i]))) {
          advance(1);
        }
      } else {
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
          advance(1);
        }
        if (i + 1 < src.size() && src[i] == '.' &&
            std::isdigit(static_cast<unsigned char>(src[i + 1]))) {
          is_float = true;
          advance(1);
          while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
            advance(1);
          }
        }
        if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
          std::size_t j = i + 1;
          if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
          if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
            is_float = true;
            advance(j - i);
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
              advance(1);
            }
          }
        }
      }
      if (i < src.size() && ident_char(src[i])) {
        throw SyntaxError(t.line, t.col, "malformed number");
      }
      t.text = src.substr(start, i - start);
      if (is_float) {
        t.kind = Tok::kFloat;
        t.float_value = std::strtod(t.text.c_str(), nullptr);
      } else {
        t.kind = Tok::kInt;
        bool hex = t.text.size() > 2 && (t.text[1] == 'x' || t.text[1] == 'X');
        const char* b = t.text.data() + (hex ? 2 : 0);
        auto [p, ec] = std::from_chars(b, t.text.data() + t.text.size(),
                                       t.int_value, hex ? 16 : 10);
        if (ec != std::errc() || (hex && t.text.size() == 2)) {
          throw SyntaxError(t.line, t.col, "integer literal out of range");
        }
      }
    } else {
      bool matched = false;
      for (std::string_view p : kPuncts) {
        if (src.compare(i, p.size(), p) != 0) continue;
        if (std::isalpha(static_cast<unsigned char>(p.back())) &&
            i + p.size() < src.size() && ident_char(src[i + p.size()])) {
          continue;
        }
        t.kind = Tok::kPunct;
        t.text = std::string(p);
        advance(p.size());
        matched = true;
        break;
      }
      if (!matched) {
        throw SyntaxError(t.line, t.col,
                          std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct BinOp {
  std::string_view text;
  int level;
  OpCode code;
  Comparison cmp;
};

constexpr BinOp kBinOps[] = {
    {"|", 1, OpCode::kOr, Comparison::kEq},
    {"^", 2, OpCode::kXor, Comparison::kEq},
    {"&", 3, OpCode::kAnd, Comparison::kEq},
    {"==", 4, OpCode::kCmp, Comparison::kEq},
    {"!=", 4, OpCode::kCmp, Comparison::kNe},
    {"==u", 4, OpCode::kCmpu, Comparison::kEq},
    {"!=u", 4, OpCode::kCmpu, Comparison::kNe},
    {"==f", 4, OpCode::kCmpf, Comparison::kEq},
    {"!=f", 4, OpCode::kCmpf, Comparison::kNe},
    {"<", 5, OpCode::kCmp, Comparison::kLt},
    {"<=", 5, OpCode::kCmp, Comparison::kLe},
    {">", 5, OpCode::kCmp, Comparison::kGt},
    {">=", 5, OpCode::kCmp, Comparison::kGe},
    {"<u", 5, OpCode::kCmpu, Comparison::kLt},
    {"<=u", 5, OpCode::kCmpu, Comparison::kLe},
    {">u", 5, OpCode::kCmpu, Comparison::kGt},
    {">=u", 5, OpCode::kCmpu, Comparison::kGe},
    {"<f", 5, OpCode::kCmpf, Comparison::kLt},
    {"<=f", 5, OpCode::kCmpf, Comparison::kLe},
    {">f", 5, OpCode::kCmpf, Comparison::kGt},
    {">=f", 5, OpCode::kCmpf, Comparison::kGe},
    {"<<", 6, OpCode::kShl, Comparison::kEq},
    {">>", 6, OpCode::kShrs, Comparison::kEq},
    {">>u", 6, OpCode::kShru, Comparison::kEq},
    {"+", 7, OpCode::kAdd, Comparison::kEq},
    {"-", 7, OpCode::kSub, Comparison::kEq},
    {"+f", 7, OpCode::kAddf, Comparison::kEq},
    {"-f", 7, OpCode::kSubf, Comparison::kEq},
    {"*", 8, OpCode::kMul, Comparison::kEq},
    {"/", 8, OpCode::kDivs, Comparison::kEq},
    {"%", 8, OpCode::kMods, Comparison::kEq},
    {"/u", 8, OpCode::kDivu, Comparison::kEq},
    {"%u", 8, OpCode::kModu, Comparison::kEq},
    {"*f", 8, OpCode::kMulf, Comparison::kEq},
    {"/f", 8, OpCode::kDivf, Comparison::kEq},
};
constexpr int kMaxLevel = 8;

struct UnaryFn {
  std::string_view name;
  OpCode code;
};

constexpr UnaryFn kUnaryFns[] = {
    {"negf", OpCode::kNegf},           {"int8s", OpCode::kCast8s},
    {"int8u", OpCode::kCast8u},        {"int16s", OpCode::kCast16s},
    {"int16u", OpCode::kCast16u},      {"intoffloat", OpCode::kIntOfFloat},
    {"floatofint", OpCode::kFloatOfInt}, {"floatofintu", OpCode::kFloatOfIntu},
};

enum class NameMode : std::uint8_t { kProgram, kAssertion, kProp };

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Program program();
  AssertionPtr standalone_assertion(const AssertionScope& scope);

 private:
  // Token access.
  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at_end() const { return peek().kind == Tok::kEnd; }
  bool is_punct(std::string_view p, std::size_t k = 0) const {
    return peek(k).kind == Tok::kPunct && peek(k).text == p;
  }
  bool is_word(std::string_view w, std::size_t k = 0) const {
    return peek(k).kind == Tok::kIdent && peek(k).text == w;
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool accept(std::string_view p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  bool accept_word(std::string_view w) {
    if (!is_word(w)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw SyntaxError(t.line, t.col, msg);
  }
  [[noreturn]] void fail_here(const std::string& msg) const { fail(peek(), msg); }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::kEnd) return "end of input";
    return "'" + t.text + "'";
  }
  void expect(std::string_view p) {
    if (!accept(p)) fail_here("expected '" + std::string(p) + "', found " + describe(peek()));
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) {
      fail_here("expected '" + std::string(w) + "', found " + describe(peek()));
    }
  }
  Ident ident() {
    if (peek().kind != Tok::kIdent) fail_here("expected identifier, found " + describe(peek()));
    return next().text;
  }
  std::uint64_t nat() {
    if (peek().kind != Tok::kInt) fail_here("expected natural number, found " + describe(peek()));
    return next().int_value;
  }
  std::vector<Ident> ident_list(std::string_view close);

  // Expressions.
  ExprPtr expr() { return binary(1); }
  ExprPtr binary(int level);
  ExprPtr unary();
  ExprPtr primary();
  Value signed_literal();
  ExprPtr name(const Token& t);
  ExprPtr call_target();

  // Statements.
  StmtPtr stmt_list_block();
  std::vector<StmtPtr> stmts_until_brace();
  StmtPtr stmt();
  Chunk chunk();

  // Assertions.
  AssertionPtr assertion() { return imp(); }
  AssertionPtr body_assertion() {
    NameMode saved = mode_;
    mode_ = NameMode::kAssertion;
    AssertionPtr a = assertion();
    mode_ = saved;
    return a;
  }
  AssertionPtr imp();
  AssertionPtr disj();
  AssertionPtr conj();
  AssertionPtr star();
  AssertionPtr negation();
  AssertionPtr atom();
  ValueTerm value_term();
  AssertionPtr parse_assertion_at(std::size_t pos, const AssertionScope& scope);
  std::size_t skip_assertion();

  template <typename F>
  auto build(const Token& at, F&& make) -> decltype(make()) {
    try {
      return make();
    } catch (const SyntaxError&) {
      throw;
    } catch (const Error& e) {
      fail(at, e.what());
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  NameMode mode_ = NameMode::kProgram;
  bool no_star_ = false;
  const std::set<Ident>* vars_ = nullptr;  // function variables
  const AssertionScope* scope_ = nullptr;
  std::vector<Ident> bound_;
  std::vector<std::pair<Ident, Token>> symbol_uses_;
};

std::vector<Ident> Parser::ident_list(std::string_view close) {
  std::vector<Ident> out;
  if (is_punct(close)) return out;
  out.push_back(ident());
  while (accept(",")) out.push_back(ident());
  return out;
}

ExprPtr Parser::binary(int level) {
  if (level > kMaxLevel) return unary();
  ExprPtr lhs = binary(level + 1);
  for (;;) {
    const Token& t = peek();
    if (t.kind != Tok::kPunct) return lhs;
    const BinOp* op = nullptr;
    for (const auto& b : kBinOps) {
      if (b.level == level && b.text == t.text) op = &b;
    }
    if (op == nullptr) return lhs;
    if (op->text == "*" && no_star_) return lhs;
    next();
    ExprPtr rhs = binary(level + 1);
    lhs = Expr::make_op(Op::compare(op->code, op->cmp), {lhs, rhs});
  }
}

ExprPtr Parser::unary() {
  if (is_punct("-")) {
    const Token& t = peek(1);
    if (t.kind == Tok::kInt || t.kind == Tok::kFloat || is_word("inf", 1)) {
      return Expr::val(signed_literal());
    }
    next();
    return Expr::make_op(Op::simple(OpCode::kNeg), {unary()});
  }
  if (accept("~")) return Expr::make_op(Op::simple(OpCode::kNotInt), {unary()});
  return primary();
}

// Integer, float, nan, inf, undef or ptr(b, ofs), with an optional leading
// minus on numbers.
Value Parser::signed_literal() {
  const Token& start = peek();
  bool neg = accept("-");
  const Token& t = peek();
  if (t.kind == Tok::kInt) {
    next();
    std::uint64_t n = t.int_value;
    if (neg ? n > 0x80000000ull : n > 0xFFFFFFFFull) {
      fail(t, "integer literal out of range");
    }
    auto bits = static_cast<std::uint32_t>(n);
    return Value::integer(neg ? -Int32(bits) : Int32(bits));
  }
  if (t.kind == Tok::kFloat) {
    next();
    return Value::floating(neg ? -t.float_value : t.float_value);
  }
  if (is_word("inf")) {
    next();
    double inf = std::numeric_limits<double>::infinity();
    return Value::floating(neg ? -inf : inf);
  }
  if (!neg && is_word("nan")) {
    next();
    return Value::floating(std::numeric_limits<double>::quiet_NaN());
  }
  if (!neg && is_word("undef")) {
    next();
    return Value::undef();
  }
  if (!neg && is_word("ptr") && is_punct("(", 1)) {
    next();
    next();
    std::uint64_t b = nat();
    if (b > 0xFFFFFFFFull) fail(start, "block number out of range");
    expect(",");
    Value ofs = signed_literal();
    if (!ofs.is_int()) fail(start, "pointer offset must be an integer");
    expect(")");
    return Value::pointer(BlockId{static_cast<std::uint32_t>(b)}, ofs.as_int());
  }
  fail(start, "expected literal, found " + describe(start));
}

ExprPtr Parser::name(const Token& t) {
  switch (mode_) {
    case NameMode::kProgram:
      if (vars_ != nullptr && !vars_->count(t.text)) {
        fail(t, "unknown variable '" + t.text + "'");
      }
      return Expr::var(t.text);
    case NameMode::kProp:
      return Expr::logic(t.text);
    case NameMode::kAssertion:
      if (std::find(bound_.begin(), bound_.end(), t.text) != bound_.end()) {
        return Expr::logic(t.text);
      }
      if (scope_->program_vars.count(t.text) || !scope_->implicit_logic) {
        return Expr::var(t.text);
      }
      return Expr::logic(t.text);
  }
  return Expr::var(t.text);
}

ExprPtr Parser::primary() {
  const Token& t = peek();
  switch (t.kind) {
    case Tok::kInt:
    case Tok::kFloat:
      return Expr::val(signed_literal());
    case Tok::kResult:
      if (mode_ == NameMode::kProgram) fail(t, "result variable outside an assertion");
      next();
      return Expr::logic(t.text);
    case Tok::kPunct:
      if (accept("(")) {
        bool saved = no_star_;
        no_star_ = false;
        ExprPtr e = expr();
        no_star_ = saved;
        expect(")");
        return e;
      }
      if (accept("&")) {
        const Token& id = peek();
        Ident g = ident();
        symbol_uses_.emplace_back(g, id);
        return Expr::make_op(Op::addr_symbol(g), {});
      }
      fail(t, "expected expression, found " + describe(t));
    case Tok::kIdent:
      break;
    default:
      fail(t, "expected expression, found " + describe(t));
  }
  if (t.text == "undef" || t.text == "nan" || t.text == "inf") {
    return Expr::val(signed_literal());
  }
  if (is_punct("(", 1)) {
    if (t.text == "ptr") return Expr::val(signed_literal());
    if (t.text == "const") {
      next();
      next();
      Value v = signed_literal();
      expect(")");
      if (v.is_int()) return Expr::make_op(Op::int_const(v.as_int()), {});
      if (v.is_float()) return Expr::make_op(Op::float_const(v.as_float()), {});
      fail(t, "const expects an integer or float literal");
    }
    if (t.text == "stack") {
      next();
      next();
      Value v = signed_literal();
      expect(")");
      if (!v.is_int()) fail(t, "stack offset must be an integer");
      return Expr::make_op(Op::addr_stack(v.as_int()), {});
    }
    for (const auto& u : kUnaryFns) {
      if (t.text != u.name) continue;
      next();
      next();
      bool saved = no_star_;
      no_star_ = false;
      ExprPtr arg = expr();
      no_star_ = saved;
      expect(")");
      return Expr::make_op(Op::simple(u.code), {arg});
    }
    fail(t, "unknown operator '" + t.text + "'");
  }
  if (is_punct("[", 1)) {
    if (auto ch = chunk_from_name(t.text)) {
      next();
      next();
      bool saved = no_star_;
      no_star_ = false;
      ExprPtr addr = expr();
      no_star_ = saved;
      expect("]");
      return Expr::load(*ch, addr);
    }
  }
  next();
  return name(t);
}

ExprPtr Parser::call_target() {
  const Token& t = peek();
  if (t.kind == Tok::kIdent && !is_punct("[", 1) && vars_ != nullptr) {
    next();
    if (vars_->count(t.text)) return Expr::var(t.text);
    symbol_uses_.emplace_back(t.text, t);
    return Expr::make_op(Op::addr_symbol(t.text), {});
  }
  return primary();
}

Chunk Parser::chunk() {
  const Token& t = peek();
  if (t.kind == Tok::kIdent) {
    if (auto ch = chunk_from_name(t.text)) {
      next();
      return *ch;
    }
  }
  fail(t, "expected chunk (i8s, i8u, i16s, i16u, i32, f32, f64), found " + describe(t));
}

std::vector<StmtPtr> Parser::stmts_until_brace() {
  std::vector<StmtPtr> out;
  while (!is_punct("}")) {
    if (at_end()) fail_here("expected '}', found end of input");
    out.push_back(stmt());
  }
  return out;
}

StmtPtr Parser::stmt_list_block() {
  expect("{");
  auto list = stmts_until_brace();
  expect("}");
  return seq_of(list);
}

StmtPtr Parser::stmt() {
  const Token& t = peek();
  if (t.kind == Tok::kPunct && t.text == "{") return stmt_list_block();
  if (t.kind == Tok::kPunct && t.text == "(") {
    next();
    std::vector<Ident> results = ident_list(")");
    expect(")");
    for (const auto& x : results) {
      if (!vars_->count(x)) fail(t, "unknown variable '" + x + "'");
    }
    expect("=");
    expect_word("call");
    ExprPtr target = call_target();
    expect("(");
    std::vector<ExprPtr> args;
    if (!is_punct(")")) {
      args.push_back(expr());
      while (accept(",")) args.push_back(expr());
    }
    expect(")");
    expect(";");
    return Stmt::call(std::move(results), target, std::move(args));
  }
  if (t.kind != Tok::kIdent) fail(t, "expected statement, found " + describe(t));
  // An identifier followed by '=' is always an assignment, so statement
  // keywords stay usable as variable names.
  if (is_punct("=", 1)) {
    next();
    next();
    if (!vars_->count(t.text)) fail(t, "unknown variable '" + t.text + "'");
    ExprPtr e = expr();
    expect(";");
    return Stmt::assign(t.text, e);
  }
  const std::string& w = t.text;
  if (w == "store") {
    next();
    Chunk ch = chunk();
    expect("[");
    ExprPtr addr = expr();
    expect("]");
    expect("=");
    ExprPtr v = expr();
    expect(";");
    return Stmt::store(ch, addr, v);
  }
  if (w == "loop") {
    next();
    AssertionPtr inv;
    if (accept_word("invariant")) inv = body_assertion();
    return Stmt::loop(stmt_list_block(), inv);
  }
  if (w == "block") {
    next();
    AssertionPtr ex;
    if (accept_word("exits")) ex = body_assertion();
    return Stmt::block(stmt_list_block(), ex);
  }
  if (w == "exit") {
    next();
    std::uint64_t n = nat();
    if (n > 0xFFFFFFFFull) fail(t, "exit level out of range");
    expect(";");
    return Stmt::exit(static_cast<std::uint32_t>(n));
  }
  if (w == "skip") {
    next();
    expect(";");
    return Stmt::skip();
  }
  if (w == "return") {
    next();
    std::vector<ExprPtr> vals;
    if (!is_punct(";")) {
      vals.push_back(expr());
      while (accept(",")) vals.push_back(expr());
    }
    expect(";");
    return Stmt::ret(std::move(vals));
  }
  if (w == "if") {
    next();
    expect("(");
    ExprPtr c = expr();
    expect(")");
    StmtPtr s1 = stmt_list_block();
    StmtPtr s2 = Stmt::skip();
    if (accept_word("else")) s2 = stmt_list_block();
    return Stmt::if_then_else(c, s1, s2);
  }
  if (w == "call") {
    next();
    ExprPtr target = call_target();
    expect("(");
    std::vector<ExprPtr> args;
    if (!is_punct(")")) {
      args.push_back(expr());
      while (accept(",")) args.push_back(expr());
    }
    expect(")");
    expect(";");
    return Stmt::call({}, target, std::move(args));
  }
  if (w == "assert") {
    next();
    AssertionPtr a = body_assertion();
    if (accept(";")) return Stmt::annot(a, Stmt::skip());
    return Stmt::annot(a, stmt_list_block());
  }
  fail(t, "expected statement, found " + describe(t));
}

AssertionPtr Parser::imp() {
  AssertionPtr l = disj();
  if (accept("=>")) return Assertion::imp(l, imp());
  return l;
}

AssertionPtr Parser::disj() {
  AssertionPtr l = conj();
  while (accept("||")) l = Assertion::disj(l, conj());
  return l;
}

AssertionPtr Parser::conj() {
  AssertionPtr l = star();
  while (accept("&&")) l = Assertion::conj(l, star());
  return l;
}

AssertionPtr Parser::star() {
  AssertionPtr l = negation();
  while (accept("*")) l = Assertion::star(l, negation());
  return l;
}

AssertionPtr Parser::negation() {
  if (accept("!")) return Assertion::neg(negation());
  return atom();
}

ValueTerm Parser::value_term() {
  const Token& t = peek();
  if (t.kind == Tok::kResult) {
    next();
    return ValueTerm::logic(t.text);
  }
  if (t.kind == Tok::kIdent && t.text != "undef" && t.text != "nan" &&
      t.text != "inf" && !(t.text == "ptr" && is_punct("(", 1))) {
    next();
    return ValueTerm::logic(t.text);
  }
  return ValueTerm::literal(signed_literal());
}

AssertionPtr Parser::atom() {
  const Token& t = peek();
  if (t.kind == Tok::kIdent && !is_punct("(", 1) && !is_punct("[", 1)) {
    if (t.text == "emp") {
      next();
      return Assertion::emp();
    }
    if (t.text == "true") {
      next();
      return Assertion::truth();
    }
    if (t.text == "false") {
      next();
      return Assertion::falsity();
    }
    if (t.text == "exists") {
      next();
      Ident x = ident();
      expect(".");
      bound_.push_back(x);
      AssertionPtr body = assertion();
      bound_.pop_back();
      return Assertion::exists(x, body);
    }
  }
  if (accept("[")) {
    bool saved = no_star_;
    no_star_ = false;
    ExprPtr e = expr();
    no_star_ = saved;
    expect("]");
    return build(t, [&] { return Assertion::expr(e); });
  }
  if (t.kind == Tok::kIdent && is_punct("(", 1) &&
      (t.text == "defined" || t.text == "prop")) {
    next();
    next();
    NameMode saved_mode = mode_;
    bool saved = no_star_;
    no_star_ = false;
    if (t.text == "prop") mode_ = NameMode::kProp;
    ExprPtr e = expr();
    mode_ = saved_mode;
    no_star_ = saved;
    expect(")");
    if (t.text == "prop") return build(t, [&] { return Assertion::prop(e); });
    return build(t, [&] { return Assertion::defined(e); });
  }

  // Either "e ==> v", "e |->[ch] e", or a parenthesized assertion.
  std::size_t save = pos_;
  bool saved_star = no_star_;
  std::optional<SyntaxError> expr_error;
  ExprPtr lhs;
  try {
    no_star_ = true;
    lhs = expr();
    no_star_ = saved_star;
    if (!is_punct("==>") && !is_punct("|->")) {
      fail_here("expected '==>' or '|->' after expression, found " + describe(peek()));
    }
  } catch (const SyntaxError& e) {
    no_star_ = saved_star;
    expr_error = e;
  }
  if (!expr_error) {
    if (accept("==>")) {
      ValueTerm v = value_term();
      return build(t, [&] { return Assertion::evals_to(lhs, v); });
    }
    expect("|->");
    expect("[");
    Chunk ch = chunk();
    expect("]");
    no_star_ = true;
    ExprPtr rhs = unary();
    no_star_ = saved_star;
    return build(t, [&] { return Assertion::mapsto(lhs, ch, rhs); });
  }
  pos_ = save;
  if (accept("(")) {
    AssertionPtr a = assertion();
    expect(")");
    return a;
  }
  throw *expr_error;
}

// Skips an assertion in a function header (its variables are only known
// once the locals are read) and returns where it started.
std::size_t Parser::skip_assertion() {
  std::size_t start = pos_;
  int depth = 0;
  while (!at_end()) {
    if (depth == 0 && (is_punct("{") || is_word("ensures") || is_word("requires"))) break;
    if (is_punct("(") || is_punct("[")) ++depth;
    if (is_punct(")") || is_punct("]")) --depth;
    next();
  }
  if (pos_ == start) fail_here("expected assertion");
  return start;
}

AssertionPtr Parser::parse_assertion_at(std::size_t pos,
                                        const AssertionScope& scope) {
  std::size_t saved = pos_;
  pos_ = pos;
  scope_ = &scope;
  mode_ = NameMode::kAssertion;
  AssertionPtr a = assertion();
  if (!is_punct("{") && !is_word("ensures") && !is_word("requires")) {
    fail_here("unexpected " + describe(peek()) + " after assertion");
  }
  mode_ = NameMode::kProgram;
  pos_ = saved;
  return a;
}

Program Parser::program() {
  Program prog;
  std::vector<std::pair<Ident, std::int64_t>> globals;
  AssertionPtr gamma;
  std::set<Ident> declared;

  // Parse everything first; declarations are registered in source order.
  struct Decl {
    bool is_fun;
    std::size_t index;
  };
  std::vector<Decl> decls;
  std::vector<FunDef> defs;

  while (!at_end()) {
    const Token& t = peek();
    if (accept_word("global")) {
      const Token& nt = peek();
      Ident g = ident();
      if (!declared.insert(g).second) fail(nt, "duplicate global '" + g + "'");
      expect("[");
      std::uint64_t n = nat();
      if (n > (1ull << 31)) fail(nt, "global size too large");
      expect("]");
      expect(";");
      globals.emplace_back(g, static_cast<std::int64_t>(n));
      decls.push_back({false, globals.size() - 1});
      continue;
    }
    if (accept_word("gamma")) {
      if (gamma) fail(t, "duplicate gamma");
      AssertionScope scope;
      scope_ = &scope;
      mode_ = NameMode::kAssertion;
      vars_ = nullptr;
      gamma = assertion();
      mode_ = NameMode::kProgram;
      scope_ = nullptr;
      expect(";");
      continue;
    }
    if (!accept_word("fn")) fail(t, "expected 'global', 'gamma' or 'fn', found " + describe(t));
    FunDef f;
    const Token& nt = peek();
    f.name = ident();
    if (!declared.insert(f.name).second) fail(nt, "duplicate global '" + f.name + "'");
    expect("(");
    f.params = ident_list(")");
    expect(")");
    expect(":");
    std::uint64_t arity = nat();
    if (arity > 64) fail(nt, "result arity too large");
    f.result_arity = arity;
    std::optional<std::size_t> pre_at, post_at;
    for (;;) {
      if (accept_word("requires")) {
        if (pre_at) fail_here("duplicate requires");
        pre_at = skip_assertion();
      } else if (accept_word("ensures")) {
        if (post_at) fail_here("duplicate ensures");
        post_at = skip_assertion();
      } else {
        break;
      }
    }
    expect("{");
    if (is_word("locals") && !is_punct("=", 1)) {
      next();
      f.locals = ident_list(";");
      expect(";");
    }
    if (is_word("stack") && peek(1).kind == Tok::kInt) {
      next();
      std::uint64_t n = nat();
      if (n > (1ull << 31)) fail_here("stack size too large");
      f.stackspace = static_cast<std::int64_t>(n);
      expect(";");
    }
    std::set<Ident> vars;
    for (const auto* list : {&f.params, &f.locals}) {
      for (const auto& x : *list) {
        if (!vars.insert(x).second) fail(nt, "duplicate variable '" + x + "' in '" + f.name + "'");
      }
    }
    AssertionScope scope{vars, true};
    if (pre_at) f.precondition = parse_assertion_at(*pre_at, scope);
    if (post_at) f.postcondition = parse_assertion_at(*post_at, scope);
    vars_ = &vars;
    scope_ = &scope;
    f.body = seq_of(stmts_until_brace());
    expect("}");
    vars_ = nullptr;
    scope_ = nullptr;
    defs.push_back(std::move(f));
    decls.push_back({true, defs.size() - 1});
  }

  for (const auto& [g, at] : symbol_uses_) {
    if (!declared.count(g)) fail(at, "unknown global '" + g + "'");
  }
  for (const auto& d : decls) {
    if (d.is_fun) {
      prog.add_function(std::move(defs[d.index]));
    } else {
      prog.add_global(globals[d.index].first, globals[d.index].second);
    }
  }
  if (gamma) prog.set_gamma(gamma);
  return prog;
}

AssertionPtr Parser::standalone_assertion(const AssertionScope& scope) {
  scope_ = &scope;
  mode_ = NameMode::kAssertion;
  AssertionPtr a = assertion();
  if (!at_end()) fail_here("unexpected " + describe(peek()) + " after assertion");
  return a;
}

}  // namespace

Program parse_program(const std::string& text) {
  Parser p(text);
  return p.program();
}

AssertionPtr parse_assertion(const std::string& text,
                             const AssertionScope& scope) {
  Parser p(text);
  return p.standalone_assertion(scope);
}

}  // namespace cminor
