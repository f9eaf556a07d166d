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

#include "cminor/assertions.h"

#include <algorithm>

#include "cminor/parser.h"

namespace cminor {

namespace {

std::shared_ptr<Assertion> node(AssertionKind kind) {
  auto a = std::make_shared<Assertion>();
  a->kind = kind;
  return a;
}

void require_pure(const ExprPtr& e) {
  if (!e) throw Error("null expression in assertion");
  if (!pure(*e)) throw Error("impure expression in assertion");
}

void require_child(const AssertionPtr& a) {
  if (!a) throw Error("null assertion");
}

}  // namespace

AssertionPtr Assertion::emp() { return node(AssertionKind::kEmp); }

AssertionPtr Assertion::star(AssertionPtr p, AssertionPtr q) {
  require_child(p);
  require_child(q);
  auto a = node(AssertionKind::kStar);
  a->left = std::move(p);
  a->right = std::move(q);
  return a;
}

AssertionPtr Assertion::conj(AssertionPtr p, AssertionPtr q) {
  require_child(p);
  require_child(q);
  auto a = node(AssertionKind::kAnd);
  a->left = std::move(p);
  a->right = std::move(q);
  return a;
}

AssertionPtr Assertion::disj(AssertionPtr p, AssertionPtr q) {
  require_child(p);
  require_child(q);
  auto a = node(AssertionKind::kOr);
  a->left = std::move(p);
  a->right = std::move(q);
  return a;
}

AssertionPtr Assertion::imp(AssertionPtr p, AssertionPtr q) {
  require_child(p);
  require_child(q);
  auto a = node(AssertionKind::kImp);
  a->left = std::move(p);
  a->right = std::move(q);
  return a;
}

AssertionPtr Assertion::neg(AssertionPtr p) {
  require_child(p);
  auto a = node(AssertionKind::kNot);
  a->left = std::move(p);
  return a;
}

AssertionPtr Assertion::exists(Ident x, AssertionPtr body) {
  require_child(body);
  auto a = node(AssertionKind::kExists);
  a->binder = std::move(x);
  a->left = std::move(body);
  return a;
}

AssertionPtr Assertion::prop(ExprPtr e) {
  require_pure(e);
  std::set<Ident> vars;
  collect_vars(*e, vars);
  if (!vars.empty()) throw Error("prop() mentions program variable " + *vars.begin());
  auto a = node(AssertionKind::kProp);
  a->e1 = std::move(e);
  return a;
}

AssertionPtr Assertion::truth() { return prop(Expr::val(Value::integer(1))); }
AssertionPtr Assertion::falsity() { return prop(Expr::val(Value::integer(0))); }

AssertionPtr Assertion::evals_to(ExprPtr e, ValueTerm v) {
  require_pure(e);
  auto a = node(AssertionKind::kEval);
  a->e1 = std::move(e);
  a->term = std::move(v);
  return a;
}

AssertionPtr Assertion::expr(ExprPtr e) {
  require_pure(e);
  auto a = node(AssertionKind::kExpr);
  a->e1 = std::move(e);
  return a;
}

AssertionPtr Assertion::defined(ExprPtr e) {
  require_pure(e);
  auto a = node(AssertionKind::kDefined);
  a->e1 = std::move(e);
  return a;
}

AssertionPtr Assertion::mapsto(ExprPtr addr, Chunk ch, ExprPtr contents) {
  require_pure(addr);
  require_pure(contents);
  auto a = node(AssertionKind::kMapsto);
  a->e1 = std::move(addr);
  a->chunk = ch;
  a->e2 = std::move(contents);
  return a;
}

bool same_assertion(const AssertionPtr& a, const AssertionPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool operator==(const Assertion& a, const Assertion& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case AssertionKind::kEmp:
      return true;
    case AssertionKind::kStar:
    case AssertionKind::kAnd:
    case AssertionKind::kOr:
    case AssertionKind::kImp:
      return same_assertion(a.left, b.left) && same_assertion(a.right, b.right);
    case AssertionKind::kNot:
      return same_assertion(a.left, b.left);
    case AssertionKind::kExists:
      return a.binder == b.binder && same_assertion(a.left, b.left);
    case AssertionKind::kProp:
    case AssertionKind::kExpr:
    case AssertionKind::kDefined:
      return same_expr(a.e1, b.e1);
    case AssertionKind::kEval:
      return same_expr(a.e1, b.e1) && a.term == b.term;
    case AssertionKind::kMapsto:
      return a.chunk == b.chunk && same_expr(a.e1, b.e1) && same_expr(a.e2, b.e2);
  }
  return false;
}

namespace {

template <typename F>
void for_each_expr(const Assertion& a, F&& f) {
  if (a.e1) f(*a.e1);
  if (a.e2) f(*a.e2);
  if (a.left) for_each_expr(*a.left, f);
  if (a.right) for_each_expr(*a.right, f);
}

void free_logic(const Assertion& a, std::set<Ident>& bound, std::set<Ident>& out) {
  auto add_expr = [&](const ExprPtr& e) {
    if (!e) return;
    std::set<Ident> vs;
    collect_logic_vars(*e, vs);
    for (const auto& v : vs) {
      if (!bound.count(v)) out.insert(v);
    }
  };
  add_expr(a.e1);
  add_expr(a.e2);
  if (a.kind == AssertionKind::kEval && a.term.is_logic && !bound.count(a.term.name)) {
    out.insert(a.term.name);
  }
  if (a.kind == AssertionKind::kExists) {
    bool fresh = bound.insert(a.binder).second;
    free_logic(*a.left, bound, out);
    if (fresh) bound.erase(a.binder);
    return;
  }
  if (a.left) free_logic(*a.left, bound, out);
  if (a.right) free_logic(*a.right, bound, out);
}

}  // namespace

std::set<Ident> assertion_free_vars(const Assertion& a) {
  std::set<Ident> out;
  for_each_expr(a, [&](const Expr& e) { collect_vars(e, out); });
  return out;
}

std::set<Ident> assertion_free_logic_vars(const Assertion& a) {
  std::set<Ident> bound, out;
  free_logic(a, bound, out);
  return out;
}

std::size_t assertion_depth(const Assertion& a) {
  std::size_t d = 0;
  if (a.left) d = std::max(d, assertion_depth(*a.left));
  if (a.right) d = std::max(d, assertion_depth(*a.right));
  return d + 1;
}

void collect_literals(const Assertion& a, std::vector<Value>& out) {
  if (a.e1) collect_literals(*a.e1, out);
  if (a.e2) collect_literals(*a.e2, out);
  if (a.kind == AssertionKind::kEval && !a.term.is_logic) out.push_back(a.term.value);
  if (a.left) collect_literals(*a.left, out);
  if (a.right) collect_literals(*a.right, out);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

void add_unique(std::vector<Value>& out, const Value& v) {
  if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
}

// Kleene connectives. Reasons follow the deciding operand.
CheckResult k_and(CheckResult a, CheckResult b) {
  if (a.is_fails()) return a;
  if (b.is_fails()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  return CheckResult::holds();
}

CheckResult k_or(CheckResult a, CheckResult b) {
  if (a.is_holds()) return a;
  if (b.is_holds()) return b;
  if (a.is_unknown()) return a;
  if (b.is_unknown()) return b;
  if (a.reason == b.reason) return a;
  return CheckResult::fails(a.reason + "; " + b.reason);
}

CheckResult k_not(const CheckResult& a, const Assertion& what) {
  if (a.is_holds()) return CheckResult::fails("negated assertion holds: " + print_assertion(what));
  if (a.is_fails()) return CheckResult::holds();
  return a;
}

bool value_defined(const GlobalEnv& genv, const Value& v) {
  // defined(e) is [e == e] or [e ==f e].
  for (OpCode code : {OpCode::kCmp, OpCode::kCmpf}) {
    auto r = eval_operation(genv, std::nullopt, Op::compare(code, Comparison::kEq), {v, v});
    if (r && is_true(*r)) return true;
  }
  return false;
}

struct Conj {
  AssertionPtr a;
  Env env;
};

class Checker {
 public:
  Checker(const GlobalEnv& genv, const State& s, const Assertion& top,
          const Env& env, const SatisfiesOptions& options)
      : genv_(genv), s_(s), top_(top), top_env_(env), options_(options) {}

  CheckResult check(const Assertion& a, const Footprint& phi, const Env& env);
  std::optional<Env> bind(const Assertion& a, const std::vector<Ident>& vars,
                          std::size_t i, Env env, CheckResult& best);
  const std::vector<Value>& candidates();

 private:
  EvalResult eval(const Expr& e, const Env& env) const {
    EvalContext ctx{s_.sp, &s_.rho, nullptr, &s_.mem, &env};
    return evaluate(genv_, ctx, e);
  }
  bool spend() { return ++work_ <= options_.max_work; }
  CheckResult atom(const Assertion& a, const Footprint& phi, const Env& env);
  CheckResult star(std::vector<Conj> cs, const Footprint& phi);
  CheckResult split_search(const std::vector<Conj>& general, bool absorber,
                           const Footprint& rest);
  std::vector<Value> ordered_candidates(const Assertion& body, const Ident& x,
                                        const Env& env);
  void hints(const Assertion& a, const Ident& x, const Env& env,
             std::vector<Value>& out);

  const GlobalEnv& genv_;
  const State& s_;
  const Assertion& top_;
  const Env& top_env_;
  const SatisfiesOptions& options_;
  std::optional<std::vector<Value>> candidates_;
  std::size_t work_ = 0;
};

const std::vector<Value>& Checker::candidates() {
  if (!candidates_) candidates_ = witness_candidates(genv_, s_, top_, top_env_);
  return *candidates_;
}

// Values the body itself pins x to: "e ==> x", "p |-> x" and "[x == e]".
void Checker::hints(const Assertion& a, const Ident& x, const Env& env,
                    std::vector<Value>& out) {
  auto is_x = [&](const ExprPtr& e) {
    return e && e->kind == ExprKind::kLogic && e->name == x;
  };
  switch (a.kind) {
    case AssertionKind::kEval:
      if (a.term.is_logic && a.term.name == x) {
        if (auto r = eval(*a.e1, env)) add_unique(out, *r.value);
      }
      return;
    case AssertionKind::kMapsto:
      if (is_x(a.e2)) {
        if (auto p = eval(*a.e1, env)) {
          if (auto v = s_.mem.load(a.chunk, *p.value)) add_unique(out, *v);
        }
      }
      return;
    case AssertionKind::kExpr: {
      const Expr& e = *a.e1;
      if (e.kind == ExprKind::kOp && e.op.code == OpCode::kCmp &&
          e.op.cmp == Comparison::kEq) {
        const ExprPtr& l = e.args[0];
        const ExprPtr& r = e.args[1];
        if (is_x(l)) {
          if (auto v = eval(*r, env)) add_unique(out, *v.value);
        } else if (is_x(r)) {
          if (auto v = eval(*l, env)) add_unique(out, *v.value);
        }
      }
      return;
    }
    case AssertionKind::kExists:
      if (a.binder != x) hints(*a.left, x, env, out);
      return;
    default:
      if (a.left) hints(*a.left, x, env, out);
      if (a.right) hints(*a.right, x, env, out);
      return;
  }
}

std::vector<Value> Checker::ordered_candidates(const Assertion& body,
                                               const Ident& x, const Env& env) {
  std::vector<Value> out;
  hints(body, x, env, out);
  for (const Value& v : candidates()) add_unique(out, v);
  return out;
}

CheckResult Checker::atom(const Assertion& a, const Footprint& phi,
                          const Env& env) {
  auto text = [&] { return print_assertion(a); };
  auto need_emp = [&]() -> std::optional<CheckResult> {
    if (phi.empty()) return std::nullopt;
    return CheckResult::fails(text() + ": footprint not empty (" +
                              std::to_string(phi.size()) + " addresses)");
  };
  auto stuck = [&](const EvalResult& r) {
    return CheckResult::fails(text() + ": evaluation stuck (" +
                              std::string(to_string(r.reason)) + ")");
  };
  switch (a.kind) {
    case AssertionKind::kEmp:
      if (auto f = need_emp()) return *f;
      return CheckResult::holds();
    case AssertionKind::kProp: {
      EvalResult r = eval(*a.e1, env);
      if (!r) return stuck(r);
      if (is_true(*r.value)) return CheckResult::holds();
      return CheckResult::fails(text() + " is false");
    }
    case AssertionKind::kEval: {
      if (auto f = need_emp()) return *f;
      EvalResult r = eval(*a.e1, env);
      if (!r) return stuck(r);
      Value want = a.term.value;
      if (a.term.is_logic) {
        auto it = env.find(a.term.name);
        if (it == env.end()) {
          return CheckResult::fails(text() + ": unbound logic variable " + a.term.name);
        }
        want = it->second;
      }
      if (*r.value == want) return CheckResult::holds();
      return CheckResult::fails(text() + ": evaluates to " + to_string(*r.value));
    }
    case AssertionKind::kExpr: {
      if (auto f = need_emp()) return *f;
      EvalResult r = eval(*a.e1, env);
      if (!r) return stuck(r);
      if (is_true(*r.value)) return CheckResult::holds();
      return CheckResult::fails(text() + " is false (value " + to_string(*r.value) + ")");
    }
    case AssertionKind::kDefined: {
      if (auto f = need_emp()) return *f;
      EvalResult r = eval(*a.e1, env);
      if (!r) return stuck(r);
      if (value_defined(genv_, *r.value)) return CheckResult::holds();
      return CheckResult::fails(text() + ": value " + to_string(*r.value) + " is not defined");
    }
    case AssertionKind::kMapsto: {
      EvalResult p = eval(*a.e1, env);
      if (!p) return stuck(p);
      EvalResult v = eval(*a.e2, env);
      if (!v) return stuck(v);
      if (!p.value->is_ptr()) {
        return CheckResult::fails(text() + ": address " + to_string(*p.value) + " is not a pointer");
      }
      if (!value_defined(genv_, *v.value)) {
        return CheckResult::fails(text() + ": contents " + to_string(*v.value) + " not defined");
      }
      auto size = static_cast<std::int64_t>(chunk_size(a.chunk));
      std::int64_t base = p.value->ptr_offset().signed_value();
      bool exact = phi.size() == static_cast<std::size_t>(size);
      for (std::int64_t k = 0; exact && k < size; ++k) {
        exact = phi.share_at(Address{p.value->ptr_block(), base + k}).is_full();
      }
      if (!exact) {
        return CheckResult::fails(text() + ": footprint is not exactly the cell at " +
                                  to_string(*p.value));
      }
      auto got = s_.mem.load(a.chunk, *p.value);
      if (!got) return CheckResult::fails(text() + ": bad address " + to_string(*p.value));
      if (*got != *v.value) {
        return CheckResult::fails(text() + ": memory holds " + to_string(*got));
      }
      return CheckResult::holds();
    }
    default:
      return CheckResult::unknown("not an atom");
  }
}

CheckResult Checker::check(const Assertion& a, const Footprint& phi,
                           const Env& env) {
  switch (a.kind) {
    case AssertionKind::kAnd:
      return k_and(check(*a.left, phi, env), check(*a.right, phi, env));
    case AssertionKind::kOr:
      return k_or(check(*a.left, phi, env), check(*a.right, phi, env));
    case AssertionKind::kImp:
      return k_or(k_not(check(*a.left, phi, env), *a.left), check(*a.right, phi, env));
    case AssertionKind::kNot:
      return k_not(check(*a.left, phi, env), *a.left);
    case AssertionKind::kStar:
      return star({Conj{a.left, env}, Conj{a.right, env}}, phi);
    case AssertionKind::kExists: {
      if (!assertion_free_logic_vars(*a.left).count(a.binder)) {
        return check(*a.left, phi, env);
      }
      CheckResult last = CheckResult::unknown("no witness for " + a.binder);
      for (const Value& c : ordered_candidates(*a.left, a.binder, env)) {
        if (!spend()) return CheckResult::unknown("search budget exhausted");
        Env inner = env;
        inner[a.binder] = c;
        CheckResult r = check(*a.left, phi, inner);
        if (r.is_holds()) return r;
      }
      return CheckResult::unknown("no witness found for " + a.binder + " in " +
                                  print_assertion(a));
    }
    default:
      ++work_;
      return atom(a, phi, env);
  }
}

bool has_negation(const Assertion& a) {
  if (a.kind == AssertionKind::kNot || a.kind == AssertionKind::kImp) return true;
  return (a.left && has_negation(*a.left)) || (a.right && has_negation(*a.right));
}

bool footprint_free(const Assertion& a) { return a.kind == AssertionKind::kProp; }

bool needs_emp(const Assertion& a) {
  switch (a.kind) {
    case AssertionKind::kEmp:
    case AssertionKind::kEval:
    case AssertionKind::kExpr:
    case AssertionKind::kDefined:
      return true;
    default:
      return false;
  }
}

CheckResult Checker::star(std::vector<Conj> cs, const Footprint& phi) {
  // Normalize: flatten nested stars, distribute over disjunction, pull
  // existentials out. All three preserve the three-valued meaning except
  // that a pulled-out existential can only answer Holds or Unknown.
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Assertion& a = *cs[i].a;
    if (a.kind == AssertionKind::kStar) {
      Conj r{a.right, cs[i].env};
      cs[i].a = a.left;
      cs.insert(cs.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(r));
      --i;
      continue;
    }
    if (a.kind == AssertionKind::kOr) {
      std::vector<Conj> left = cs, right = cs;
      left[i].a = a.left;
      right[i].a = a.right;
      return k_or(star(std::move(left), phi), star(std::move(right), phi));
    }
    if (a.kind == AssertionKind::kExists) {
      if (!assertion_free_logic_vars(*a.left).count(a.binder)) {
        cs[i].a = a.left;
        --i;
        continue;
      }
      for (const Value& c : ordered_candidates(*a.left, a.binder, cs[i].env)) {
        if (!spend()) return CheckResult::unknown("search budget exhausted");
        std::vector<Conj> inst = cs;
        inst[i].a = a.left;
        inst[i].env[a.binder] = c;
        CheckResult r = star(std::move(inst), phi);
        if (r.is_holds()) return r;
      }
      return CheckResult::unknown("no witness found for " + a.binder + " in " +
                                  print_assertion(a));
    }
  }

  CheckResult acc = CheckResult::holds();
  bool absorber = false;
  Footprint rest = phi;
  std::vector<Conj> general;
  for (const Conj& c : cs) {
    const Assertion& a = *c.a;
    if (footprint_free(a)) {
      CheckResult r = check(a, Footprint(), c.env);
      if (r.is_fails()) return r;
      absorber = absorber || r.is_holds();
      acc = k_and(acc, r);
    } else if (needs_emp(a)) {
      CheckResult r = check(a, Footprint(), c.env);
      if (r.is_fails()) return r;
      acc = k_and(acc, r);
    } else if (a.kind == AssertionKind::kMapsto) {
      // The cell's footprint is determined by the address alone.
      EvalResult p = eval(*a.e1, c.env);
      Footprint own;
      if (p && p.value->is_ptr()) {
        auto size = static_cast<std::int64_t>(chunk_size(a.chunk));
        std::int64_t base = p.value->ptr_offset().signed_value();
        for (std::int64_t k = 0; k < size; ++k) {
          Address addr{p.value->ptr_block(), base + k};
          Share sh = rest.share_at(addr);
          if (!sh.is_full()) {
            return CheckResult::fails(print_assertion(a) + ": cell at " + to_string(*p.value) +
                                      " not fully owned by this part of the footprint");
          }
          own.set(addr, sh);
          rest.set(addr, Share::zero());
        }
      }
      CheckResult r = check(a, own, c.env);
      if (r.is_fails()) return r;
      acc = k_and(acc, r);
    } else {
      general.push_back(c);
    }
  }
  if (general.empty()) {
    if (!absorber && !rest.empty()) {
      return CheckResult::fails("separating conjunction leaves " + std::to_string(rest.size()) +
                                " footprint addresses unclaimed");
    }
    return acc;
  }
  if (general.size() == 1 && !absorber) {
    return k_and(acc, check(*general[0].a, rest, general[0].env));
  }
  return k_and(acc, split_search(general, absorber, rest));
}

CheckResult Checker::split_search(const std::vector<Conj>& general,
                                  bool absorber, const Footprint& rest) {
  std::size_t n = rest.size();
  std::size_t parts = general.size() + (absorber ? 1 : 0);
  if (n > options_.split_bound) {
    return CheckResult::unknown("star split search over " + std::to_string(n) +
                                " addresses exceeds the bound");
  }
  std::vector<std::pair<Address, Share>> addrs(rest.entries().begin(), rest.entries().end());
  std::vector<std::size_t> assign(n, 0);
  bool any_unknown = false;
  CheckResult last_fail = CheckResult::fails("no split satisfies the separating conjunction");
  for (;;) {
    if (!spend()) return CheckResult::unknown("search budget exhausted");
    std::vector<Footprint> pieces(parts);
    for (std::size_t k = 0; k < n; ++k) pieces[assign[k]].set(addrs[k].first, addrs[k].second);
    CheckResult r = CheckResult::holds();
    for (std::size_t g = 0; g < general.size() && !r.is_fails(); ++g) {
      r = k_and(r, check(*general[g].a, pieces[g], general[g].env));
    }
    if (r.is_holds()) return r;
    if (r.is_unknown()) any_unknown = true;
    std::size_t k = 0;
    while (k < n && ++assign[k] == parts) assign[k++] = 0;
    if (k == n) break;
  }
  if (any_unknown) return CheckResult::unknown("star split search inconclusive");
  // Whole-address splits are complete for the positive fragment only: a
  // negated part may be satisfiable on a fraction of some share.
  for (const Conj& c : general) {
    if (has_negation(*c.a)) {
      return CheckResult::unknown("no whole-address split found; fractional splits not searched");
    }
  }
  return last_fail;
}

std::optional<Env> Checker::bind(const Assertion& a,
                                 const std::vector<Ident>& vars, std::size_t i,
                                 Env env, CheckResult& best) {
  if (i == vars.size()) {
    CheckResult r = check(a, s_.phi, env);
    if (r.is_holds()) return env;
    if (r.is_unknown() || best.is_holds()) best = r;
    return std::nullopt;
  }
  for (const Value& c : ordered_candidates(a, vars[i], env)) {
    if (!spend()) {
      best = CheckResult::unknown("search budget exhausted");
      return std::nullopt;
    }
    env[vars[i]] = c;
    if (auto found = bind(a, vars, i + 1, env, best)) return found;
  }
  return std::nullopt;
}

}  // namespace

std::vector<Value> witness_candidates(const GlobalEnv& genv, const State& s,
                                      const Assertion& a, const Env& logic_env) {
  (void)logic_env;
  std::vector<Value> out;
  for (const auto& [x, v] : s.rho) add_unique(out, v);
  for (const auto& [addr, share] : s.phi.entries()) {
    for (Chunk ch : {Chunk::kInt32, Chunk::kFloat64}) {
      auto size = static_cast<std::int64_t>(chunk_size(ch));
      if (addr.offset % size != 0) continue;
      bool owned = true;
      for (std::int64_t k = 1; k < size && owned; ++k) {
        owned = !s.phi.share_at(Address{addr.block, addr.offset + k}).is_zero();
      }
      if (!owned) continue;
      auto off = static_cast<std::int32_t>(addr.offset);
      if (auto v = s.mem.load(ch, Value::pointer(addr.block, off))) add_unique(out, *v);
    }
  }
  for (const Value& v : genv.literals()) add_unique(out, v);
  std::vector<Value> lits;
  collect_literals(a, lits);
  for (const Value& v : lits) add_unique(out, v);
  add_unique(out, Value::undef());
  add_unique(out, Value::integer(0));
  add_unique(out, Value::integer(1));
  return out;
}

CheckResult satisfies(const GlobalEnv& genv, const State& s, const Assertion& a,
                      const Env& logic_env, const SatisfiesOptions& options) {
  Checker c(genv, s, a, logic_env, options);
  return c.check(a, s.phi, logic_env);
}

std::optional<Env> find_witnesses(const GlobalEnv& genv, const State& s,
                                  const Assertion& a,
                                  const std::vector<Ident>& vars,
                                  const Env& logic_env,
                                  const SatisfiesOptions& options,
                                  CheckResult* last) {
  Checker c(genv, s, a, logic_env, options);
  CheckResult best = CheckResult::holds();
  auto found = c.bind(a, vars, 0, logic_env, best);
  if (last != nullptr) *last = found ? CheckResult::holds() : best;
  return found;
}

}  // namespace cminor
