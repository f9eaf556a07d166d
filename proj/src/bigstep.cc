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

// Big-step statement execution by structural recursion. Shares expression
// evaluation, memory and footprints with the small-step interpreter but
// nothing about control: there are no continuations here.

#include <utility>

#include "cminor/oracle.h"

namespace cminor {

namespace {

BigOutcome normal(State s) {
  BigOutcome o;
  o.kind = BigKind::kNormal;
  o.state = std::move(s);
  return o;
}

BigOutcome stuck_at(StuckReason r) {
  BigOutcome o;
  o.kind = BigKind::kStuck;
  o.reason = r;
  return o;
}

BigOutcome out_of_fuel() {
  BigOutcome o;
  o.kind = BigKind::kOutOfFuel;
  return o;
}

class BigStep {
 public:
  BigStep(const GlobalEnv& genv, const SemanticsConfig& config, std::size_t& fuel)
      : genv_(genv), erased_(config.erased), fuel_(fuel) {}

  BigOutcome exec(State s, const Stmt& st) {
    if (fuel_ == 0) return out_of_fuel();
    --fuel_;
    switch (st.kind) {
      case StmtKind::kSkip:
        return normal(std::move(s));
      case StmtKind::kAssign: {
        EvalResult r = eval(s, *st.e1);
        if (!r) return stuck_at(r.reason);
        s.rho[st.var] = *r.value;
        return normal(std::move(s));
      }
      case StmtKind::kStore: {
        EvalResult a = eval(s, *st.e1);
        if (!a) return stuck_at(a.reason);
        EvalResult v = eval(s, *st.e2);
        if (!v) return stuck_at(v.reason);
        if (!a.value->is_ptr()) return stuck_at(StuckReason::kBadAddress);
        if (!erased_ && !allows(s.phi, *a.value, st.chunk, Access::kStore)) {
          return stuck_at(StuckReason::kStorePermission);
        }
        auto m = s.mem.store(st.chunk, *a.value, *v.value);
        if (!m) return stuck_at(StuckReason::kBadAddress);
        s.mem = std::move(*m);
        return normal(std::move(s));
      }
      case StmtKind::kSeq: {
        BigOutcome first = exec(std::move(s), *st.s1);
        if (first.kind != BigKind::kNormal) return first;
        return exec(std::move(first.state), *st.s2);
      }
      case StmtKind::kIf: {
        EvalResult r = eval(s, *st.e1);
        if (!r) return stuck_at(r.reason);
        if (is_true(*r.value)) return exec(std::move(s), *st.s1);
        if (is_false(*r.value)) return exec(std::move(s), *st.s2);
        return stuck_at(StuckReason::kUndefinedBranch);
      }
      case StmtKind::kLoop:
        for (;;) {
          BigOutcome it = exec(std::move(s), *st.s1);
          if (it.kind != BigKind::kNormal) return it;
          s = std::move(it.state);
          if (fuel_ == 0) return out_of_fuel();
          --fuel_;
        }
      case StmtKind::kBlock: {
        BigOutcome body = exec(std::move(s), *st.s1);
        if (body.kind == BigKind::kExitOut) {
          if (body.exit_level == 0) return normal(std::move(body.state));
          --body.exit_level;
        }
        return body;
      }
      case StmtKind::kExit: {
        BigOutcome o = normal(std::move(s));
        o.kind = BigKind::kExitOut;
        o.exit_level = st.exit_level;
        return o;
      }
      case StmtKind::kReturn: {
        std::vector<Value> vl;
        for (const ExprPtr& e : st.args) {
          EvalResult r = eval(s, *e);
          if (!r) return stuck_at(r.reason);
          vl.push_back(*r.value);
        }
        BigOutcome o = normal(std::move(s));
        o.kind = BigKind::kReturnOut;
        o.values = std::move(vl);
        return o;
      }
      case StmtKind::kAnnot:
        return exec(std::move(s), *st.s1);
      case StmtKind::kCall:
        return call(std::move(s), st);
    }
    return stuck_at(StuckReason::kNone);
  }

  // Runs `fn` on already prepared callee state; returns the result values
  // and the state with the callee's stack released, or a non-normal
  // outcome.
  BigOutcome activation(const FunDef& fn, State callee, std::size_t results) {
    BigOutcome body = exec(std::move(callee), *fn.body);
    std::vector<Value> vl;
    switch (body.kind) {
      case BigKind::kNormal:
        break;
      case BigKind::kReturnOut:
        vl = std::move(body.values);
        break;
      case BigKind::kExitOut:
        return stuck_at(StuckReason::kExitPastBlock);
      default:
        return body;
    }
    if (vl.size() != results) return stuck_at(StuckReason::kArityMismatch);
    State s = std::move(body.state);
    const BlockId sp = *s.sp;
    const Block& blk = s.mem.block(sp);
    if (!erased_) {
      for (std::int64_t i = blk.lo; i < blk.hi; ++i) {
        if (!s.phi.share_at({sp, i}).is_full()) {
          return stuck_at(StuckReason::kStackPermissionLost);
        }
      }
      s.phi = fp_revoke(s.phi, sp, blk.lo, blk.hi);
    }
    s.mem = s.mem.free(sp);
    BigOutcome o = normal(std::move(s));
    o.kind = BigKind::kReturnOut;
    o.values = std::move(vl);
    return o;
  }

  State enter(State s, const FunDef& fn, const std::vector<Value>& args) {
    auto [m, b] = s.mem.alloc(0, fn.stackspace);
    s.mem = std::move(m);
    if (!erased_ && fn.stackspace > 0) {
      s.phi = *fp_grant(s.phi, b, 0, fn.stackspace, Share::full());
    }
    s.sp = b;
    Env rho;
    for (std::size_t i = 0; i < args.size(); ++i) rho[fn.params[i]] = args[i];
    for (const Ident& x : fn.locals) rho[x] = Value::undef();
    s.rho = std::move(rho);
    return s;
  }

 private:
  EvalResult eval(const State& s, const Expr& e) const {
    EvalContext ctx;
    ctx.sp = s.sp;
    ctx.rho = &s.rho;
    ctx.phi = erased_ ? nullptr : &s.phi;
    ctx.mem = &s.mem;
    return evaluate(genv_, ctx, e);
  }

  BigOutcome call(State s, const Stmt& st) {
    EvalResult target = eval(s, *st.e1);
    if (!target) return stuck_at(target.reason);
    std::shared_ptr<const FunDef> fn;
    if (target.value->is_ptr() && target.value->ptr_offset() == Int32(0)) {
      fn = genv_.function_at(target.value->ptr_block());
    }
    if (!fn) return stuck_at(StuckReason::kNotAFunction);
    std::vector<Value> args;
    for (const ExprPtr& e : st.args) {
      EvalResult r = eval(s, *e);
      if (!r) return stuck_at(r.reason);
      args.push_back(*r.value);
    }
    if (args.size() != fn->params.size() || fn->result_arity != st.results.size()) {
      return stuck_at(StuckReason::kArityMismatch);
    }
    const std::optional<BlockId> caller_sp = s.sp;
    Env caller_rho = s.rho;
    BigOutcome r = activation(*fn, enter(std::move(s), *fn, args), st.results.size());
    if (r.kind != BigKind::kReturnOut) return r;
    State after = std::move(r.state);
    after.sp = caller_sp;
    after.rho = std::move(caller_rho);
    for (std::size_t i = 0; i < r.values.size(); ++i) {
      after.rho[st.results[i]] = r.values[i];
    }
    return normal(std::move(after));
  }

  const GlobalEnv& genv_;
  bool erased_;
  std::size_t& fuel_;
};

}  // namespace

BigOutcome bigstep_exec(const GlobalEnv& genv, const State& s,
                        const StmtPtr& stmt, std::size_t& fuel,
                        const SemanticsConfig& config) {
  return BigStep(genv, config, fuel).exec(s, *stmt);
}

std::string BigRun::describe() const {
  switch (kind) {
    case OutcomeKind::kFinished: {
      std::string out = "Finished [";
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) out += ", ";
        out += to_string(results[i]);
      }
      return out + "]";
    }
    case OutcomeKind::kStuck:
      return "Stuck: " + std::string(to_string(reason));
    case OutcomeKind::kOutOfFuel:
      return "OutOfFuel";
  }
  return "?";
}

BigRun bigstep_run(const GlobalEnv& genv, const Ident& entry,
                   const std::vector<Value>& args, std::size_t fuel,
                   const SemanticsConfig& config) {
  auto fn = genv.find_function(entry);
  if (!fn) throw Error("unknown entry function: " + entry);
  if (args.size() != fn->params.size()) throw Error("entry arity mismatch: " + entry);

  State s;
  s.mem = genv.initial_memory();
  if (!config.erased) {
    for (const GlobalDecl& d : genv.decls()) {
      if (d.kind == GlobalKind::kData && d.size > 0) {
        s.phi = *fp_grant(s.phi, d.block, 0, d.size, Share::full());
      }
    }
  }

  BigStep big(genv, config, fuel);
  BigOutcome r = big.activation(*fn, big.enter(std::move(s), *fn, args),
                                fn->result_arity);
  BigRun out;
  switch (r.kind) {
    case BigKind::kReturnOut: {
      out.kind = OutcomeKind::kFinished;
      out.results = r.values;
      out.state = std::move(r.state);
      out.exit_env = std::move(out.state.rho);
      out.state.sp.reset();
      out.state.rho.clear();
      for (std::size_t i = 0; i < r.values.size(); ++i) {
        out.state.rho["$" + std::to_string(i)] = r.values[i];
      }
      break;
    }
    case BigKind::kStuck:
      out.kind = OutcomeKind::kStuck;
      out.reason = r.reason;
      break;
    default:
      out.kind = OutcomeKind::kOutOfFuel;
      break;
  }
  return out;
}

}  // namespace cminor
