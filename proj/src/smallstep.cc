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

#include "cminor/smallstep.h"

#include <utility>

#include "cminor/parser.h"

namespace cminor {

ControlPtr kstop() {
  static const ControlPtr stop = std::make_shared<const ControlNode>();
  return stop;
}

ControlPtr kseq(StmtPtr s, ControlPtr next) {
  if (!s || !next) throw Error("kseq: null argument");
  ControlNode n;
  n.kind = ControlKind::kSeq;
  n.stmt = std::move(s);
  n.next = std::move(next);
  return std::make_shared<const ControlNode>(std::move(n));
}

ControlPtr kblock(ControlPtr next, StmtPtr origin) {
  if (!next) throw Error("kblock: null argument");
  ControlNode n;
  n.kind = ControlKind::kBlock;
  n.origin = std::move(origin);
  n.next = std::move(next);
  return std::make_shared<const ControlNode>(std::move(n));
}

ControlPtr kcall(std::shared_ptr<const CallFrame> frame, ControlPtr next) {
  if (!frame || !next) throw Error("kcall: null argument");
  ControlNode n;
  n.kind = ControlKind::kCall;
  n.frame = std::move(frame);
  n.next = std::move(next);
  return std::make_shared<const ControlNode>(std::move(n));
}

ControlPtr khole(int id) {
  ControlNode n;
  n.kind = ControlKind::kHole;
  n.hole = id;
  return std::make_shared<const ControlNode>(std::move(n));
}

namespace {

bool same_frame(const CallFrame& a, const CallFrame& b) {
  if (a.results != b.results || a.sp != b.sp || a.rho != b.rho ||
      a.sentinel != b.sentinel) {
    return false;
  }
  if (a.function == b.function) return true;
  return a.function && b.function && *a.function == *b.function;
}

}  // namespace

bool same_control(const ControlPtr& a, const ControlPtr& b) {
  const ControlNode* x = a.get();
  const ControlNode* y = b.get();
  while (x != y) {
    if (!x || !y || x->kind != y->kind) return false;
    switch (x->kind) {
      case ControlKind::kStop:
        return true;
      case ControlKind::kHole:
        return x->hole == y->hole;
      case ControlKind::kSeq:
        if (!same_stmt(x->stmt, y->stmt)) return false;
        break;
      case ControlKind::kBlock:
        break;
      case ControlKind::kCall:
        if (!same_frame(*x->frame, *y->frame)) return false;
        break;
    }
    x = x->next.get();
    y = y->next.get();
  }
  return true;
}

std::size_t control_depth(const ControlPtr& k) {
  std::size_t n = 0;
  for (const ControlNode* c = k.get(); c && c->next; c = c->next.get()) ++n;
  return n;
}

bool same_continuation(const Continuation& a, const Continuation& b) {
  return a.state == b.state && same_control(a.control, b.control);
}

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kNone: return "none";
    case Rule::kSeq: return "seq";
    case Rule::kAssign: return "assign";
    case Rule::kStore: return "store";
    case Rule::kIfTrue: return "if-true";
    case Rule::kIfFalse: return "if-false";
    case Rule::kSkip: return "skip";
    case Rule::kLoop: return "loop";
    case Rule::kBlock: return "block";
    case Rule::kExitZero: return "exit-0";
    case Rule::kExitSucc: return "exit-n";
    case Rule::kBlockEnd: return "block-end";
    case Rule::kCall: return "call";
    case Rule::kReturn: return "return";
    case Rule::kReturnFallthrough: return "return-fallthrough";
    case Rule::kAnnot: return "assert";
  }
  return "?";
}

namespace {

constexpr std::pair<Mutation, std::string_view> kMutationNames[] = {
    {Mutation::kNone, "none"},
    {Mutation::kBrokenExit, "broken-exit"},
    {Mutation::kBrokenLoop, "broken-loop"},
    {Mutation::kBrokenStorePermission, "broken-store-permission"},
    {Mutation::kBrokenReturnBinding, "broken-return-binding"},
    {Mutation::kBrokenBlock, "broken-block"},
    {Mutation::kDropStackGrant, "drop-stack-grant"},
};

}  // namespace

std::string_view mutation_name(Mutation m) {
  for (const auto& [k, name] : kMutationNames) {
    if (k == m) return name;
  }
  return "?";
}

std::optional<Mutation> mutation_from_name(std::string_view name) {
  for (const auto& [k, n] : kMutationNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

namespace {

StepInfo stuck(StuckReason r, std::string detail = {}) {
  StepInfo info;
  info.reason = r;
  info.detail = std::move(detail);
  return info;
}

StepInfo fired(Rule r, std::string detail = {}) {
  StepInfo info;
  info.rule = r;
  info.detail = std::move(detail);
  return info;
}

EvalContext context_for(const State& s, const SemanticsConfig& config) {
  return config.erased ? erased_context(s.sp, s.rho, s.mem)
                       : footprint_context(s);
}

bool grants_stack(const SemanticsConfig& config) {
  return !config.erased && config.mutation != Mutation::kDropStackGrant;
}

std::string block_text(BlockId b) { return "b" + std::to_string(b.index); }

bool store_permitted(const Footprint& phi, const Value& addr, Chunk ch,
                     const SemanticsConfig& config) {
  if (config.mutation != Mutation::kBrokenStorePermission) {
    return allows(phi, addr, ch, Access::kStore);
  }
  if (!addr.is_ptr()) return false;
  const std::int64_t ofs = addr.ptr_offset().signed_value();
  const auto size = static_cast<std::int64_t>(chunk_size(ch));
  for (std::int64_t i = ofs; i <= ofs + size; ++i) {
    if (!phi.share_at({addr.ptr_block(), i}).is_full()) return false;
  }
  return true;
}

// Leaves the activation whose Kcall node is `call`, with results `vl`.
StepInfo do_return(Continuation& k, const ControlPtr& call,
                   std::vector<Value> vl, Rule rule,
                   const SemanticsConfig& config) {
  const CallFrame& frame = *call->frame;
  if (vl.size() != frame.results.size()) {
    return stuck(StuckReason::kArityMismatch,
                 "returning " + std::to_string(vl.size()) + " values to " +
                     std::to_string(frame.results.size()) + " result variables");
  }
  State& s = k.state;
  std::string detail;
  if (s.sp) {
    const Block& blk = s.mem.block(*s.sp);
    if (grants_stack(config)) {
      for (std::int64_t i = blk.lo; i < blk.hi; ++i) {
        if (!s.phi.share_at({*s.sp, i}).is_full()) {
          return stuck(StuckReason::kStackPermissionLost,
                       block_text(*s.sp) + "[" + std::to_string(i) + "]");
        }
      }
      s.phi = fp_revoke(s.phi, *s.sp, blk.lo, blk.hi);
    }
    s.mem.free_in_place(*s.sp);
    detail = "free " + block_text(*s.sp);
  }
  StepInfo info = fired(rule, std::move(detail));
  info.returned_from = frame.function;
  info.callee_env = std::move(s.rho);
  s.rho = frame.rho;
  if (config.mutation != Mutation::kBrokenReturnBinding) {
    for (std::size_t i = 0; i < vl.size(); ++i) s.rho[frame.results[i]] = vl[i];
  }
  s.sp = frame.sp;
  info.returned = std::move(vl);
  k.control = call->next;
  return info;
}

StepInfo step_exit(Continuation& k, const Stmt& st, const ControlPtr& after,
                   const SemanticsConfig& config) {
  const ControlNode* c = after.get();
  while (c->kind == ControlKind::kSeq) c = c->next.get();
  if (c->kind == ControlKind::kHole) {
    return stuck(StuckReason::kOpaqueControl, "exit " + std::to_string(st.exit_level));
  }
  if (c->kind != ControlKind::kBlock) {
    return stuck(StuckReason::kExitPastBlock, "exit " + std::to_string(st.exit_level));
  }
  if (st.exit_level == 0 || config.mutation == Mutation::kBrokenExit) {
    k.control = c->next;
    return fired(Rule::kExitZero);
  }
  k.control = kseq(Stmt::exit(st.exit_level - 1), c->next);
  return fired(Rule::kExitSucc);
}

StepInfo step_call(const GlobalEnv& genv, Continuation& k, const Stmt& st,
                   const ControlPtr& after, const SemanticsConfig& config) {
  State& s = k.state;
  const EvalContext ctx = context_for(s, config);
  EvalResult target = evaluate(genv, ctx, *st.e1);
  if (!target) return stuck(target.reason, "call target");
  const Value& fv = *target.value;
  std::shared_ptr<const FunDef> callee;
  if (fv.is_ptr() && fv.ptr_offset() == Int32(0)) {
    callee = genv.function_at(fv.ptr_block());
  }
  if (!callee) return stuck(StuckReason::kNotAFunction, to_string(fv));
  StuckReason why = StuckReason::kNone;
  auto vl = evaluate_list(genv, ctx, st.args, &why);
  if (!vl) return stuck(why, "call arguments");
  if (vl->size() != callee->params.size() ||
      callee->result_arity != st.results.size()) {
    return stuck(StuckReason::kArityMismatch, "call " + callee->name);
  }

  auto frame = std::make_shared<CallFrame>();
  frame->results = st.results;
  frame->function = callee;
  frame->sp = s.sp;
  frame->rho = std::move(s.rho);

  const BlockId b = s.mem.alloc_in_place(0, callee->stackspace);
  if (grants_stack(config) && callee->stackspace > 0) {
    s.phi = *fp_grant(s.phi, b, 0, callee->stackspace, Share::full());
  }
  s.sp = b;
  s.rho = Env();
  for (std::size_t i = 0; i < vl->size(); ++i) s.rho[callee->params[i]] = (*vl)[i];
  for (const Ident& x : callee->locals) s.rho[x] = Value::undef();

  k.control = kseq(callee->body, kcall(std::move(frame), after));
  return fired(Rule::kCall, "alloc " + block_text(b) + "[0," +
                                std::to_string(callee->stackspace) + ")");
}

StepInfo step_seq(const GlobalEnv& genv, Continuation& k,
                  const SemanticsConfig& config) {
  const ControlPtr c = k.control;
  const Stmt& st = *c->stmt;
  const ControlPtr& after = c->next;
  State& s = k.state;
  switch (st.kind) {
    case StmtKind::kSeq:
      k.control = kseq(st.s1, kseq(st.s2, after));
      return fired(Rule::kSeq);
    case StmtKind::kAssign: {
      EvalResult r = evaluate(genv, context_for(s, config), *st.e1);
      if (!r) return stuck(r.reason, st.var + " = " + print_expr(*st.e1));
      s.rho[st.var] = *r.value;
      k.control = after;
      return fired(Rule::kAssign);
    }
    case StmtKind::kStore: {
      const EvalContext ctx = context_for(s, config);
      EvalResult a = evaluate(genv, ctx, *st.e1);
      if (!a) return stuck(a.reason, "store address");
      EvalResult v = evaluate(genv, ctx, *st.e2);
      if (!v) return stuck(v.reason, "stored value");
      const std::string where = std::string(chunk_name(st.chunk)) + "[" +
                                to_string(*a.value) + "]";
      if (!a.value->is_ptr()) return stuck(StuckReason::kBadAddress, where);
      if (!config.erased && !store_permitted(s.phi, *a.value, st.chunk, config)) {
        return stuck(StuckReason::kStorePermission, where);
      }
      if (!s.mem.store_in_place(st.chunk, *a.value, *v.value)) {
        return stuck(StuckReason::kBadAddress, where);
      }
      k.control = after;
      return fired(Rule::kStore, where + "=" + to_string(*v.value));
    }
    case StmtKind::kIf: {
      EvalResult r = evaluate(genv, context_for(s, config), *st.e1);
      if (!r) return stuck(r.reason, "if condition");
      if (is_true(*r.value)) {
        k.control = kseq(st.s1, after);
        return fired(Rule::kIfTrue);
      }
      if (is_false(*r.value)) {
        k.control = kseq(st.s2, after);
        return fired(Rule::kIfFalse);
      }
      return stuck(StuckReason::kUndefinedBranch, to_string(*r.value));
    }
    case StmtKind::kSkip:
      k.control = after;
      return fired(Rule::kSkip);
    case StmtKind::kLoop:
      k.control = config.mutation == Mutation::kBrokenLoop
                      ? kseq(st.s1, after)
                      : kseq(st.s1, c);
      return fired(Rule::kLoop);
    case StmtKind::kBlock:
      k.control = config.mutation == Mutation::kBrokenBlock
                      ? kseq(st.s1, after)
                      : kseq(st.s1, kblock(after, c->stmt));
      return fired(Rule::kBlock);
    case StmtKind::kExit:
      return step_exit(k, st, after, config);
    case StmtKind::kCall:
      return step_call(genv, k, st, after, config);
    case StmtKind::kReturn: {
      StuckReason why = StuckReason::kNone;
      auto vl = evaluate_list(genv, context_for(s, config), st.args, &why);
      if (!vl) return stuck(why, "returned values");
      ControlPtr f = after;
      while (f->kind == ControlKind::kSeq || f->kind == ControlKind::kBlock) {
        f = f->next;
      }
      if (f->kind == ControlKind::kHole) return stuck(StuckReason::kOpaqueControl, "return");
      if (f->kind == ControlKind::kStop) {
        return stuck(StuckReason::kReturnOutsideFunction, "return");
      }
      return do_return(k, f, std::move(*vl), Rule::kReturn, config);
    }
    case StmtKind::kAnnot:
      k.control = kseq(st.s1, after);
      return fired(Rule::kAnnot);
  }
  return stuck(StuckReason::kNone);
}

}  // namespace

StepInfo advance(const GlobalEnv& genv, Continuation& k,
                 const SemanticsConfig& config) {
  const ControlPtr c = k.control;
  switch (c->kind) {
    case ControlKind::kStop:
      return stuck(StuckReason::kNone);
    case ControlKind::kHole:
      return stuck(StuckReason::kOpaqueControl, "hole");
    case ControlKind::kBlock:
      k.control = c->next;
      return fired(Rule::kBlockEnd);
    case ControlKind::kCall:
      if (!c->frame->results.empty()) {
        return stuck(StuckReason::kArityMismatch,
                     "function " + c->frame->function->name +
                         " ends without returning its results");
      }
      return do_return(k, c, {}, Rule::kReturnFallthrough, config);
    case ControlKind::kSeq:
      return step_seq(genv, k, config);
  }
  return stuck(StuckReason::kNone);
}

std::optional<Continuation> step(const GlobalEnv& genv, const Continuation& k,
                                 const SemanticsConfig& config) {
  Continuation next = k;
  if (!advance(genv, next, config).ok()) return std::nullopt;
  return next;
}

std::optional<std::string> is_stuck(const GlobalEnv& genv,
                                    const Continuation& k,
                                    const SemanticsConfig& config) {
  if (k.control->kind == ControlKind::kStop) return std::nullopt;
  Continuation probe = k;
  StepInfo info = advance(genv, probe, config);
  if (info.ok()) return std::nullopt;
  return std::string(to_string(info.reason));
}

Continuation initial_continuation(const GlobalEnv& genv, const Ident& entry,
                                  const std::vector<Value>& args,
                                  const SemanticsConfig& config) {
  auto fn = genv.find_function(entry);
  if (!fn) throw Error("unknown entry function: " + entry);
  if (args.size() != fn->params.size()) {
    throw Error("entry " + entry + " expects " +
                std::to_string(fn->params.size()) + " arguments, got " +
                std::to_string(args.size()));
  }
  Continuation k;
  State& s = k.state;
  s.mem = genv.initial_memory();
  if (!config.erased) {
    for (const GlobalDecl& d : genv.decls()) {
      if (d.kind == GlobalKind::kData && d.size > 0) {
        s.phi = *fp_grant(s.phi, d.block, 0, d.size, Share::full());
      }
    }
  }
  const BlockId b = s.mem.alloc_in_place(0, fn->stackspace);
  if (grants_stack(config) && fn->stackspace > 0) {
    s.phi = *fp_grant(s.phi, b, 0, fn->stackspace, Share::full());
  }
  s.sp = b;
  for (std::size_t i = 0; i < args.size(); ++i) s.rho[fn->params[i]] = args[i];
  for (const Ident& x : fn->locals) s.rho[x] = Value::undef();

  auto frame = std::make_shared<CallFrame>();
  for (std::size_t i = 0; i < fn->result_arity; ++i) {
    frame->results.push_back("$" + std::to_string(i));
  }
  frame->function = fn;
  frame->sentinel = true;
  k.control = kseq(fn->body, kcall(std::move(frame), kstop()));
  return k;
}

namespace {

std::string first_line(const std::string& text) {
  auto nl = text.find('\n');
  return nl == std::string::npos ? text : text.substr(0, nl);
}

std::string join_exprs(const std::vector<ExprPtr>& es) {
  std::string out;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i) out += ", ";
    out += print_expr(*es[i]);
  }
  return out;
}

std::string stmt_head(const Stmt& s) {
  switch (s.kind) {
    case StmtKind::kSeq: return "seq";
    case StmtKind::kLoop: return "loop";
    case StmtKind::kBlock: return "block";
    case StmtKind::kIf: return "if (" + print_expr(*s.e1) + ")";
    case StmtKind::kAnnot: return "assert";
    case StmtKind::kCall: return "call " + print_expr(*s.e1) + "(" + join_exprs(s.args) + ")";
    case StmtKind::kReturn: return s.args.empty() ? "return" : "return " + join_exprs(s.args);
    default: {
      std::string text = first_line(print_stmt(s));
      if (!text.empty() && text.back() == ';') text.pop_back();
      return text;
    }
  }
}

std::string rho_delta(const Env& before, const Env& after) {
  std::string out;
  auto add = [&out](const std::string& item) {
    if (!out.empty()) out += ' ';
    out += item;
  };
  for (const auto& [x, v] : after) {
    auto it = before.find(x);
    if (it == before.end() || !(it->second == v)) add(x + ":=" + to_string(v));
  }
  for (const auto& [x, v] : before) {
    if (!after.count(x)) add("-" + x);
  }
  return out;
}

std::string phi_delta(const Footprint& before, const Footprint& after) {
  std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> per_block;
  for (const auto& [a, sh] : after.entries()) {
    if (before.share_at(a) != sh) ++per_block[a.block.index].first;
  }
  for (const auto& [a, sh] : before.entries()) {
    if (after.share_at(a).is_zero()) ++per_block[a.block.index].second;
  }
  std::string out;
  for (const auto& [b, counts] : per_block) {
    if (counts.first) {
      if (!out.empty()) out += ' ';
      out += "b" + std::to_string(b) + ":+" + std::to_string(counts.first);
    }
    if (counts.second) {
      if (!out.empty()) out += ' ';
      out += "b" + std::to_string(b) + ":-" + std::to_string(counts.second);
    }
  }
  return out;
}

const std::string& or_dash(const std::string& s) {
  static const std::string dash = "-";
  return s.empty() ? dash : s;
}

}  // namespace

std::string describe_head(const ControlPtr& k) {
  switch (k->kind) {
    case ControlKind::kStop: return "stop";
    case ControlKind::kHole: return "hole " + std::to_string(k->hole);
    case ControlKind::kBlock: return "end block";
    case ControlKind::kCall: return "end " + k->frame->function->name;
    case ControlKind::kSeq: return stmt_head(*k->stmt);
  }
  return "?";
}

std::string format_trace_entry(const TraceEntry& t) {
  std::string out = std::to_string(t.index);
  out += '\t';
  out += rule_name(t.rule);
  out += '\t';
  out += or_dash(t.head);
  out += '\t';
  out += or_dash(t.rho_delta);
  out += '\t';
  out += or_dash(t.phi_delta);
  out += '\t';
  out += or_dash(t.mem_delta);
  return out;
}

std::string Outcome::describe() const {
  switch (kind) {
    case OutcomeKind::kFinished: {
      std::string out = "Finished [";
      for (std::size_t i = 0; i < results.size(); ++i) {
        if (i) out += ", ";
        out += to_string(results[i]);
      }
      return out + "]";
    }
    case OutcomeKind::kStuck: {
      std::string out = "Stuck after " + std::to_string(steps) +
                        " steps: " + std::string(to_string(reason));
      if (!detail.empty()) out += " (" + detail + ")";
      return out;
    }
    case OutcomeKind::kOutOfFuel:
      return "OutOfFuel after " + std::to_string(steps) + " steps";
  }
  return "?";
}

Outcome run_from(const GlobalEnv& genv, Continuation k, std::size_t fuel,
                 const SemanticsConfig& config,
                 std::vector<TraceEntry>* trace) {
  Outcome out;
  std::vector<Value> last_returned;
  Env last_env;
  std::size_t steps = 0;
  while (true) {
    if (k.control->kind == ControlKind::kStop) {
      out.kind = OutcomeKind::kFinished;
      out.results = std::move(last_returned);
      out.exit_env = std::move(last_env);
      break;
    }
    if (steps >= fuel) {
      out.kind = OutcomeKind::kOutOfFuel;
      break;
    }
    std::optional<State> before;
    std::string head;
    if (trace) {
      before = k.state;
      head = describe_head(k.control);
    }
    StepInfo info = advance(genv, k, config);
    if (!info.ok()) {
      out.kind = OutcomeKind::kStuck;
      out.reason = info.reason;
      out.detail = info.detail.empty() ? describe_head(k.control) : info.detail;
      break;
    }
    ++steps;
    if (info.rule == Rule::kReturn || info.rule == Rule::kReturnFallthrough) {
      last_returned = std::move(info.returned);
      if (info.callee_env) last_env = std::move(*info.callee_env);
    }
    if (trace) {
      TraceEntry t;
      t.index = steps;
      t.rule = info.rule;
      t.head = std::move(head);
      t.rho_delta = rho_delta(before->rho, k.state.rho);
      t.phi_delta = phi_delta(before->phi, k.state.phi);
      t.mem_delta = info.detail;
      trace->push_back(std::move(t));
    }
  }
  out.steps = steps;
  out.at = std::move(k);
  return out;
}

Outcome run(const GlobalEnv& genv, const Ident& entry,
            const std::vector<Value>& args, std::size_t fuel,
            const SemanticsConfig& config, std::vector<TraceEntry>* trace) {
  return run_from(genv, initial_continuation(genv, entry, args, config), fuel,
                  config, trace);
}

namespace {

// Rebuilds nodes[0..] on top of `tail`, innermost last.
ControlPtr rebuild(const std::vector<const ControlNode*>& nodes, ControlPtr tail) {
  for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
    const ControlNode* n = *it;
    switch (n->kind) {
      case ControlKind::kSeq: tail = kseq(n->stmt, std::move(tail)); break;
      case ControlKind::kBlock: tail = kblock(std::move(tail), n->origin); break;
      case ControlKind::kCall: tail = kcall(n->frame, std::move(tail)); break;
      default: break;
    }
  }
  return tail;
}

}  // namespace

ControlPtr cat(const ControlPtr& prefix, const ControlPtr& k) {
  std::vector<const ControlNode*> nodes;
  const ControlNode* c = prefix.get();
  for (; c->kind != ControlKind::kStop; c = c->next.get()) {
    if (c->kind == ControlKind::kHole) throw Error("cat: prefix ends in a hole");
    nodes.push_back(c);
  }
  return rebuild(nodes, k);
}

std::optional<ControlPtr> strip_hole(const ControlPtr& k, int hole) {
  std::vector<const ControlNode*> nodes;
  const ControlNode* c = k.get();
  for (; c->kind != ControlKind::kStop && c->kind != ControlKind::kHole;
       c = c->next.get()) {
    nodes.push_back(c);
  }
  if (c->kind != ControlKind::kHole || c->hole != hole) return std::nullopt;
  return rebuild(nodes, kstop());
}

std::optional<Continuation> absorbed_steps(const GlobalEnv& genv,
                                           const StmtPtr& s, const State& st,
                                           std::size_t j, int hole,
                                           const SemanticsConfig& config) {
  Continuation k{st, kseq(s, khole(hole))};
  for (std::size_t i = 0; i < j; ++i) {
    if (!advance(genv, k, config).ok()) return std::nullopt;
  }
  auto prefix = strip_hole(k.control, hole);
  if (!prefix) return std::nullopt;
  k.control = std::move(*prefix);
  return k;
}

bool absorbs(const GlobalEnv& genv, std::size_t n, const StmtPtr& s,
             const State& st, const SemanticsConfig& config) {
  // Stepping is deterministic, so the j-step prefixes for j <= n are the
  // intermediate configurations of one n-step run.
  return absorbed_steps(genv, s, st, n, 0, config).has_value();
}

AbsorbBound max_absorb(const GlobalEnv& genv, const StmtPtr& s,
                       const State& st, std::size_t bound,
                       const SemanticsConfig& config) {
  Continuation k{st, kseq(s, khole(0))};
  for (std::size_t i = 0; i < bound; ++i) {
    if (!advance(genv, k, config).ok()) return {i, false};
  }
  return {bound, true};
}

StmtPtr unfold_loop(const StmtPtr& s, std::size_t n) {
  StmtPtr acc = Stmt::loop(Stmt::skip());
  for (std::size_t i = 0; i < n; ++i) acc = Stmt::seq(s, acc);
  return acc;
}

}  // namespace cminor
