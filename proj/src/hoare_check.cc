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

#include "cminor/hoare_check.h"

#include <map>
#include <utility>

#include "cminor/parser.h"
#include "json.hpp"

namespace cminor {

namespace {

void collect_modified(const Stmt& s, std::set<Ident>& out) {
  switch (s.kind) {
    case StmtKind::kAssign:
      out.insert(s.var);
      break;
    case StmtKind::kCall:
      out.insert(s.results.begin(), s.results.end());
      break;
    case StmtKind::kSeq:
    case StmtKind::kIf:
      collect_modified(*s.s1, out);
      collect_modified(*s.s2, out);
      break;
    case StmtKind::kLoop:
    case StmtKind::kBlock:
    case StmtKind::kAnnot:
      collect_modified(*s.s1, out);
      break;
    case StmtKind::kStore:
    case StmtKind::kExit:
    case StmtKind::kReturn:
    case StmtKind::kSkip:
      break;
  }
}

}  // namespace

std::set<Ident> modified_vars(const Stmt& s) {
  std::set<Ident> out;
  collect_modified(s, out);
  return out;
}

bool check_frame_side_condition(const Stmt& s, const Assertion& a) {
  const std::set<Ident> mod = modified_vars(s);
  for (const Ident& x : assertion_free_vars(a)) {
    if (mod.count(x)) return false;
  }
  return true;
}

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::kGamma: return "gamma";
    case EventKind::kPrecondition: return "requires";
    case EventKind::kPostcondition: return "ensures";
    case EventKind::kInvariant: return "invariant";
    case EventKind::kBlockExit: return "exits";
    case EventKind::kAssert: return "assert";
    case EventKind::kSafety: return "safety";
  }
  return "?";
}

std::size_t CheckReport::count(Verdict v) const {
  std::size_t n = 0;
  for (const auto& e : events) n += e.verdict == v;
  return n;
}

const CheckEvent* CheckReport::first_failure() const {
  for (const auto& e : events) {
    if (e.verdict == Verdict::kFails) return &e;
  }
  return nullptr;
}

std::string CheckReport::to_text() const {
  std::string out = "check " + entry + "\n";
  for (const CheckEvent& e : events) {
    out += "step " + std::to_string(e.step) + "\t" + std::string(to_string(e.kind));
    if (e.kind == EventKind::kInvariant || e.kind == EventKind::kBlockExit) {
      out += " #" + std::to_string(e.site);
    }
    if (e.kind == EventKind::kInvariant) {
      out += " iteration " + std::to_string(e.iteration);
    }
    if (!e.function.empty()) out += "\t" + e.function;
    out += "\t" + std::string(to_string(e.verdict));
    if (!e.reason.empty()) out += ": " + e.reason;
    out += "\n";
    if (!e.state.empty()) out += "  state " + e.state + "\n";
  }
  for (const Finding& f : findings) {
    out += std::string(f.error ? "error" : "note");
    if (!f.function.empty()) out += " in " + f.function;
    out += ": " + f.message + "\n";
  }
  if (!outcome.empty()) out += "outcome: " + outcome + "\n";
  out += pass ? "verdict: pass\n" : "verdict: fail\n";
  return out;
}

std::string CheckReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["entry"] = entry;
  doc["verdict"] = pass ? "pass" : "fail";
  doc["outcome"] = outcome;
  auto evs = nlohmann::ordered_json::array();
  for (const CheckEvent& e : events) {
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(e.kind));
    j["step"] = e.step;
    j["function"] = e.function;
    j["site"] = e.site;
    j["iteration"] = e.iteration;
    j["verdict"] = std::string(to_string(e.verdict));
    j["reason"] = e.reason;
    j["assertion"] = e.assertion;
    j["state"] = e.state;
    evs.push_back(std::move(j));
  }
  doc["events"] = std::move(evs);
  auto fs = nlohmann::ordered_json::array();
  for (const Finding& f : findings) {
    nlohmann::ordered_json j;
    j["severity"] = f.error ? "error" : "note";
    j["function"] = f.function;
    j["message"] = f.message;
    fs.push_back(std::move(j));
  }
  doc["findings"] = std::move(fs);
  return doc.dump(2) + "\n";
}

namespace {

std::string first_line_of(const std::string& text) {
  auto nl = text.find('\n');
  return nl == std::string::npos ? text : text.substr(0, nl);
}

void scan(const Stmt& s, std::size_t depth, const Ident& fn,
          std::vector<Finding>& out) {
  switch (s.kind) {
    case StmtKind::kExit:
      if (s.exit_level >= depth) {
        out.push_back({true, fn,
                       "exit " + std::to_string(s.exit_level) + " under " +
                           std::to_string(depth) +
                           " enclosing blocks has no target block"});
      }
      break;
    case StmtKind::kStore:
      if (!pure(*s.e1) || !pure(*s.e2)) {
        out.push_back({false, fn,
                       "store with impure operands (" +
                           first_line_of(print_stmt(s)) +
                           ") is only covered by program transformation"});
      }
      break;
    case StmtKind::kIf:
      if (!pure(*s.e1)) {
        out.push_back({false, fn,
                       "if on impure condition (" + print_expr(*s.e1) +
                           ") is only covered by program transformation"});
      }
      scan(*s.s1, depth, fn, out);
      scan(*s.s2, depth, fn, out);
      break;
    case StmtKind::kSeq:
      scan(*s.s1, depth, fn, out);
      scan(*s.s2, depth, fn, out);
      break;
    case StmtKind::kBlock:
      scan(*s.s1, depth + 1, fn, out);
      break;
    case StmtKind::kLoop:
    case StmtKind::kAnnot:
      scan(*s.s1, depth, fn, out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Finding> static_findings(const Program& p) {
  std::vector<Finding> out;
  for (const auto& f : p.functions()) scan(*f->body, 0, f->name, out);
  return out;
}

CheckResult check_gamma(const GlobalEnv& genv, const Assertion& gamma,
                        const SatisfiesOptions& options) {
  State s;
  s.mem = genv.initial_memory();
  return satisfies(genv, s, gamma, {}, options);
}

namespace {

std::string state_summary(const State& s) {
  std::string out = "sp=";
  out += s.sp ? "b" + std::to_string(s.sp->index) : std::string("none");
  out += " rho={";
  bool first = true;
  for (const auto& [x, v] : s.rho) {
    if (!first) out += ", ";
    first = false;
    out += x + "=" + to_string(v);
  }
  out += "} phi=" + std::to_string(s.phi.size()) + " bytes";
  return out;
}

bool is_result_var(const Ident& x) { return !x.empty() && x[0] == '$'; }

// Loops and blocks of a function body numbered in preorder from 1.
void number_sites(const Stmt& s, std::map<const Stmt*, std::size_t>& sites) {
  if (s.kind == StmtKind::kLoop || s.kind == StmtKind::kBlock) {
    sites.emplace(&s, sites.size() + 1);
  }
  if (s.s1) number_sites(*s.s1, sites);
  if (s.s2) number_sites(*s.s2, sites);
}

class Checker {
 public:
  Checker(const GlobalEnv& genv, const CheckOptions& options,
          CheckReport& report)
      : genv_(genv), options_(options), report_(report) {}

  void run(const Ident& fname, const std::vector<Value>& args,
           std::size_t fuel) {
    report_.findings = static_findings(genv_);
    if (genv_.gamma()) {
      CheckResult r = check_gamma(genv_, *genv_.gamma(), options_.satisfies);
      record(EventKind::kGamma, "", 0, 0, r, genv_.gamma().get(), nullptr);
    }
    Continuation k = initial_continuation(genv_, fname, args, options_.semantics);
    enter(k.control->next->frame->function, k.state);

    bool stuck = false;
    StuckReason stuck_reason = StuckReason::kNone;
    std::string stuck_detail;
    bool finished = false;
    std::vector<Value> results;
    while (true) {
      if (k.control->kind == ControlKind::kStop) {
        finished = true;
        break;
      }
      if (steps_ >= fuel) break;
      before_step(k);
      StepInfo info = advance(genv_, k, options_.semantics);
      if (!info.ok()) {
        CheckResult r = CheckResult::fails(
            std::string(to_string(info.reason)) +
            (info.detail.empty() ? "" : " (" + info.detail + ")"));
        record(EventKind::kSafety, current_name(), 0, 0, r, nullptr, &k.state);
        stuck = true;
        stuck_reason = info.reason;
        stuck_detail = info.detail;
        break;
      }
      ++steps_;
      if (info.rule == Rule::kCall) {
        enter(k.control->next->frame->function, k.state);
      } else if (info.rule == Rule::kReturn ||
                 info.rule == Rule::kReturnFallthrough) {
        leave(k, info);
        results = info.returned;
      }
    }

    Outcome out;
    out.steps = steps_;
    if (finished) {
      out.kind = OutcomeKind::kFinished;
      out.results = results;
    } else if (stuck) {
      out.kind = OutcomeKind::kStuck;
      out.reason = stuck_reason;
      out.detail = stuck_detail;
    } else {
      out.kind = OutcomeKind::kOutOfFuel;
    }
    report_.outcome = out.describe();

    const bool strict = options_.mode == CheckMode::kStrict;
    bool pass = !stuck && report_.count(Verdict::kFails) == 0;
    for (const Finding& f : report_.findings) pass = pass && !f.error;
    if (strict) {
      pass = pass && finished && report_.count(Verdict::kUnknown) == 0;
    } else {
      if (!finished && !stuck) {
        report_.findings.push_back({false, fname, "run ran out of fuel"});
      }
      for (const CheckEvent& e : report_.events) {
        if (e.verdict == Verdict::kUnknown) {
          report_.findings.push_back(
              {false, e.function,
               "unknown " + std::string(to_string(e.kind)) + " at step " +
                   std::to_string(e.step) + " treated as a warning"});
        }
      }
    }
    report_.pass = pass;
  }

 private:
  struct Activation {
    std::shared_ptr<const FunDef> fn;
    Env aux;
    std::map<const Stmt*, std::size_t> arrivals;
  };

  const std::string& current_name() const {
    static const std::string none;
    return acts_.empty() ? none : acts_.back().fn->name;
  }

  std::size_t site_of(const FunDef& fn, const Stmt* s) {
    auto& sites = sites_[&fn];
    if (sites.empty() && fn.body) number_sites(*fn.body, sites);
    auto it = sites.find(s);
    return it == sites.end() ? 0 : it->second;
  }

  void record(EventKind kind, const std::string& fn, std::size_t site,
              std::size_t iteration, const CheckResult& r, const Assertion* a,
              const State* s) {
    CheckEvent e;
    e.kind = kind;
    e.step = steps_;
    e.function = fn;
    e.site = site;
    e.iteration = iteration;
    e.verdict = r.verdict;
    e.reason = r.reason;
    if (!r.is_holds()) {
      if (a) e.assertion = print_assertion(*a);
      if (s) e.state = state_summary(*s);
    }
    report_.events.push_back(std::move(e));
  }

  void check(EventKind kind, std::size_t site, std::size_t iteration,
             const Assertion& a, const State& s) {
    const Env& logic = acts_.empty() ? empty_ : acts_.back().aux;
    CheckResult r = satisfies(genv_, s, a, logic, options_.satisfies);
    record(kind, current_name(), site, iteration, r, &a, &s);
  }

  void enter(const std::shared_ptr<const FunDef>& fn, const State& s) {
    Activation act;
    act.fn = fn;
    std::set<Ident> post_vars;
    if (fn->postcondition) post_vars = assertion_free_logic_vars(*fn->postcondition);
    if (fn->precondition) {
      std::vector<Ident> aux;
      for (const Ident& x : assertion_free_logic_vars(*fn->precondition)) {
        if (!is_result_var(x)) aux.push_back(x);
      }
      CheckResult last;
      auto found = find_witnesses(genv_, s, *fn->precondition, aux, {},
                                  options_.satisfies, &last);
      acts_.push_back(act);
      if (found) {
        acts_.back().aux = std::move(*found);
        record(EventKind::kPrecondition, fn->name, 0, 0, CheckResult::holds(),
               fn->precondition.get(), &s);
      } else {
        record(EventKind::kPrecondition, fn->name, 0, 0, last,
               fn->precondition.get(), &s);
      }
    } else {
      acts_.push_back(act);
    }
    for (const Ident& x : post_vars) {
      if (!is_result_var(x) && !acts_.back().aux.count(x)) {
        report_.findings.push_back(
            {true, fn->name,
             "auxiliary variable '" + x + "' of ensures is not bound by requires"});
      }
    }
  }

  void leave(const Continuation& k, const StepInfo& info) {
    if (acts_.empty()) return;
    Activation act = std::move(acts_.back());
    acts_.pop_back();
    const FunDef& fn = *act.fn;
    if (!fn.postcondition) return;
    State post = k.state;
    if (info.callee_env) post.rho = *info.callee_env;
    Env logic = act.aux;
    for (std::size_t i = 0; i < info.returned.size(); ++i) {
      logic["$" + std::to_string(i)] = info.returned[i];
    }
    CheckResult r = satisfies(genv_, post, *fn.postcondition, logic,
                              options_.satisfies);
    record(EventKind::kPostcondition, fn.name, 0, 0, r, fn.postcondition.get(),
           &post);
  }

  // Annotation events that fire when a configuration is about to step.
  void before_step(const Continuation& k) {
    const ControlNode& c = *k.control;
    if (acts_.empty()) return;
    const FunDef& fn = *acts_.back().fn;
    if (c.kind == ControlKind::kBlock) {
      if (c.origin && c.origin->annotation) {
        check(EventKind::kBlockExit, site_of(fn, c.origin.get()), 0,
              *c.origin->annotation, k.state);
      }
      return;
    }
    if (c.kind != ControlKind::kSeq) return;
    const Stmt& s = *c.stmt;
    switch (s.kind) {
      case StmtKind::kLoop:
        if (s.annotation) {
          std::size_t n = acts_.back().arrivals[&s]++;
          check(EventKind::kInvariant, site_of(fn, &s), n, *s.annotation,
                k.state);
        }
        break;
      case StmtKind::kAnnot:
        check(EventKind::kAssert, 0, 0, *s.annotation, k.state);
        break;
      case StmtKind::kExit: {
        const ControlNode* t = c.next.get();
        std::uint32_t level = s.exit_level;
        while (t) {
          if (t->kind == ControlKind::kBlock) {
            if (level == 0) break;
            --level;
          } else if (t->kind != ControlKind::kSeq) {
            t = nullptr;
            break;
          }
          t = t->next.get();
        }
        if (t && t->origin && t->origin->annotation) {
          check(EventKind::kBlockExit, site_of(fn, t->origin.get()), 0,
                *t->origin->annotation, k.state);
        }
        break;
      }
      default:
        break;
    }
  }

  const GlobalEnv& genv_;
  const CheckOptions& options_;
  CheckReport& report_;
  std::vector<Activation> acts_;
  std::map<const FunDef*, std::map<const Stmt*, std::size_t>> sites_;
  std::size_t steps_ = 0;
  const Env empty_;
};

}  // namespace

CheckReport check_function(const GlobalEnv& genv, const Ident& fname,
                           const std::vector<Value>& args, std::size_t fuel,
                           const CheckOptions& options) {
  CheckReport report;
  report.entry = fname;
  Checker(genv, options, report).run(fname, args, fuel);
  return report;
}

namespace {

Share subtract(Share have, Share take) {
  const std::uint64_t a = have.numerator() * take.denominator();
  const std::uint64_t b = take.numerator() * have.denominator();
  if (b > a) throw Error("frame share exceeds the footprint");
  return Share(a - b, have.denominator() * take.denominator());
}

}  // namespace

FrameCheck dynamic_frame_check(const GlobalEnv& genv, const State& s,
                               const StmtPtr& stmt, const Assertion& a,
                               const Footprint& frame, std::size_t fuel,
                               const Env& logic_env,
                               const SatisfiesOptions& options) {
  FrameCheck out;
  out.side_condition = check_frame_side_condition(*stmt, a);
  State framed = s;
  framed.phi = frame;
  out.before = satisfies(genv, framed, a, logic_env, options);

  State rest = s;
  for (const auto& [addr, share] : frame.entries()) {
    rest.phi.set(addr, subtract(s.phi.share_at(addr), share));
  }
  Outcome o = run_from(genv, Continuation{rest, kseq(stmt, kstop())}, fuel);
  out.run_outcome = o.describe();
  out.ran = o.kind == OutcomeKind::kFinished;
  if (!out.ran) {
    out.after = CheckResult::unknown("statement did not finish: " + out.run_outcome);
    return out;
  }
  State post = o.at.state;
  post.phi = frame;
  out.after = satisfies(genv, post, a, logic_env, options);
  return out;
}

}  // namespace cminor
