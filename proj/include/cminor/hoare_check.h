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

// Runtime checking of Hoare annotations along one concrete execution:
// preconditions, postconditions, loop invariants, block exit conditions
// and inline assertions, plus the static side conditions of the rules.

#ifndef CMINOR_HOARE_CHECK_H_
#define CMINOR_HOARE_CHECK_H_

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "cminor/assertions.h"
#include "cminor/smallstep.h"

namespace cminor {

// Variables a statement may assign: assignment targets and call result
// variables, through both branches of every if.
std::set<Ident> modified_vars(const Stmt& s);

// modified_vars(s) and assertion_free_vars(a) are disjoint.
bool check_frame_side_condition(const Stmt& s, const Assertion& a);

enum class CheckMode : std::uint8_t { kStrict, kPermissive };

struct CheckOptions {
  CheckMode mode = CheckMode::kStrict;
  SatisfiesOptions satisfies;
  SemanticsConfig semantics;
};

enum class EventKind : std::uint8_t {
  kGamma,
  kPrecondition,
  kPostcondition,
  kInvariant,
  kBlockExit,
  kAssert,
  kSafety,
};

std::string_view to_string(EventKind k);

struct CheckEvent {
  EventKind kind = EventKind::kAssert;
  std::size_t step = 0;       // steps taken before the check
  std::string function;
  std::size_t iteration = 0;  // kInvariant: arrivals at this loop before
  std::size_t site = 0;       // loop or block ordinal within the function
  Verdict verdict = Verdict::kHolds;
  std::string reason;
  std::string assertion;
  std::string state;  // short summary of sigma
};

struct Finding {
  bool error = false;  // errors fail the report, notes do not
  std::string function;
  std::string message;
};

struct CheckReport {
  std::string entry;
  std::vector<CheckEvent> events;
  std::vector<Finding> findings;
  std::string outcome;  // Outcome::describe() of the run, or empty
  bool pass = false;

  std::size_t count(Verdict v) const;
  const CheckEvent* first_failure() const;

  // One line per event and finding, then "verdict: pass" or
  // "verdict: fail".
  std::string to_text() const;
  // Fields: entry, verdict, outcome, events[kind, step, function, site,
  // iteration, verdict, reason, assertion, state], findings[severity,
  // function, message].
  std::string to_json() const;
};

// Static findings: exits that escape their function's blocks (errors),
// impure store and if expressions (notes).
std::vector<Finding> static_findings(const Program& p);

// The global facts, on the initial memory with an empty footprint and no
// activation.
CheckResult check_gamma(const GlobalEnv& genv, const Assertion& gamma,
                        const SatisfiesOptions& options = {});

CheckReport check_function(const GlobalEnv& genv, const Ident& fname,
                           const std::vector<Value>& args, std::size_t fuel,
                           const CheckOptions& options = {});

// Frame rule, executed: `frame` is the part of s.phi claimed by `a`.
// s runs alone (Kseq(s, Kstop)) on the rest of the footprint; a must still
// hold on `frame` afterwards.
struct FrameCheck {
  bool side_condition = false;
  CheckResult before;
  bool ran = false;     // the reduced run finished
  std::string run_outcome;
  CheckResult after;
};

FrameCheck dynamic_frame_check(const GlobalEnv& genv, const State& s,
                               const StmtPtr& stmt, const Assertion& a,
                               const Footprint& frame, std::size_t fuel,
                               const Env& logic_env = {},
                               const SatisfiesOptions& options = {});

}  // namespace cminor

#endif  // CMINOR_HOARE_CHECK_H_
