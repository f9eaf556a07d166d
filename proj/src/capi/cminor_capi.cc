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

#include "cminor/cminor.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "cminor/hoare_check.h"
#include "cminor/oracle.h"
#include "cminor/parser.h"
#include "cminor/smallstep.h"

struct cminor_program {
  cminor::Program program;
};

struct cminor_outcome {
  cminor::Outcome outcome;
  std::string description;
  std::string trace;
};

struct cminor_report {
  cminor::CheckReport report;
  std::string text;
  std::string json;
};

namespace {

thread_local std::string g_error;
thread_local int g_line = 0;
thread_local int g_column = 0;

cminor_status fail(cminor_status s, std::string message) {
  g_error = std::move(message);
  g_line = 0;
  g_column = 0;
  return s;
}

cminor_status ok() {
  g_error.clear();
  g_line = 0;
  g_column = 0;
  return CMINOR_OK;
}

// Runs f, mapping exceptions to status codes.
template <typename F>
cminor_status guarded(F&& f) {
  try {
    return f();
  } catch (const cminor::SyntaxError& e) {
    cminor_status s = fail(CMINOR_ERR_PARSE, e.what());
    g_line = e.line();
    g_column = e.column();
    return s;
  } catch (const cminor::Error& e) {
    return fail(CMINOR_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CMINOR_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CMINOR_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

cminor::Value to_value(const cminor_value& v) {
  switch (v.kind) {
    case CMINOR_VUNDEF: return cminor::Value::undef();
    case CMINOR_VINT: return cminor::Value::integer(v.i);
    case CMINOR_VPTR: return cminor::Value::pointer(cminor::BlockId{v.block}, v.offset);
    case CMINOR_VFLOAT: return cminor::Value::floating(v.f);
  }
  throw cminor::Error("bad value kind");
}

cminor_value from_value(const cminor::Value& v) {
  cminor_value out{};
  switch (v.kind()) {
    case cminor::ValueKind::kUndef:
      out.kind = CMINOR_VUNDEF;
      break;
    case cminor::ValueKind::kInt:
      out.kind = CMINOR_VINT;
      out.i = v.as_int().signed_value();
      break;
    case cminor::ValueKind::kPtr:
      out.kind = CMINOR_VPTR;
      out.block = v.ptr_block().index;
      out.offset = v.ptr_offset().signed_value();
      break;
    case cminor::ValueKind::kFloat:
      out.kind = CMINOR_VFLOAT;
      out.f = v.as_float();
      break;
  }
  return out;
}

std::vector<cminor::Value> to_values(const cminor_value* args, size_t nargs) {
  if (nargs > 0 && !args) throw cminor::Error("null argument array");
  std::vector<cminor::Value> out;
  for (size_t i = 0; i < nargs; ++i) out.push_back(to_value(args[i]));
  return out;
}

std::string entry_or_default(const cminor::Program& p, const char* entry) {
  std::string e = entry ? entry : "";
  if (e.empty()) e = p.entry();
  if (e.empty() || !p.find_function(e)) throw std::out_of_range("unknown function: " + e);
  return e;
}

}  // namespace

extern "C" {

const char* cminor_version(void) { return "1.0.0"; }
const char* cminor_last_error(void) { return g_error.c_str(); }
int cminor_last_error_line(void) { return g_line; }
int cminor_last_error_column(void) { return g_column; }
void cminor_string_free(char* s) { std::free(s); }

cminor_status cminor_value_parse(const char* text, cminor_value* out) {
  if (!text || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  std::string t = text;
  cminor_value v{};
  if (t == "undef") {
    v.kind = CMINOR_VUNDEF;
  } else if (t == "nan" || t == "inf" || t == "-inf") {
    v.kind = CMINOR_VFLOAT;
    v.f = t == "nan"   ? std::numeric_limits<double>::quiet_NaN()
          : t == "inf" ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
  } else if (t.find_first_of(".eE") != std::string::npos &&
             t.rfind("0x", 0) != 0 && t.rfind("-0x", 0) != 0) {
    char* end = nullptr;
    double d = std::strtod(t.c_str(), &end);
    if (t.empty() || *end != '\0') return fail(CMINOR_ERR_PARSE, "bad literal '" + t + "'");
    v.kind = CMINOR_VFLOAT;
    v.f = d;
  } else {
    bool neg = !t.empty() && t[0] == '-';
    std::string digits = neg ? t.substr(1) : t;
    int base = 10;
    if (digits.rfind("0x", 0) == 0 || digits.rfind("0X", 0) == 0) {
      base = 16;
      digits = digits.substr(2);
    }
    std::uint64_t mag = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), mag, base);
    if (digits.empty() || ec != std::errc() || p != digits.data() + digits.size()) {
      return fail(CMINOR_ERR_PARSE, "bad literal '" + t + "'");
    }
    if ((neg && mag > 0x80000000ull) || (!neg && mag > 0xFFFFFFFFull)) {
      return fail(CMINOR_ERR_PARSE, "literal out of 32-bit range '" + t + "'");
    }
    std::uint32_t bits = static_cast<std::uint32_t>(mag);
    if (neg) bits = 0u - bits;
    v.kind = CMINOR_VINT;
    v.i = static_cast<std::int32_t>(bits);
  }
  *out = v;
  return ok();
}

cminor_status cminor_value_format(const cminor_value* v, char** out) {
  if (!v || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(cminor::to_string(to_value(*v)));
    return ok();
  });
}

cminor_status cminor_program_parse(const char* text, cminor_program** out) {
  if (!text || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto p = std::make_unique<cminor_program>();
    p->program = cminor::parse_program(text);
    try {
      for (const auto& f : p->program.functions()) cminor::validate_function(*f);
    } catch (const cminor::SyntaxError&) {
      throw;
    } catch (const cminor::Error& e) {
      return fail(CMINOR_ERR_PARSE, e.what());
    }
    *out = p.release();
    return ok();
  });
}

cminor_status cminor_program_load(const char* path, cminor_program** out) {
  if (!path || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  std::ifstream in(path, std::ios::binary);
  if (!in) return fail(CMINOR_ERR_IO, std::string("cannot read ") + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return fail(CMINOR_ERR_IO, std::string("cannot read ") + path);
  return cminor_program_parse(buf.str().c_str(), out);
}

void cminor_program_free(cminor_program* p) { delete p; }

cminor_status cminor_program_format(const cminor_program* p, char** out) {
  if (!p || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = copy_string(cminor::print_program(p->program));
    return ok();
  });
}

cminor_status cminor_program_entry(const cminor_program* p, char** out) {
  if (!p || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  const std::string e = p->program.entry();
  if (e.empty()) return fail(CMINOR_ERR_NOT_FOUND, "program defines no function");
  return guarded([&] {
    *out = copy_string(e);
    return ok();
  });
}

cminor_status cminor_run(const cminor_program* p, const char* entry,
                         const cminor_value* args, size_t nargs, uint64_t fuel,
                         const cminor_run_options* options,
                         cminor_outcome** out) {
  if (!p || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  if (fuel == 0) return fail(CMINOR_ERR_INVALID_ARGUMENT, "fuel must be positive");
  try {
    const std::string e = entry_or_default(p->program, entry);
    cminor::SemanticsConfig config;
    bool trace = false;
    if (options) {
      config.erased = options->erased != 0;
      trace = options->trace != 0;
      if (options->mutation) {
        auto m = cminor::mutation_from_name(options->mutation);
        if (!m) return fail(CMINOR_ERR_INVALID_ARGUMENT,
                            std::string("unknown mutation: ") + options->mutation);
        config.mutation = *m;
      }
    }
    return guarded([&] {
      auto o = std::make_unique<cminor_outcome>();
      std::vector<cminor::TraceEntry> entries;
      o->outcome = cminor::run(p->program, e, to_values(args, nargs), fuel, config,
                               trace ? &entries : nullptr);
      o->description = o->outcome.describe();
      for (const auto& t : entries) o->trace += cminor::format_trace_entry(t) + "\n";
      *out = o.release();
      return ok();
    });
  } catch (const std::out_of_range& ex) {
    return fail(CMINOR_ERR_NOT_FOUND, ex.what());
  }
}

void cminor_outcome_free(cminor_outcome* o) { delete o; }

cminor_outcome_kind cminor_outcome_kind_of(const cminor_outcome* o) {
  switch (o->outcome.kind) {
    case cminor::OutcomeKind::kFinished: return CMINOR_FINISHED;
    case cminor::OutcomeKind::kStuck: return CMINOR_STUCK;
    case cminor::OutcomeKind::kOutOfFuel: return CMINOR_OUT_OF_FUEL;
  }
  return CMINOR_STUCK;
}

uint64_t cminor_outcome_steps(const cminor_outcome* o) { return o->outcome.steps; }

size_t cminor_outcome_result_count(const cminor_outcome* o) {
  return o->outcome.results.size();
}

cminor_status cminor_outcome_result(const cminor_outcome* o, size_t i,
                                    cminor_value* out) {
  if (!o || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  if (i >= o->outcome.results.size()) {
    return fail(CMINOR_ERR_INVALID_ARGUMENT, "result index out of range");
  }
  *out = from_value(o->outcome.results[i]);
  return ok();
}

const char* cminor_outcome_describe(const cminor_outcome* o) {
  return o->description.c_str();
}

const char* cminor_outcome_trace(const cminor_outcome* o) { return o->trace.c_str(); }

cminor_status cminor_check(const cminor_program* p, const char* entry,
                           const cminor_value* args, size_t nargs,
                           uint64_t fuel, int strict, cminor_report** out) {
  if (!p || !out) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  if (fuel == 0) return fail(CMINOR_ERR_INVALID_ARGUMENT, "fuel must be positive");
  try {
    const std::string e = entry_or_default(p->program, entry);
    return guarded([&] {
      cminor::CheckOptions options;
      options.mode = strict ? cminor::CheckMode::kStrict : cminor::CheckMode::kPermissive;
      auto r = std::make_unique<cminor_report>();
      r->report = cminor::check_function(p->program, e, to_values(args, nargs), fuel, options);
      r->text = r->report.to_text();
      r->json = r->report.to_json();
      *out = r.release();
      return ok();
    });
  } catch (const std::out_of_range& ex) {
    return fail(CMINOR_ERR_NOT_FOUND, ex.what());
  }
}

void cminor_report_free(cminor_report* r) { delete r; }
int cminor_report_passed(const cminor_report* r) { return r->report.pass ? 1 : 0; }
const char* cminor_report_text(const cminor_report* r) { return r->text.c_str(); }
const char* cminor_report_json(const cminor_report* r) { return r->json.c_str(); }

int64_t cminor_report_first_failure_step(const cminor_report* r) {
  const cminor::CheckEvent* e = r->report.first_failure();
  return e ? static_cast<int64_t>(e->step) : -1;
}

cminor_status cminor_difftest(const char* mode, uint64_t seed, size_t count,
                              uint64_t fuel, const char* mutation, int* passed,
                              char** report) {
  if (!mode || !passed || !report) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  const std::string m = mode;
  if (m != "bigstep" && m != "erasure") {
    return fail(CMINOR_ERR_INVALID_ARGUMENT, "mode must be bigstep or erasure");
  }
  if (fuel == 0) return fail(CMINOR_ERR_INVALID_ARGUMENT, "fuel must be positive");
  cminor::SemanticsConfig config;
  if (mutation) {
    auto mu = cminor::mutation_from_name(mutation);
    if (!mu) return fail(CMINOR_ERR_INVALID_ARGUMENT, std::string("unknown mutation: ") + mutation);
    config.mutation = *mu;
  }
  return guarded([&] {
    cminor::GenConfig cfg;
    cfg.seed = seed;
    cminor::DiffReport r = m == "bigstep"
                               ? cminor::difftest_smallstep_vs_bigstep(cfg, count, fuel, config)
                               : cminor::difftest_erasure(cfg, count, fuel, config);
    *passed = r.ok() ? 1 : 0;
    *report = copy_string(r.to_text());
    return ok();
  });
}

cminor_status cminor_max_absorb(const cminor_program* p, const char* function,
                                size_t index, const cminor_value* args,
                                size_t nargs, size_t bound, size_t* steps,
                                int* at_least_bound) {
  if (!p || !steps || !at_least_bound) return fail(CMINOR_ERR_INVALID_ARGUMENT, "null argument");
  try {
    const std::string e = entry_or_default(p->program, function);
    return guarded([&] {
      auto fn = p->program.find_function(e);
      std::vector<cminor::Value> vals = to_values(args, nargs);
      if (nargs == 0) vals.assign(fn->params.size(), cminor::Value::integer(0));
      const auto stmts = cminor::flatten_seq(fn->body);
      if (index >= stmts.size()) {
        return fail(CMINOR_ERR_NOT_FOUND,
                    "function " + e + " has " + std::to_string(stmts.size()) +
                        " top-level statements");
      }
      cminor::Continuation k = cminor::initial_continuation(p->program, e, vals);
      cminor::AbsorbBound b = cminor::max_absorb(p->program, stmts[index], k.state, bound);
      *steps = b.steps;
      *at_least_bound = b.at_least_bound ? 1 : 0;
      return ok();
    });
  } catch (const std::out_of_range& ex) {
    return fail(CMINOR_ERR_NOT_FOUND, ex.what());
  }
}

}  // extern "C"
