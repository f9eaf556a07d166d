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

// Command-line front end. Talks to the workbench only through the C API.
//
// Exit codes: 0 success (run: Finished, check: pass, difftest: no
// divergence), 1 check or difftest failure, 2 run Stuck, 3 run OutOfFuel,
// 64 usage, 65 parse error, 66 I/O error, 70 internal error.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cminor/cminor.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitStuck = 2;
constexpr int kExitOutOfFuel = 3;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitIo = 66;
constexpr int kExitInternal = 70;

struct CliConfig {
  std::string file;
  std::string entry;
  std::vector<std::string> args;
  std::uint64_t fuel = 1000000;
  bool erased = false;
  bool trace = false;
  bool permissive = false;
  bool json = false;
  std::string mode;
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::string mutation;
  std::size_t stmt_index = 0;
  std::size_t bound = 1 << 16;
  std::string output;
};

class ProgramHandle {
 public:
  ~ProgramHandle() { cminor_program_free(p_); }
  cminor_program** out() { return &p_; }
  const cminor_program* get() const { return p_; }

 private:
  cminor_program* p_ = nullptr;
};

int status_exit(cminor_status s) {
  switch (s) {
    case CMINOR_OK: return 0;
    case CMINOR_ERR_PARSE: return kExitParse;
    case CMINOR_ERR_IO: return kExitIo;
    case CMINOR_ERR_INVALID_ARGUMENT:
    case CMINOR_ERR_NOT_FOUND: return kExitUsage;
    default: return kExitInternal;
  }
}

int report_error(cminor_status s, const std::string& file) {
  std::string where;
  if (s == CMINOR_ERR_PARSE && !file.empty()) where = file + ":";
  std::cerr << "cminor: " << where << cminor_last_error() << "\n";
  return status_exit(s);
}

bool use_color(const CliConfig& cfg) {
  const char* env = std::getenv("CMINOR_COLOR");
  if (env && std::string(env) == "0") return false;
  return cfg.output.empty() && isatty(STDOUT_FILENO);
}

std::string paint(const std::string& text, const char* code, bool color) {
  if (!color) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

// Writes to --output when given, else stdout.
int emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return std::cout ? 0 : kExitIo;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    std::cerr << "cminor: cannot write " << cfg.output << "\n";
    return kExitIo;
  }
  return 0;
}

int parse_args(const CliConfig& cfg, std::vector<cminor_value>& out) {
  for (const std::string& a : cfg.args) {
    cminor_value v;
    if (cminor_value_parse(a.c_str(), &v) != CMINOR_OK) {
      std::cerr << "cminor: " << cminor_last_error() << "\n";
      return kExitUsage;
    }
    out.push_back(v);
  }
  return 0;
}

int load(const CliConfig& cfg, ProgramHandle& p) {
  cminor_status s = cminor_program_load(cfg.file.c_str(), p.out());
  return s == CMINOR_OK ? 0 : report_error(s, cfg.file);
}

const char* entry_arg(const CliConfig& cfg) {
  return cfg.entry.empty() ? nullptr : cfg.entry.c_str();
}

int cmd_run(const CliConfig& cfg) {
  ProgramHandle p;
  if (int rc = load(cfg, p)) return rc;
  std::vector<cminor_value> args;
  if (int rc = parse_args(cfg, args)) return rc;
  cminor_run_options opts{cfg.erased ? 1 : 0, cfg.trace ? 1 : 0,
                          cfg.mutation.empty() ? nullptr : cfg.mutation.c_str()};
  cminor_outcome* o = nullptr;
  cminor_status s = cminor_run(p.get(), entry_arg(cfg), args.data(), args.size(),
                               cfg.fuel, &opts, &o);
  if (s != CMINOR_OK) return report_error(s, cfg.file);
  const bool color = use_color(cfg);
  std::string text = cminor_outcome_trace(o);
  const cminor_outcome_kind kind = cminor_outcome_kind_of(o);
  const char* code = kind == CMINOR_FINISHED ? "32" : kind == CMINOR_STUCK ? "31" : "33";
  text += paint(cminor_outcome_describe(o), code, color) + "\n";
  cminor_outcome_free(o);
  if (int rc = emit(cfg, text)) return rc;
  switch (kind) {
    case CMINOR_FINISHED: return 0;
    case CMINOR_STUCK: return kExitStuck;
    default: return kExitOutOfFuel;
  }
}

int cmd_check(const CliConfig& cfg) {
  ProgramHandle p;
  if (int rc = load(cfg, p)) return rc;
  std::vector<cminor_value> args;
  if (int rc = parse_args(cfg, args)) return rc;
  cminor_report* r = nullptr;
  cminor_status s = cminor_check(p.get(), entry_arg(cfg), args.data(), args.size(),
                                 cfg.fuel, cfg.permissive ? 0 : 1, &r);
  if (s != CMINOR_OK) return report_error(s, cfg.file);
  const bool passed = cminor_report_passed(r) != 0;
  std::string text;
  if (cfg.json) {
    text = cminor_report_json(r);
  } else {
    text = cminor_report_text(r);
    const std::int64_t at = cminor_report_first_failure_step(r);
    if (at >= 0) text += "first failure at step " + std::to_string(at) + "\n";
    if (use_color(cfg)) {
      const std::string verdict = passed ? "verdict: pass" : "verdict: fail";
      auto pos = text.rfind(verdict);
      if (pos != std::string::npos) {
        text.replace(pos, verdict.size(), paint(verdict, passed ? "32" : "31", true));
      }
    }
  }
  cminor_report_free(r);
  if (int rc = emit(cfg, text)) return rc;
  return passed ? 0 : kExitFail;
}

int cmd_difftest(const CliConfig& cfg) {
  int passed = 0;
  char* report = nullptr;
  cminor_status s = cminor_difftest(cfg.mode.c_str(), cfg.seed, cfg.count, cfg.fuel,
                                    cfg.mutation.empty() ? nullptr : cfg.mutation.c_str(),
                                    &passed, &report);
  if (s != CMINOR_OK) return report_error(s, "");
  std::string text = std::string(cfg.mode) + " " + report;
  cminor_string_free(report);
  if (int rc = emit(cfg, text)) return rc;
  return passed ? 0 : kExitFail;
}

int cmd_absorb(const CliConfig& cfg) {
  ProgramHandle p;
  if (int rc = load(cfg, p)) return rc;
  std::vector<cminor_value> args;
  if (int rc = parse_args(cfg, args)) return rc;
  std::size_t steps = 0;
  int at_least = 0;
  cminor_status s = cminor_max_absorb(p.get(), entry_arg(cfg), cfg.stmt_index,
                                      args.data(), args.size(), cfg.bound, &steps,
                                      &at_least);
  if (s != CMINOR_OK) return report_error(s, cfg.file);
  std::string text = "statement " + std::to_string(cfg.stmt_index) + " absorbs " +
                     std::to_string(steps) + " steps";
  if (at_least) text += " (bound reached)";
  text += "\n";
  return emit(cfg, text);
}

int cmd_fmt(const CliConfig& cfg) {
  ProgramHandle p;
  if (int rc = load(cfg, p)) return rc;
  char* text = nullptr;
  cminor_status s = cminor_program_format(p.get(), &text);
  if (s != CMINOR_OK) return report_error(s, cfg.file);
  std::string out = text;
  cminor_string_free(text);
  return emit(cfg, out);
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig cfg;
  CLI::App app{"Executable semantics workbench for sequential Cminor", "cminor"};
  app.require_subcommand(1);
  app.set_version_flag("--version", cminor_version());

  auto add_program_opts = [&cfg](CLI::App* sub) {
    sub->add_option("file", cfg.file, "Program file")->required();
    sub->add_option("--entry", cfg.entry, "Function to run (default: main)");
    sub->add_option("--args", cfg.args, "Literal arguments (ints, floats)")
        ->allow_extra_args();
    sub->add_option("-o,--output", cfg.output, "Write output to this file");
  };
  auto add_fuel = [&cfg](CLI::App* sub) {
    sub->add_option("--fuel", cfg.fuel, "Step budget")->check(CLI::PositiveNumber);
  };

  CLI::App* run = app.add_subcommand("run", "Run a function with the small-step interpreter");
  add_program_opts(run);
  add_fuel(run);
  run->add_flag("--erased", cfg.erased, "Skip footprint checks");
  run->add_flag("--trace", cfg.trace, "Print one line per step");
  run->add_option("--mutation", cfg.mutation, "Run a deliberately broken rule variant");

  CLI::App* check = app.add_subcommand("check", "Check Hoare annotations along one run");
  add_program_opts(check);
  add_fuel(check);
  auto* strict = check->add_flag("--strict", "Unknown verdicts fail (default)");
  check->add_flag("--permissive", cfg.permissive, "Unknown verdicts only warn")
      ->excludes(strict);
  check->add_flag("--json", cfg.json, "Structured report");

  CLI::App* diff = app.add_subcommand("difftest", "Differential testing on generated programs");
  diff->add_option("--mode", cfg.mode, "bigstep or erasure")
      ->required()
      ->check(CLI::IsMember({"bigstep", "erasure"}));
  diff->add_option("--seed", cfg.seed, "First seed");
  diff->add_option("--count", cfg.count, "Number of programs");
  diff->add_option("--mutation", cfg.mutation, "Mutated rule for the small-step side");
  diff->add_option("-o,--output", cfg.output, "Write output to this file");
  add_fuel(diff);

  CLI::App* absorb = app.add_subcommand("absorb", "Measure absorption of a top-level statement");
  add_program_opts(absorb);
  absorb->add_option("--stmt-index", cfg.stmt_index, "Top-level statement index")->required();
  absorb->add_option("--bound", cfg.bound, "Largest step count tried");

  CLI::App* fmt = app.add_subcommand("fmt", "Pretty-print a program");
  fmt->add_option("file", cfg.file, "Program file")->required();
  fmt->add_option("-o,--output", cfg.output, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "cminor: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (run->parsed()) return cmd_run(cfg);
  if (check->parsed()) return cmd_check(cfg);
  if (diff->parsed()) return cmd_difftest(cfg);
  if (absorb->parsed()) return cmd_absorb(cfg);
  if (fmt->parsed()) return cmd_fmt(cfg);
  return kExitUsage;
}
