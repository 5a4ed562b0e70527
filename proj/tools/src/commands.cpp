// Copyright 2026 The enlg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "enlg_cli/commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "enlg/bounds.hpp"
#include "enlg/errors.hpp"
#include "enlg/hierarchy.hpp"
#include "enlg/monogamy.hpp"
#include "enlg/quantum.hpp"

namespace enlg::cli {

using nlohmann::json;

json ResultRecord::to_json() const {
  json j;
  j["method"] = method;
  j["value"] = value;
  if (!game.empty()) j["game"] = game;
  if (level) j["level"] = *level;
  if (restarts) j["restarts"] = *restarts;
  if (seed) j["seed"] = *seed;
  if (repetitions) j["repetitions"] = *repetitions;
  j["certificate"] = certificate;
  j["wall_time"] = wall_time;
  return j;
}

long double repetition_size_cap() {
  const char* env = std::getenv("ENLG_SIZE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultSizeCap;
  char* end = nullptr;
  const long double cap = std::strtold(env, &end);
  if (end == env || *end != '\0' || !(cap > 0))
    throw InvalidInput(std::string("ENLG_SIZE_CAP: not a positive number: ") + env);
  return cap;
}

namespace {

ExtendedGame as_extended(const AnyGame& g) {
  if (const auto* e = std::get_if<ExtendedGame>(&g)) return *e;
  return monogamy_to_extended(std::get<MonogamyGame>(g));
}

const MonogamyGame& as_monogamy(const AnyGame& g, const std::string& method) {
  const auto* m = std::get_if<MonogamyGame>(&g);
  if (m == nullptr) throw InvalidInput("method " + method + " needs a monogamy game");
  return *m;
}

json sdp_summary(const SdpSolution& s) {
  return {{"status", to_string(s.status)},  {"sdp_primal_objective", s.primal_value},
          {"sdp_dual_objective", s.dual_value},     {"gap", s.gap},
          {"primal_residual", s.primal_residual}, {"dual_residual", s.dual_residual},
          {"iterations", s.iterations}};
}

json report_json(const CertificateReport& r) {
  return {{"ok", r.ok},
          {"min_eig_X", r.min_eig_X},
          {"min_eig_Z", r.min_eig_Z},
          {"max_primal_residual", r.max_primal_residual},
          {"max_dual_residual", r.max_dual_residual},
          {"gap", r.gap}};
}

}  // namespace

ResultRecord compute(const AnyGame& game, const AnyGame& base, const MethodOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  ResultRecord rec;
  rec.method = opts.method;
  SolverOptions sopts;
  sopts.log = opts.log;
  sopts.max_iter = opts.max_iter;
  const std::string& m = opts.method;
  if (m == "unentangled") {
    if (const auto* mg = std::get_if<MonogamyGame>(&game)) {
      const auto r = monogamy_unentangled_value(*mg);
      rec.value = r.value;
      rec.certificate = {{"f", r.f}};
    } else {
      const auto r = unentangled_value(std::get<ExtendedGame>(game));
      rec.value = r.value;
      rec.certificate = {{"f", r.f}, {"g", r.g}};
    }
  } else if (m == "nonsignaling") {
    const ExtendedGame g = as_extended(game);
    const auto r = nonsignaling_value(g, sopts);
    rec.value = r.value;
    rec.certificate = sdp_summary(r.solution);
    rec.certificate["check"] = report_json(check_certificate(nonsignaling_sdp(g), r.solution));
    rec.certificate["nonsignaling_defect"] = r.assemblage.nonsignaling_defect();
  } else if (m == "qc") {
    QcOptions q;
    q.solver = sopts;
    const auto r = qc_upper_bound(as_extended(game), parse_level(opts.level), q);
    rec.value = r.value;
    rec.level = opts.level;
    rec.certificate = sdp_summary(r.solution);
    rec.certificate["moment_dim"] = r.layout.dim();
    rec.certificate["reduced_dim"] = r.reduced_dim;
    rec.certificate["parameters"] = r.num_parameters;
    rec.certificate["max_constraint_violation"] = r.violation.worst;
  } else if (m == "seesaw") {
    SeesawOptions s;
    s.restarts = opts.restarts;
    s.seed = opts.seed;
    s.threads = opts.threads;
    s.bob_dim = opts.bob_dim;
    s.solver = sopts;
    const auto r = seesaw_lower_bound(as_extended(game), s);
    rec.value = r.value;
    rec.restarts = opts.restarts;
    rec.seed = opts.seed;
    json per = json::array();
    for (const auto& rs : r.restarts)
      per.push_back({{"ok", rs.ok}, {"value", rs.value}, {"iterations", rs.iterations}, {"error", rs.error}});
    rec.certificate = {{"sdp_value", r.sdp_value},
                       {"best_restart", r.best_restart},
                       {"restarts_used", r.restarts_used},
                       {"iterations", r.iterations},
                       {"restart_values", std::move(per)}};
  } else if (m == "tfkw" || m == "spr") {
    const MonogamyGame& g = as_monogamy(base, m);
    rec.value = m == "tfkw" ? tfkw_bound(g, opts.repetitions) : spr_two_question_value(g, opts.repetitions);
    rec.certificate = {{"c", max_overlap(g).c_value}};
  } else {
    throw InvalidInput("unknown method " + m);
  }
  rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

namespace {

struct Common {
  std::string path;
  std::string out;
  double tol = 1e-9;
  bool verbose = false;
  MethodOptions method;
};

void add_method_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("game", c.path, "Game file (JSON)")->required();
  cmd->add_option("--method", c.method.method, "Bound to compute")
      ->check(CLI::IsMember({"unentangled", "nonsignaling", "qc", "seesaw", "tfkw", "spr"}));
  cmd->add_option("--level", c.method.level, "Hierarchy level for qc: 1, 2, 1+AB, ...");
  cmd->add_option("--restarts", c.method.restarts, "See-saw restarts")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.method.seed, "See-saw seed");
  cmd->add_option("--threads", c.method.threads, "See-saw worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--bob-dim", c.method.bob_dim, "See-saw dimension of Bob's space (0: referee dimension)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-iter", c.method.max_iter, "Interior-point iteration limit per SDP")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", c.tol, "Tolerance for game invariants on load");
  cmd->add_option("--out", c.out, "Write the result record here instead of stdout");
  cmd->add_flag("--verbose", c.verbose, "Solver iteration log on stderr");
}

void emit(const json& j, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write " + path);
  f << j.dump(2) << '\n';
}

int validate_command(const std::string& path, double tol, std::ostream& out) {
  const AnyGame g = load_game_unchecked(path);
  const ValidationReport rep = validate_game(g, tol);
  for (const auto& c : rep.checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << "  worst=" << c.worst;
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << (rep.ok() ? "valid" : "invalid") << '\n';
  return rep.ok() ? kOk : kInvariantError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"enlg: values and bounds of extended nonlocal games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "enlg 0.1.0");

  Common value_opts;
  CLI::App* value = app.add_subcommand("value", "Compute a value or bound of a game");
  add_method_flags(value, value_opts);

  Common repeat_opts;
  CLI::App* repeat = app.add_subcommand("repeat", "Value of the r-fold parallel repetition of a monogamy game");
  add_method_flags(repeat, repeat_opts);
  repeat->add_option("-r,--repetitions", repeat_opts.method.repetitions, "Number of rounds")
      ->required()
      ->check(CLI::PositiveNumber);

  int mub_d = 0, mub_bases = 0;
  std::string mub_out;
  CLI::App* mub_cmd = app.add_subcommand("mub", "Write the monogamy game of d+1 (or --bases) MUBs");
  mub_cmd->add_option("-d", mub_d, "Prime dimension")->required();
  mub_cmd->add_option("--bases", mub_bases, "Number of bases (default d+1)");
  mub_cmd->add_option("--out", mub_out, "Output file (default stdout)");

  std::string validate_path;
  double validate_tol = 1e-9;
  CLI::App* validate = app.add_subcommand("validate", "Check every invariant of a game file");
  validate->add_option("game", validate_path, "Game file (JSON)")->required();
  validate->add_option("--tol", validate_tol, "Tolerance");

  std::vector<std::string> storage(args);
  std::vector<char*> argv;
  argv.push_back(const_cast<char*>("enlg"));
  for (auto& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*value || *repeat) {
      Common& c = *value ? value_opts : repeat_opts;
      if (c.verbose) c.method.log = &err;
      const AnyGame base = load_game(c.path, c.tol);
      AnyGame game = base;
      int r = 1;
      if (*repeat) {
        r = c.method.repetitions;
        const MonogamyGame& mg = as_monogamy(base, "repeat");
        if (c.method.method != "tfkw" && c.method.method != "spr")
          game = parallel_repeat(mg, r, repetition_size_cap());
      }
      c.method.repetitions = r;
      ResultRecord rec = compute(game, base, c.method);
      rec.game = c.path;
      if (*repeat) rec.repetitions = r;
      emit(rec.to_json(), c.out, out);
      return kOk;
    }
    if (*mub_cmd) {
      const int bases = mub_bases > 0 ? mub_bases : mub_d + 1;
      const AnyGame g = mub_monogamy_game(mub_d, bases);
      if (mub_out.empty())
        out << format_game(to_json(g));
      else
        save_game(mub_out, g);
      return kOk;
    }
    return validate_command(validate_path, validate_tol, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << '\n';
    return kInvariantError;
  } catch (const SizeCapExceeded& e) {
    err << "size cap exceeded: " << e.what() << '\n';
    return kSizeCapError;
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace enlg::cli
