#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tck/errors.hpp"
#include "tck/fixed_point.hpp"
#include "tck/nested.hpp"
#include "tck/properties.hpp"
#include "tck/scenario.hpp"
#include "tck/serialize.hpp"

namespace {

using tck::json;

enum Exit : int {
  kOk = 0,
  kParse = 2,
  kInvariant = 3,
  kSizeGuard = 4,
  kUnsolvable = 5,
  kVerification = 6,
  kInternal = 7,
};

int exit_for(tck::ErrorKind kind) {
  switch (kind) {
    case tck::ErrorKind::Parse: return kParse;
    case tck::ErrorKind::InvariantViolation: return kInvariant;
    case tck::ErrorKind::SizeGuard: return kSizeGuard;
    case tck::ErrorKind::Unsolvable: return kUnsolvable;
    case tck::ErrorKind::VerificationFailure: return kVerification;
    case tck::ErrorKind::InternalInconsistency: return kInternal;
  }
  return kInternal;
}

struct Options {
  std::string input;
  std::string output;
  std::string result;
  std::string format;
  std::uint64_t seed = 0;
  std::size_t oracle_guard = 16;
  std::size_t enumeration_guard = tck::kDefaultSolutionGuard;
  bool no_never_run = false;
  bool async_mode = false;
  bool explicit_paths = false;
  bool diagnostics = false;
  bool optimal = false;
  tck::PropertyOptions props;
};

std::string render_table(const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(head.size());
  for (std::size_t c = 0; c < head.size(); ++c) width[c] = head[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << cells[c];
      if (c + 1 < cells.size()) os << std::string(width[c] - cells[c].size() + 2, ' ');
    }
    os << '\n';
  };
  line(head);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
  return os.str();
}

std::string report_table(const json& rep) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& p : rep.at("parts"))
    rows.push_back({p.at("name").get<std::string>(), p.at("pass").get<bool>() ? "pass" : "FAIL",
                    std::to_string(p.at("checked").get<std::size_t>()), p.value("detail", "")});
  return rep.value("subject", "") + "\n" + render_table({"check", "verdict", "checked", "detail"}, rows);
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw tck::parse_error("cannot write " + opt.output);
  out << text;
}

void emit_json(const Options& opt, const json& j) { emit(opt, j.dump(2) + "\n"); }

bool table(const Options& opt, const std::string& verb_default = "json") {
  return (opt.format.empty() ? verb_default : opt.format) == "table";
}

bool is_problem(const json& j) { return j.is_object() && j.contains("universe"); }

tck::ScenarioSpec load_scenario(const Options& opt, const json& j) {
  tck::ScenarioSpec s = tck::scenario_from_json(j);
  if (opt.no_never_run) s.include_never_run = false;
  if (opt.async_mode) s.mode = tck::SyncMode::Asynchronous;
  return s;
}

tck::TCRInstance load_instance(const Options& opt) {
  const json j = tck::read_json_file(opt.input);
  if (is_problem(j)) throw tck::parse_error(opt.input + " is not a scenario file");
  return tck::generate_system(load_scenario(opt, j));
}

json normalization_json(const tck::Universe& u, const std::vector<tck::DeltaNormalization>& notes) {
  json arr = json::array();
  for (const auto& n : notes)
    arr.push_back({{"from", u.agent_name(n.from)},
                   {"to", u.agent_name(n.to)},
                   {"original", n.original.to_string()},
                   {"normalized", n.normalized.to_string()}});
  return arr;
}

std::string opt_str(const std::optional<std::int64_t>& t) { return t ? std::to_string(*t) : "-"; }

std::string runs_table(const tck::TCRInstance& inst, const tck::ProtocolResult* result) {
  const tck::Universe& u = *inst.universe;
  std::vector<std::string> head{"run", "trigger"};
  for (auto a : inst.spec.agents()) head.push_back("seen " + u.agent_name(a));
  if (result)
    for (auto a : inst.spec.agents()) head.push_back("resp " + u.agent_name(a));
  std::vector<std::vector<std::string>> rows;
  for (std::size_t r = 0; r < u.run_count(); ++r) {
    std::vector<std::string> row{u.run_name(r), opt_str(inst.trigger_time[r])};
    for (std::size_t k = 0; k < inst.spec.size(); ++k) row.push_back(opt_str(inst.observed_at[r][k]));
    if (result)
      for (std::size_t k = 0; k < inst.spec.size(); ++k) row.push_back(opt_str(result->response[r][k]));
    rows.push_back(std::move(row));
  }
  return render_table(head, rows);
}

int cmd_generate(const Options& opt) {
  const auto inst = load_instance(opt);
  const tck::Universe& u = *inst.universe;
  if (table(opt)) {
    emit(opt, "horizon " + std::to_string(u.horizon()) + (inst.horizon_auto_sized ? " (auto)" : "") + ", " +
                  std::to_string(u.run_count()) + " runs\n" + runs_table(inst, nullptr));
    return kOk;
  }
  json j;
  j["universe"] = tck::universe_to_json(u);
  j["trigger"] = tck::event_to_json(inst.trigger);
  j["horizon_auto_sized"] = inst.horizon_auto_sized;
  j["delta"] = tck::timing_to_json(u.agent_names(), inst.spec);
  j["delta_normalized"] = normalization_json(u, inst.normalizations);
  j["perfect_recall"] = tck::exhibits_perfect_recall(u);
  emit_json(opt, j);
  return kOk;
}

struct Problem {
  tck::Event psi;
  tck::TimingSpec spec;
  std::vector<tck::DeltaNormalization> notes;
};

Problem load_problem(const Options& opt) {
  const json j = tck::read_json_file(opt.input);
  if (is_problem(j)) {
    auto p = tck::gfp_problem_from_json(j);
    auto [spec, notes] = tck::normalize(p.spec, p.universe->horizon());
    return {p.psi, spec, notes};
  }
  auto inst = tck::generate_system(load_scenario(opt, j));
  return {inst.trigger_history(), inst.spec, inst.normalizations};
}

int cmd_gfp(const Options& opt) {
  const Problem p = load_problem(opt);
  const tck::Universe& u = *p.psi.universe();
  const auto res = tck::timely_ck_traced(p.psi, p.spec);
  if (table(opt)) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t k = 0; k < res.value.size(); ++k) {
      std::string pts;
      for (const auto& pt : res.value[k].points())
        pts += (pts.empty() ? "" : " ") + u.run_name(pt.run) + "@" + std::to_string(pt.time);
      rows.push_back({u.agent_name(res.value.agents()[k]), std::to_string(res.value[k].size()), pts});
    }
    emit(opt, "iterations " + std::to_string(res.iterations) + "\n" + render_table({"agent", "size", "points"}, rows));
    return kOk;
  }
  json j;
  j["timely_ck"] = tck::tuple_to_json(res.value);
  j["iterations"] = res.iterations;
  j["delta_normalized"] = normalization_json(u, p.notes);
  if (opt.diagnostics) j["trace"] = res.trace;
  emit_json(opt, j);
  return kOk;
}

int cmd_solve(const Options& opt) {
  const auto inst = load_instance(opt);
  const tck::Universe& u = *inst.universe;
  if (!tck::solvability(inst)) {
    json j;
    j["horizon"] = u.horizon();
    j["run_count"] = u.run_count();
    j["verdict"] = {{"solvable", false}};
    if (table(opt)) emit(opt, "unsolvable\n");
    else emit_json(opt, j);
    std::cerr << "tck: instance is not solvable\n";
    return kUnsolvable;
  }
  const auto result = tck::synthesize_optimal(inst);
  const auto rep = tck::verify_solution(inst, result);
  if (table(opt)) {
    emit(opt, runs_table(inst, &result) + "\n" + report_table(rep.to_json()));
  } else {
    json j = tck::result_to_json(inst, result);
    j["verdict"] = {{"solvable", true},
                    {"solution", rep.to_json()},
                    {"delta_normalized", normalization_json(u, inst.normalizations)}};
    emit_json(opt, j);
  }
  return rep.all_pass() ? kOk : kVerification;
}

int cmd_verify(const Options& opt) {
  if (opt.result.empty()) throw tck::parse_error("verify needs --result");
  const auto inst = load_instance(opt);
  const auto result = tck::result_from_json(inst, tck::read_json_file(opt.result));
  const auto rep = tck::verify_solution(inst, result);
  bool ok = rep.all_pass();
  json j;
  j["solution"] = rep.to_json();
  if (opt.optimal) {
    const auto optimal = tck::verify_optimal(inst, result, opt.enumeration_guard);
    ok = ok && optimal.checks.all_pass();
    j["optimality"] = optimal.to_json();
  }
  j["pass"] = ok;
  if (table(opt)) {
    std::string text = report_table(j["solution"]);
    if (opt.optimal) text += "\n" + report_table(j["optimality"]);
    emit(opt, text);
  } else {
    emit_json(opt, j);
  }
  return ok ? kOk : kVerification;
}

int cmd_oracle(const Options& opt) {
  const json input = tck::read_json_file(opt.input);
  json j;
  bool ok = true;
  tck::CheckReport summary;
  summary.subject = "oracle";

  if (is_problem(input)) {
    const Problem p = load_problem(opt);
    const auto f = [&](const tck::EventTuple& x) { return tck::apply_f(p.psi, p.spec, x); };
    const auto top = tck::EventTuple::top(p.psi.universe(), p.spec.agents());
    const bool same = tck::gfp(f, top).value == tck::gfp_bruteforce_oracle(f, top, opt.oracle_guard);
    summary.add("gfp_matches_bruteforce", same).checked = 1;
    j["summary"] = summary.to_json();
    ok = same;
  } else {
    const auto inst = tck::generate_system(load_scenario(opt, input));
    const tck::Universe& u = *inst.universe;
    const tck::Event psi = inst.trigger_history();

    const std::size_t bits = u.point_count() * inst.spec.size();
    if (bits <= opt.oracle_guard) {
      const auto f = [&](const tck::EventTuple& x) { return tck::apply_f(psi, inst.spec, x); };
      const auto top = tck::EventTuple::top(inst.universe, inst.spec.agents());
      summary.add("gfp_matches_bruteforce",
                  tck::gfp(f, top).value == tck::gfp_bruteforce_oracle(f, top, opt.oracle_guard));
    } else {
      summary.add("gfp_matches_bruteforce", true,
                  "skipped: " + std::to_string(bits) + " tuple bits exceed the guard of " +
                      std::to_string(opt.oracle_guard));
    }

    tck::NestedOptions nopt;
    nopt.explicit_paths = opt.explicit_paths;
    const auto nested = tck::verify_nested_characterisation(psi, inst.spec, nopt);
    j["nested"] = nested.to_json();
    summary.add("nested_characterisation", nested.checks.all_pass());

    if (tck::solvability(inst)) {
      const auto result = tck::synthesize_optimal(inst);
      const auto optimal = tck::verify_optimal(inst, result, opt.enumeration_guard);
      j["optimality"] = optimal.to_json();
      summary.add("optimality", optimal.checks.all_pass());
    } else {
      const auto count = tck::count_solutions(inst, opt.enumeration_guard);
      summary.add("no_solution_exists", count == 0, std::to_string(count) + " solutions enumerated");
    }
    j["summary"] = summary.to_json();
    ok = summary.all_pass();
  }
  if (table(opt)) emit(opt, report_table(j["summary"]));
  else emit_json(opt, j);
  return ok ? kOk : kVerification;
}

int cmd_props(const Options& opt) {
  tck::PropertyOptions po = opt.props;
  po.seed = opt.seed;
  const auto run = tck::run_properties(po);
  if (table(opt)) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : run.groups)
      rows.push_back({g.name, g.informational ? "info" : (g.pass() ? "pass" : "FAIL"), std::to_string(g.cases),
                      std::to_string(g.failures), g.first_failure});
    emit(opt, "seed " + std::to_string(run.seed) + "\n" +
                  render_table({"group", "verdict", "cases", "failures", "first failure"}, rows));
  } else {
    emit_json(opt, run.to_json());
  }
  return run.all_pass() ? kOk : kVerification;
}

int cmd_report(const Options& opt) {
  const auto inst = load_instance(opt);
  tck::ProtocolResult result = opt.result.empty()
                                   ? tck::synthesize_optimal(inst)
                                   : tck::result_from_json(inst, tck::read_json_file(opt.result));
  if (table(opt, "table")) {
    const tck::Universe& u = *inst.universe;
    std::string head = "horizon " + std::to_string(u.horizon()) + (inst.horizon_auto_sized ? " (auto)" : "") +
                       ", " + std::to_string(u.run_count()) + " runs\n";
    emit(opt, head + runs_table(inst, &result));
  } else {
    emit_json(opt, tck::result_to_json(inst, result));
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timely common knowledge: fixed points, coordination checks and response synthesis"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) sub->add_option("input", opt.input, "Scenario or problem file")->required()->check(CLI::ExistingFile);
    sub->add_option("-o,--output", opt.output, "Write output here instead of stdout");
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--no-never-run", opt.no_never_run, "Drop the run in which the trigger never occurs");
    sub->add_flag("--async-mode", opt.async_mode, "Agents do not observe the clock");
  };

  auto* generate = app.add_subcommand("generate", "Emit the system of runs generated from a scenario");
  common(generate);
  auto* gfp = app.add_subcommand("gfp", "Compute timely common knowledge");
  common(gfp);
  gfp->add_flag("--diagnostics", opt.diagnostics, "Include per-iteration coordinate sizes");
  auto* solve = app.add_subcommand("solve", "Check solvability, synthesize the optimal protocol and verify it");
  common(solve);
  auto* verify = app.add_subcommand("verify", "Re-check a protocol result against a scenario");
  common(verify);
  verify->add_option("--result", opt.result, "Result file")->required()->check(CLI::ExistingFile);
  verify->add_flag("--optimal", opt.optimal, "Also run the exhaustive optimality check");
  verify->add_option("--enumeration-guard", opt.enumeration_guard, "Candidate responses per agent");
  auto* oracle = app.add_subcommand("oracle", "Brute-force cross-checks");
  common(oracle);
  oracle->add_option("--oracle-guard", opt.oracle_guard, "Tuple bits enumerated by the fixed-point oracle");
  oracle->add_option("--enumeration-guard", opt.enumeration_guard, "Candidate responses per agent");
  oracle->add_flag("--explicit-paths", opt.explicit_paths, "Cross-check nested formulas path by path");
  auto* props = app.add_subcommand("props", "Randomized property suite");
  common(props, false);
  props->add_option("--seed", opt.seed, "Random seed");
  props->add_option("--law-cases", opt.props.law_cases, "Cases per operator-law group");
  props->add_option("--gfp-cases", opt.props.gfp_cases, "Cases for the fixed-point oracle");
  props->add_option("--theorem-cases", opt.props.theorem_cases, "Cases per enumeration group");
  props->add_option("--scenario-cases", opt.props.scenario_cases, "Scenario pairs for the monotonicity check");
  auto* report = app.add_subcommand("report", "Per-run response times as a table");
  common(report);
  report->add_option("--result", opt.result, "Result file; synthesized when omitted")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*generate) return cmd_generate(opt);
    if (*gfp) return cmd_gfp(opt);
    if (*solve) return cmd_solve(opt);
    if (*verify) return cmd_verify(opt);
    if (*oracle) return cmd_oracle(opt);
    if (*props) return cmd_props(opt);
    if (*report) return cmd_report(opt);
  } catch (const tck::Error& e) {
    std::cerr << "tck: " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const json::exception& e) {
    std::cerr << "tck: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "tck: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
