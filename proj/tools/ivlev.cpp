// Command-line front end: prove, check, countermodel, hilbert, fuzz.
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ivlev/ivlev.hpp"

namespace {

using namespace ivlev;

enum Exit : int { kOk = 0, kNo = 1, kBudget = 2, kInput = 3, kResource = 4 };

struct RunConfig {
  std::string logic = "tm";
  bool fo = false;
  std::size_t budget = 1000;
  std::size_t oracle_cap = 24;
  std::size_t max_domain = 0;
  std::string format = "text";
  std::uint64_t seed = 20240601;
  std::vector<std::string> premises;
  bool dmt_guard = false;
  bool quiet_trees = false;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Inputs {
  std::vector<Formula> premises;
  Formula goal;
};

Inputs read_inputs(const RunConfig& cfg, const std::string& text) {
  Signature sig;
  Inputs in;
  try {
    for (const auto& p : cfg.premises) in.premises.push_back(parse_extending(p, sig));
    in.goal = parse_extending(text, sig);
  } catch (const ParseError& e) {
    throw InputError(std::string("parse error: ") + e.what());
  }
  bool first_order = !is_propositional(in.goal);
  for (const auto& p : in.premises) first_order = first_order || !is_propositional(p);
  if (first_order && !cfg.fo) throw InputError("first-order input needs --fo");
  return in;
}

void emit(const RunConfig& cfg, const json& j, const std::string& text) {
  if (cfg.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text;
}

class Timer {
 public:
  ~Timer() {
    auto s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "time " << s << " s\n";
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_prove(const RunConfig& cfg, const std::string& text) {
  Logic logic = parse_logic(cfg.logic);
  auto in = read_inputs(cfg, text);
  Timer timer;
  ProveOptions opts;
  opts.budget = cfg.budget;
  opts.build_tree = !cfg.quiet_trees;
  auto v = prove_from(logic, in.premises, in.goal, opts);
  emit(cfg, verdict_json(logic, v, !cfg.quiet_trees), verdict_text(logic, v, !cfg.quiet_trees));
  switch (v.status) {
    case ProofStatus::proved: return kOk;
    case ProofStatus::not_proved: return kNo;
    case ProofStatus::budget_exhausted: return kBudget;
  }
  return kBudget;
}

int report_bounded(const RunConfig& cfg, Logic logic, const Formula& goal) {
  auto r = bounded_validity(logic, goal, cfg.max_domain);
  json j;
  j["logic"] = std::string(logic_name(logic)) + "*";
  j["formula"] = to_string(goal);
  std::ostringstream o;
  o << "formula " << to_string(goal) << '\n';
  if (r.valid_up_to) {
    j["verdict"] = "ValidUpTo(" + std::to_string(r.domain_bound) + ")";
    o << "ValidUpTo(" << r.domain_bound << ")\n";
  } else {
    j["verdict"] = "invalid";
    j["countermodel"] = countermodel_json(*r.countermodel);
    o << "invalid\ncountermodel, " << countermodel_text(*r.countermodel);
  }
  j["structures"] = r.structures;
  emit(cfg, j, o.str());
  return r.valid_up_to ? kOk : kNo;
}

int cmd_check(const RunConfig& cfg, const std::string& text) {
  Logic logic = parse_logic(cfg.logic);
  auto in = read_inputs(cfg, text);
  Timer timer;
  Formula goal = provability_goal(in.premises, in.goal);
  if (!is_propositional(goal)) {
    if (cfg.max_domain == 0) throw InputError("first-order check needs --max-domain");
    return report_bounded(cfg, logic, goal);
  }
  OracleOptions oo;
  oo.max_nodes = cfg.oracle_cap;
  auto v = consequence_prop(logic, in.premises, in.goal, oo);
  json j;
  j["logic"] = std::string(logic_name(logic));
  j["formula"] = to_string(in.goal);
  j["verdict"] = v.valid ? "valid" : "invalid";
  std::string text_out = std::string("formula ") + to_string(in.goal) + '\n' + (v.valid ? "valid\n" : "invalid\n");
  if (v.counter) {
    j["witness"] = assignment_json(*v.counter);
    text_out += "witness\n" + assignment_text(*v.counter);
  }
  emit(cfg, j, text_out);
  return v.valid ? kOk : kNo;
}

int cmd_countermodel(const RunConfig& cfg, const std::string& text) {
  Logic logic = parse_logic(cfg.logic);
  auto in = read_inputs(cfg, text);
  Timer timer;
  ProveOptions opts;
  opts.budget = cfg.budget;
  opts.build_tree = false;
  auto v = prove_from(logic, in.premises, in.goal, opts);
  if (v.status == ProofStatus::proved) {
    emit(cfg, json{{"formula", to_string(v.goal)}, {"verdict", "proved"}},
         "formula " + to_string(v.goal) + "\nproved, no countermodel\n");
    return kOk;
  }
  if (v.status == ProofStatus::budget_exhausted) {
    if (v.first_order && cfg.max_domain > 0) return report_bounded(cfg, logic, v.goal);
    emit(cfg, json{{"formula", to_string(v.goal)}, {"verdict", "budget exhausted"}},
         "formula " + to_string(v.goal) + "\nbudget exhausted\n");
    return kBudget;
  }
  auto cm = countermodel_of(logic, v);
  json j = cm->structure ? countermodel_json(*cm->structure) : assignment_json(*cm->assignment);
  j["root_sign"] = to_string(cm->root_sign);
  std::string t = "formula " + to_string(v.goal) + "\ncountermodel (root sign " +
                  to_string(cm->root_sign) + ")\n" +
                  (cm->structure ? countermodel_text(*cm->structure) : assignment_text(*cm->assignment));
  emit(cfg, j, t);
  return kNo;
}

int cmd_hilbert(const RunConfig& cfg, const std::string& path) {
  Logic logic = parse_logic(cfg.logic);
  std::ifstream file(path);
  if (!file) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << file.rdbuf();
  Signature sig;
  std::vector<Formula> premises;
  Derivation d;
  try {
    for (const auto& p : cfg.premises) premises.push_back(parse_extending(p, sig));
    d = parse_derivation(buf.str(), sig);
  } catch (const ParseError& e) {
    throw InputError(std::string("parse error: ") + e.what());
  } catch (const DerivationSyntaxError& e) {
    throw InputError(e.what());
  }
  CheckOptions opts;
  opts.first_order = cfg.fo;
  opts.dmt_guard = cfg.dmt_guard;
  auto r = check_derivation(logic, premises, d, opts);
  emit(cfg, check_json(r), check_text(r));
  return r.accepted ? kOk : kNo;
}

int cmd_fuzz(const RunConfig& cfg, bool logic_given, std::size_t count, std::size_t size,
             std::size_t atoms) {
  std::vector<Logic> logics;
  if (logic_given)
    logics.push_back(parse_logic(cfg.logic));
  else
    logics.assign(kAllLogics.begin(), kAllLogics.end());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < atoms; ++i)
    names.push_back(i < 4 ? std::string(1, "pqrs"[i]) : "p" + std::to_string(i));
  auto start = std::chrono::steady_clock::now();
  RandomFormulaGenerator gen(cfg.seed, names, size);
  AgreementReport report;
  for (std::size_t i = 0; i < count; ++i) check_corpus_formula(report, i, gen.next(), logics);
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  json j;
  j["seed"] = cfg.seed;
  j["formulas"] = report.formulas;
  j["checks"] = report.checks;
  j["valid"] = report.valid;
  j["open_branches"] = report.open_branches;
  j["roundtrip_failures"] = report.roundtrip_failures;
  j["mismatches"] = json::array();
  for (const auto& m : report.mismatches)
    j["mismatches"].push_back({{"index", m.index},
                               {"logic", std::string(logic_name(m.logic))},
                               {"formula", to_string(m.formula)},
                               {"tableau", m.tableau_valid},
                               {"oracle", m.oracle_valid}});
  emit(cfg, j, "seed " + std::to_string(cfg.seed) + '\n' + report.to_text());
  std::cerr << "time " << secs << " s, " << (report.checks ? secs * 1e6 / static_cast<double>(report.checks) : 0.0)
            << " us per check\n";
  return report.mismatches.empty() && report.roundtrip_failures == 0 ? kOk : kNo;
}

void shared_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--logic", cfg.logic, "tm, s4m or s5m")->check(CLI::IsMember({"tm", "s4m", "s5m"}));
  cmd->add_flag("--fo", cfg.fo, "first-order mode");
  cmd->add_option("--budget", cfg.budget, "stage budget")->check(CLI::PositiveNumber);
  cmd->add_option("--max-domain", cfg.max_domain, "largest domain for bounded checks")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--oracle-cap", cfg.oracle_cap, "largest subformula count for the oracle")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", cfg.seed, "random seed");
  cmd->add_option("--premise", cfg.premises, "premise formula (repeatable)");
  cmd->add_flag("--dmt-guard", cfg.dmt_guard, "forbid Gen on variables free in premises");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Four-valued modal logics Tm, S4m, S5m: tableaux, semantics, Hilbert checking"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string formula, path;
  std::size_t count = 10000, size = 10, atoms = 2;

  auto* prove = app.add_subcommand("prove", "tableau proof search");
  auto* check = app.add_subcommand("check", "semantic validity");
  auto* cm = app.add_subcommand("countermodel", "countermodel from an open branch");
  auto* hil = app.add_subcommand("hilbert", "check a Hilbert derivation");
  auto* fuzz = app.add_subcommand("fuzz", "prover and oracle agreement on random formulas");
  for (auto* c : {prove, check, cm, hil, fuzz}) shared_flags(c, cfg);
  for (auto* c : {prove, check, cm}) c->add_option("formula", formula)->required();
  prove->add_flag("--no-trees", cfg.quiet_trees, "omit tableaux from the report");
  hil->add_option("file", path, "derivation file")->required();
  fuzz->add_option("--count", count, "number of formulas");
  fuzz->add_option("--size", size, "largest formula size in nodes")->check(CLI::PositiveNumber);
  fuzz->add_option("--atoms", atoms, "number of atoms")->check(CLI::Range(1, 26));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }
  try {
    if (*prove) return cmd_prove(cfg, formula);
    if (*check) return cmd_check(cfg, formula);
    if (*cm) return cmd_countermodel(cfg, formula);
    if (*hil) return cmd_hilbert(cfg, path);
    if (*fuzz) return cmd_fuzz(cfg, fuzz->count("--logic") > 0, count, size, atoms);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const OracleLimitError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return kResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
