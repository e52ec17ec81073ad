// Text and JSON renderings of verdicts, tableaux and countermodels.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "ivlev/countermodel.hpp"
#include "ivlev/fo_semantics.hpp"
#include "ivlev/hilbert.hpp"
#include "ivlev/prop_oracle.hpp"
#include "ivlev/tableau.hpp"

namespace ivlev {

using json = nlohmann::ordered_json;

inline json tableau_json(const Tableau& t, int node = 0) {
  if (t.empty()) return nullptr;
  const auto& n = t.node(node);
  json j;
  j["sign"] = to_string(n.entry.sign);
  j["formula"] = to_string(n.entry.formula);
  if (n.entry.marked()) j["mark"] = n.entry.mark;
  j["rule"] = n.rule.empty() ? json(nullptr) : json(n.rule);
  j["children"] = json::array();
  for (int c : n.children) j["children"].push_back(tableau_json(t, c));
  j["closed"] = n.closed;
  return j;
}

inline std::string tuple_key(const FourValuedStructure& a, std::size_t cell, int arity) {
  std::vector<std::string> parts(static_cast<std::size_t>(arity));
  for (int k = arity - 1; k >= 0; --k) {
    parts[static_cast<std::size_t>(k)] = a.domain()[cell % a.size()];
    cell /= a.size();
  }
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
  return s;
}

inline json countermodel_json(const Countermodel& m) {
  const auto& a = m.structure;
  json j;
  j["domain"] = a.domain();
  j["predicates"] = json::object();
  for (const auto& [p, t] : a.predicates()) {
    json cells = json::object();
    for (std::size_t i = 0; i < t.cells.size(); ++i) cells[tuple_key(a, i, t.arity)] = to_string(t.cells[i]);
    j["predicates"][p] = cells;
  }
  j["constants"] = json::object();
  for (const auto& [c, e] : a.constants()) j["constants"][c] = a.domain()[static_cast<std::size_t>(e)];
  j["valuation"] = json::object();
  for (const auto& [f, v] : m.valuation.entries()) j["valuation"][to_string(f)] = to_string(v);
  return j;
}

inline json assignment_json(const LocalAssignment& a) {
  json j;
  j["domain"] = json::array();
  j["predicates"] = json::object();
  j["constants"] = json::object();
  j["valuation"] = json::object();
  for (std::size_t i = 0; i < a.size(); ++i)
    j["valuation"][to_string(a.graph().formula(static_cast<int>(i)))] =
        to_string(a.value(static_cast<int>(i)));
  return j;
}

inline std::string countermodel_text(const Countermodel& m) {
  const auto& a = m.structure;
  std::ostringstream o;
  o << "domain {";
  for (std::size_t i = 0; i < a.size(); ++i) o << (i ? ", " : "") << a.domain()[i];
  o << "}\n";
  for (const auto& [c, e] : a.constants()) o << "  " << c << " = " << a.domain()[static_cast<std::size_t>(e)] << '\n';
  for (const auto& [p, t] : a.predicates())
    for (std::size_t i = 0; i < t.cells.size(); ++i)
      o << "  " << p << '(' << tuple_key(a, i, t.arity) << ") = " << to_string(t.cells[i]) << '\n';
  o << "valuation\n";
  for (const auto& [f, v] : m.valuation.entries()) o << "  v(" << to_string(f) << ") = " << to_string(v) << '\n';
  return o.str();
}

inline std::string assignment_text(const LocalAssignment& a) {
  std::ostringstream o;
  for (std::size_t i = 0; i < a.size(); ++i)
    o << "  v(" << to_string(a.graph().formula(static_cast<int>(i))) << ") = "
      << to_string(a.value(static_cast<int>(i))) << '\n';
  return o.str();
}

/// A countermodel read off the first open root search, when there is one.
struct ExtractedCountermodel {
  std::optional<LocalAssignment> assignment;
  std::optional<Countermodel> structure;
  TruthValue root_sign = TruthValue::F;
};

inline std::optional<ExtractedCountermodel> countermodel_of(Logic logic, const ProofVerdict& v) {
  for (const auto& s : v.searches) {
    if (s.outcome != SearchOutcome::open) continue;
    ExtractedCountermodel out;
    out.root_sign = s.sign;
    if (v.first_order)
      out.structure = extract_fo_countermodel(logic, s.open_branch, s.branch_constants);
    else
      out.assignment = extract_prop_countermodel(logic, s.open_branch);
    return out;
  }
  return std::nullopt;
}

inline json verdict_json(Logic logic, const ProofVerdict& v, bool with_trees = true) {
  json j;
  j["logic"] = std::string(logic_name(logic)) + (v.first_order ? "*" : "");
  j["formula"] = to_string(v.goal);
  j["status"] = std::string(to_string(v.status));
  j["searches"] = json::array();
  for (const auto& s : v.searches) {
    json sj;
    sj["root"] = to_string(SignedFormula{s.sign, v.goal});
    sj["outcome"] = std::string(to_string(s.outcome));
    if (v.first_order) sj["stages"] = s.stages;
    if (with_trees) sj["tree"] = tableau_json(s.tableau);
    j["searches"].push_back(sj);
  }
  if (auto cm = countermodel_of(logic, v)) {
    j["countermodel"] = cm->structure ? countermodel_json(*cm->structure) : assignment_json(*cm->assignment);
    j["countermodel"]["root_sign"] = to_string(cm->root_sign);
  }
  return j;
}

inline std::string verdict_text(Logic logic, const ProofVerdict& v, bool with_trees = true) {
  std::ostringstream o;
  o << "logic " << logic_name(logic) << (v.first_order ? "*" : "") << '\n';
  o << "formula " << to_string(v.goal) << '\n';
  for (const auto& s : v.searches) {
    o << "\nroot " << to_string(SignedFormula{s.sign, v.goal}) << ": " << to_string(s.outcome);
    if (v.first_order) o << " after " << s.stages << " stages";
    o << '\n';
    if (with_trees) o << s.tableau.render();
  }
  o << '\n' << to_string(v.status) << '\n';
  if (auto cm = countermodel_of(logic, v)) {
    o << "countermodel (root sign " << to_string(cm->root_sign) << ")\n";
    o << (cm->structure ? countermodel_text(*cm->structure) : assignment_text(*cm->assignment));
  }
  return o.str();
}

inline json check_json(const CheckResult& r) {
  json j;
  j["verdict"] = r.accepted ? "accept" : "reject";
  if (!r.accepted) {
    j["step"] = r.step;
    j["reason"] = r.reason;
  }
  return j;
}

inline std::string check_text(const CheckResult& r) {
  if (r.accepted) return "accept\n";
  return "reject at step " + std::to_string(r.step) + ": " + r.reason + '\n';
}

}  // namespace ivlev
