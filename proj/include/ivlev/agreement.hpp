// Cross-checks between the tableau prover, the truth-table oracle and
// countermodel extraction on propositional formulas.
#pragma once

#include <cstddef>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ivlev/countermodel.hpp"
#include "ivlev/formula.hpp"
#include "ivlev/prop_oracle.hpp"
#include "ivlev/tableau.hpp"

namespace ivlev {

struct FormulaCheck {
  bool tableau_valid = false;
  bool oracle_valid = false;
  bool terminated = true;  // every root search closed or saturated open
  std::size_t open_branches = 0;
  std::size_t roundtrip_failures = 0;  // Hintikka or extraction failures
  std::string detail;

  bool agrees() const noexcept { return tableau_valid == oracle_valid; }
};

/// Whether the extracted assignment is legal and gives every branch formula
/// its sign.
inline bool assignment_realizes(Logic logic, const LocalAssignment& a,
                                const std::vector<SignedFormula>& branch) {
  if (!is_legal_assignment(logic, a)) return false;
  for (const auto& s : branch) {
    auto v = a.value_of(s.formula);
    if (!v || *v != s.sign) return false;
  }
  return true;
}

inline FormulaCheck check_formula(Logic logic, const Formula& f, bool roundtrip = true) {
  FormulaCheck out;
  ProveOptions po;
  po.build_tree = false;
  auto verdict = prove(logic, f, po);
  out.tableau_valid = verdict.status == ProofStatus::proved;
  out.oracle_valid = is_valid_prop(logic, f).valid;
  for (const auto& s : verdict.searches) out.terminated = out.terminated && s.outcome != SearchOutcome::exhausted;
  if (!roundtrip) return out;
  for (const auto& s : verdict.searches) {
    if (s.outcome != SearchOutcome::open) continue;
    ++out.open_branches;
    auto report = check_hintikka(s.open_branch, {}, logic);
    if (!report.pass()) {
      ++out.roundtrip_failures;
      out.detail = report.violations.front().message;
      continue;
    }
    if (!assignment_realizes(logic, extract_prop_countermodel(logic, s.open_branch), s.open_branch)) {
      ++out.roundtrip_failures;
      out.detail = "extracted assignment does not realize the branch";
    }
  }
  return out;
}

struct Mismatch {
  std::size_t index;
  Logic logic;
  Formula formula;
  bool tableau_valid;
  bool oracle_valid;
};

struct AgreementReport {
  std::size_t formulas = 0;
  std::size_t checks = 0;
  std::size_t valid = 0;  // per (formula, logic)
  std::size_t unterminated = 0;
  std::size_t open_branches = 0;
  std::size_t roundtrip_failures = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> roundtrip_examples;

  void add(std::size_t index, Logic logic, const Formula& f, const FormulaCheck& c) {
    ++checks;
    valid += c.oracle_valid;
    unterminated += !c.terminated;
    open_branches += c.open_branches;
    roundtrip_failures += c.roundtrip_failures;
    if (!c.agrees()) mismatches.push_back({index, logic, f, c.tableau_valid, c.oracle_valid});
    if (c.roundtrip_failures && roundtrip_examples.size() < 10)
      roundtrip_examples.push_back(std::string(logic_name(logic)) + " " + to_string(f) + ": " + c.detail);
  }

  /// Deterministic summary; no timings.
  std::string to_text() const {
    std::ostringstream o;
    o << "formulas " << formulas << "\nchecks " << checks << "\nvalid " << valid
      << "\nunterminated " << unterminated
      << "\nopen branches " << open_branches << "\nround-trip failures " << roundtrip_failures
      << "\nmismatches " << mismatches.size() << '\n';
    for (const auto& m : mismatches)
      o << "  #" << m.index << ' ' << logic_name(m.logic) << ' ' << to_string(m.formula)
        << " tableau=" << (m.tableau_valid ? "valid" : "invalid")
        << " oracle=" << (m.oracle_valid ? "valid" : "invalid") << '\n';
    for (const auto& e : roundtrip_examples) o << "  round-trip: " << e << '\n';
    return o.str();
  }
};

inline void check_corpus_formula(AgreementReport& r, std::size_t index, const Formula& f,
                                 std::span<const Logic> logics, bool roundtrip = true) {
  ++r.formulas;
  for (Logic l : logics) r.add(index, l, f, check_formula(l, f, roundtrip));
}

}  // namespace ivlev
