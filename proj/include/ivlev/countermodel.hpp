// Hintikka sets and countermodels read off open tableau branches.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ivlev/fo_semantics.hpp"
#include "ivlev/formula.hpp"
#include "ivlev/prop_oracle.hpp"
#include "ivlev/tableau.hpp"
#include "ivlev/truth_value.hpp"

namespace ivlev {

struct HintikkaViolation {
  int clause;
  std::vector<SignedFormula> witnesses;
  std::string message;
};

struct HintikkaReport {
  std::vector<HintikkaViolation> violations;
  bool pass() const noexcept { return violations.empty(); }
};

namespace detail {

class SignIndex {
 public:
  explicit SignIndex(const std::vector<SignedFormula>& s) {
    for (const auto& x : s) {
      auto& bits = signs_[canonicalize(x.formula)];
      bits |= ValueSet::bit(x.sign);
    }
  }

  bool has(TruthValue sign, const Formula& f) const {
    auto it = signs_.find(canonicalize(f));
    return it != signs_.end() && (it->second & ValueSet::bit(sign)) != 0;
  }

  std::uint8_t signs(const Formula& f) const {
    auto it = signs_.find(canonicalize(f));
    return it == signs_.end() ? 0 : it->second;
  }

 private:
  std::unordered_map<Formula, std::uint8_t, FormulaHash> signs_;
};

}  // namespace detail

/// Checks the Hintikka clauses for S. Quantifier clauses range over the
/// given constants only. Box clauses follow the logic: in S4m a t-signed box
/// and in S5m a t- or f-signed box cannot occur in a saturated set.
inline HintikkaReport check_hintikka(const std::vector<SignedFormula>& s,
                                     const std::vector<std::string>& constants,
                                     Logic logic = Logic::tm) {
  using TV = TruthValue;
  HintikkaReport report;
  detail::SignIndex idx(s);
  auto violate = [&](int clause, const SignedFormula& w, const std::string& why) {
    report.violations.push_back({clause, {w}, "clause " + std::to_string(clause) + ": " + why});
  };
  auto has = [&](TV sign, const Formula& f) { return idx.has(sign, f); };

  std::unordered_map<Formula, const SignedFormula*, FormulaHash> first;
  for (const auto& x : s) {
    auto [it, fresh] = first.emplace(canonicalize(x.formula), &x);
    if (!fresh && it->second->sign != x.sign)
      report.violations.push_back(
          {1, {*it->second, x}, "clause 1: " + to_string(x.formula) + " has two signs"});
  }

  for (const auto& x : s) {
    const Formula& f = x.formula;
    switch (f.kind()) {
      case FormulaKind::prop_atom:
      case FormulaKind::atom: break;
      case FormulaKind::neg:
        if (!has(negate(x.sign), f.operand())) violate(2, x, "negated operand missing");
        break;
      case FormulaKind::box: {
        bool upper = x.sign == TV::T || x.sign == TV::t;
        if ((logic != Logic::tm && x.sign == TV::t) || (logic == Logic::s5m && x.sign == TV::f)) {
          violate(upper ? 3 : 4, x, "sign impossible for a box in " + std::string(logic_name(logic)));
        } else if (upper) {
          if (!has(TV::T, f.operand())) violate(3, x, "T-signed operand missing");
        } else {
          int n = has(TV::t, f.operand()) + has(TV::f, f.operand()) + has(TV::F, f.operand());
          if (n != 1) violate(4, x, "operand needs exactly one sign among t, f, F");
        }
        break;
      }
      case FormulaKind::imp: {
        const Formula& a = f.lhs();
        const Formula& b = f.rhs();
        auto both = [&](TV p, TV q) { return has(p, a) && has(q, b); };
        bool ok = false;
        int clause = 0;
        switch (x.sign) {
          case TV::T:
            clause = 5;
            ok = has(TV::F, a) || has(TV::T, b) || both(TV::t, TV::t) || both(TV::f, TV::t) ||
                 both(TV::f, TV::f);
            break;
          case TV::t:
            clause = 6;
            ok = both(TV::T, TV::t) || both(TV::t, TV::t) || both(TV::f, TV::t) ||
                 both(TV::f, TV::f) || both(TV::f, TV::F);
            break;
          case TV::f:
            clause = 7;
            ok = both(TV::T, TV::f) || both(TV::t, TV::f) || both(TV::t, TV::F);
            break;
          case TV::F:
            clause = 8;
            ok = both(TV::T, TV::F);
            break;
        }
        if (!ok) violate(clause, x, "no admissible pair of signed components");
        break;
      }
      case FormulaKind::forall: {
        std::vector<std::uint8_t> inst;
        for (const auto& c : constants) inst.push_back(idx.signs(instantiate(f, c)));
        auto count = [&](TV sign) {
          return std::count_if(inst.begin(), inst.end(),
                               [&](std::uint8_t m) { return (m & ValueSet::bit(sign)) != 0; });
        };
        auto all_within = [&](std::uint8_t allowed) {
          return std::all_of(inst.begin(), inst.end(),
                             [&](std::uint8_t m) { return m != 0 && (m & ~allowed) == 0; });
        };
        constexpr auto bT = ValueSet::bit(TV::T), bt = ValueSet::bit(TV::t),
                       bf = ValueSet::bit(TV::f);
        switch (x.sign) {
          case TV::T:
            if (!all_within(bT)) violate(9, x, "some instance is not T-signed");
            break;
          case TV::t:
            if (count(TV::t) == 0 || !all_within(bT | bt))
              violate(10, x, "needs a t instance and T or t on every other");
            break;
          case TV::f:
            if (count(TV::f) == 0 || !all_within(bT | bt | bf))
              violate(11, x, "needs an f instance and T, t or f (never F) on every other");
            break;
          case TV::F:
            if (count(TV::F) == 0) violate(12, x, "no F instance");
            break;
        }
        break;
      }
    }
  }
  return report;
}

/// Reads a legal assignment off an open saturated propositional branch.
/// Branch formulas keep their signs; every other subformula takes, in order
/// of ascending complexity, the first value its children allow.
inline LocalAssignment extract_prop_countermodel(Logic logic,
                                                 const std::vector<SignedFormula>& branch) {
  if (!check_hintikka(branch, {}, logic).pass())
    throw std::invalid_argument("branch is not saturated");
  std::vector<Formula> roots;
  for (const auto& s : branch) roots.push_back(s.formula);
  auto graph = std::make_shared<SubformulaGraph>(roots);
  std::unordered_map<Formula, TruthValue, FormulaHash> signed_value;
  for (const auto& s : branch) signed_value.emplace(s.formula, s.sign);

  std::vector<int> order(graph->size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& fa = graph->formula(a);
    const auto& fb = graph->formula(b);
    if (fa.complexity() != fb.complexity()) return fa.complexity() < fb.complexity();
    return Formula::compare(fa, fb) < 0;
  });
  std::vector<TruthValue> values(graph->size(), TruthValue::T);
  for (int n : order) {
    ValueSet allowed = allowed_values(logic, *graph, n, values);
    auto it = signed_value.find(graph->formula(n));
    TruthValue v = it != signed_value.end() ? it->second : allowed.first();
    if (!allowed.contains(v)) throw std::logic_error("branch sign is not legal here");
    values[static_cast<std::size_t>(n)] = v;
  }
  return LocalAssignment(graph, std::move(values));
}

/// Builds a structure and valuation from an open finished first-order
/// branch whose first entry is the root. The domain is the branch constants,
/// each naming itself; atoms not on the branch default to T.
inline Countermodel extract_fo_countermodel(Logic logic, const std::vector<SignedFormula>& branch,
                                            const std::vector<std::string>& constants) {
  if (branch.empty()) throw std::invalid_argument("empty branch");
  const Formula root = canonicalize(branch.front().formula);
  auto report = check_hintikka(branch, constants, logic);
  if (!report.pass())
    throw std::invalid_argument("branch is not finished: " + report.violations.front().message);

  std::vector<std::string> domain = constants;
  bool unnamed = domain.empty();
  if (unnamed) domain.push_back("u1");
  FourValuedStructure a(domain);
  if (!unnamed)
    for (std::size_t i = 0; i < constants.size(); ++i) a.set_constant(constants[i], static_cast<int>(i));
  std::map<std::string, int> preds;
  for (const auto& s : branch)
    for (const auto& [p, n] : predicates_of(s.formula)) preds.emplace(p, n);
  for (const auto& [p, n] : preds) a.declare_predicate(p, n);
  for (const auto& s : branch) {
    if (!s.formula.is(FormulaKind::atom)) continue;
    std::vector<int> tuple;
    for (const auto& t : s.formula.args()) tuple.push_back(*a.denotation(t.name));
    a.set(s.formula.name(), tuple, s.sign);
  }

  detail::SignIndex idx(branch);
  auto names = a.names();
  auto closure = instantiation_closure(root, names);
  FOValuation v;
  for (const auto& f : closure) {
    std::uint8_t signs = idx.signs(f);
    if (signs != 0) {
      v.set(f, ValueSet::from_bits(signs).first());
      continue;
    }
    TruthValue val = TruthValue::T;
    switch (f.kind()) {
      case FormulaKind::prop_atom: break;
      case FormulaKind::atom: val = a.atom_value(f); break;
      case FormulaKind::neg: val = negate(*v.get(f.operand())); break;
      case FormulaKind::box: val = box_op(logic, *v.get(f.operand())).first(); break;
      case FormulaKind::imp: val = imp_op(*v.get(f.lhs()), *v.get(f.rhs())).first(); break;
      case FormulaKind::forall: {
        std::uint8_t xs = 0;
        for (const auto& c : names) xs |= ValueSet::bit(*v.get(instantiate(f, c)));
        val = forall_op(ValueSet::from_bits(xs));
        break;
      }
    }
    v.set(f, val);
  }
  auto check = verify_countermodel(logic, a, v, root);
  if (!check.ok) throw std::logic_error("extracted countermodel rejected: " + check.message);
  return Countermodel{std::move(a), std::move(v)};
}

}  // namespace ivlev
