// Hilbert calculi for Tm, S4m, S5m and their first-order extensions:
// schema matching and derivation checking.
//
// Schemas are formulas whose metavariables are reserved propositional atoms
// ($A, $B, $C) and whose quantifiers bind the variable metavariable $x. A
// metavariable that occurs under different sets of pattern binders must not
// have any of the differing variables free in its instance; this is the usual
// no-capture discipline and yields the side condition of Ax5 for free.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ivlev/formula.hpp"
#include "ivlev/parser.hpp"
#include "ivlev/truth_value.hpp"

namespace ivlev {

struct SchemaMatch {
  std::map<std::string, Formula> formulas;     // phi, psi, xi
  std::map<std::string, std::string> variables;  // x
  std::optional<Term> term;                    // tau, Ax4 only
};

struct AxiomSchema {
  std::string name;
  std::string text;  // human-readable shape
  std::function<std::optional<SchemaMatch>(const Formula&)> match;
};

namespace detail {

inline Formula mv(const char* n) { return Formula::prop(n); }

inline bool is_metavariable(const Formula& f) {
  return f.is(FormulaKind::prop_atom) && !f.name().empty() && f.name()[0] == '$';
}

inline std::string metavariable_label(const std::string& n) {
  if (n == "$A") return "phi";
  if (n == "$B") return "psi";
  if (n == "$C") return "xi";
  if (n == "$x") return "x";
  return n;
}

class PatternMatcher {
 public:
  std::optional<SchemaMatch> operator()(const Formula& pattern, const Formula& target) {
    formulas_.clear();
    scopes_.clear();
    vars_.clear();
    binders_.clear();
    if (!go(pattern, target)) return std::nullopt;
    // Capture guard: occurrences under different binder sets.
    for (const auto& [name, sets] : scopes_) {
      std::set<std::string> all, common = sets.front();
      for (const auto& s : sets) {
        all.insert(s.begin(), s.end());
        std::set<std::string> keep;
        std::set_intersection(common.begin(), common.end(), s.begin(), s.end(),
                              std::inserter(keep, keep.begin()));
        common = std::move(keep);
      }
      for (const auto& v : all)
        if (!common.count(v) && formulas_.at(name).has_free(vars_.at(v))) return std::nullopt;
    }
    SchemaMatch m;
    for (const auto& [k, f] : formulas_) m.formulas.emplace(metavariable_label(k), f);
    for (const auto& [k, v] : vars_) m.variables.emplace(metavariable_label(k), v);
    return m;
  }

 private:
  bool go(const Formula& p, const Formula& t) {
    if (is_metavariable(p)) {
      auto [it, fresh] = formulas_.emplace(p.name(), t);
      scopes_[p.name()].push_back(std::set<std::string>(binders_.begin(), binders_.end()));
      return fresh || it->second == t;
    }
    if (p.kind() != t.kind()) return false;
    switch (p.kind()) {
      case FormulaKind::prop_atom:
      case FormulaKind::atom: return p == t;
      case FormulaKind::neg:
      case FormulaKind::box: return go(p.operand(), t.operand());
      case FormulaKind::imp: return go(p.lhs(), t.lhs()) && go(p.rhs(), t.rhs());
      case FormulaKind::forall: {
        auto [it, fresh] = vars_.emplace(p.variable(), t.variable());
        if (!fresh && it->second != t.variable()) return false;
        binders_.push_back(p.variable());
        bool ok = go(p.body(), t.body());
        binders_.pop_back();
        return ok;
      }
    }
    return false;
  }

  std::map<std::string, Formula> formulas_;
  std::map<std::string, std::vector<std::set<std::string>>> scopes_;
  std::map<std::string, std::string> vars_;
  std::vector<std::string> binders_;
};

inline AxiomSchema pattern_schema(std::string name, std::string text, Formula pattern) {
  return AxiomSchema{std::move(name), std::move(text),
                     [pattern](const Formula& f) { return PatternMatcher{}(pattern, f); }};
}

// The first term at which phi has a free x, read off the same position in g.
inline std::optional<Term> find_substituted(const Formula& phi, const std::string& x,
                                            const Formula& g) {
  if (phi.kind() != g.kind()) return std::nullopt;
  switch (phi.kind()) {
    case FormulaKind::prop_atom: return std::nullopt;
    case FormulaKind::atom: {
      if (phi.args().size() != g.args().size()) return std::nullopt;
      for (std::size_t i = 0; i < phi.args().size(); ++i)
        if (phi.args()[i].is_variable() && phi.args()[i].name == x) return g.args()[i];
      return std::nullopt;
    }
    case FormulaKind::neg:
    case FormulaKind::box: return find_substituted(phi.operand(), x, g.operand());
    case FormulaKind::imp: {
      if (auto t = find_substituted(phi.lhs(), x, g.lhs())) return t;
      return find_substituted(phi.rhs(), x, g.rhs());
    }
    case FormulaKind::forall:
      if (phi.variable() == x) return std::nullopt;
      return find_substituted(phi.body(), x, g.body());
  }
  return std::nullopt;
}

inline std::optional<SchemaMatch> match_ax4(const Formula& f) {
  if (!f.is(FormulaKind::imp) || !f.lhs().is(FormulaKind::forall)) return std::nullopt;
  const Formula& phi = f.lhs().body();
  const std::string& x = f.lhs().variable();
  Term tau = Term::var(x);
  if (phi.has_free(x)) {
    auto t = find_substituted(phi, x, f.rhs());
    if (!t) return std::nullopt;
    tau = *t;
  }
  if (!is_free_for(tau, x, phi)) return std::nullopt;
  if (substitute(phi, x, tau) != f.rhs()) return std::nullopt;
  SchemaMatch m;
  m.formulas.emplace("phi", phi);
  m.variables.emplace("x", x);
  m.term = tau;
  return m;
}

inline std::optional<SchemaMatch> match_ax6(const Formula& f) {
  if (!f.is(FormulaKind::imp) || !are_variants(f.lhs(), f.rhs())) return std::nullopt;
  SchemaMatch m;
  m.formulas.emplace("phi", f.lhs());
  m.formulas.emplace("psi", f.rhs());
  return m;
}

inline std::vector<AxiomSchema> build_schemas() {
  using F = Formula;
  F a = mv("$A"), b = mv("$B"), c = mv("$C");
  auto imp = [](F p, F q) { return F::imp(std::move(p), std::move(q)); };
  auto neg = [](F p) { return F::neg(std::move(p)); };
  auto box = [](F p) { return F::box(std::move(p)); };
  auto dia = [&](F p) { return neg(box(neg(std::move(p)))); };
  auto all = [](F p) { return F::forall("$x", std::move(p)); };
  std::vector<AxiomSchema> s;
  s.push_back(pattern_schema("Ax1", "phi -> (psi -> phi)", imp(a, imp(b, a))));
  s.push_back(pattern_schema("Ax2", "(phi -> (psi -> xi)) -> ((phi -> psi) -> (phi -> xi))",
                             imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)))));
  s.push_back(pattern_schema("Ax3", "(~psi -> ~phi) -> ((~psi -> phi) -> psi)",
                             imp(imp(neg(b), neg(a)), imp(imp(neg(b), a), b))));
  s.push_back(AxiomSchema{"Ax4", "forall x . phi -> phi[x/tau], tau free for x in phi", match_ax4});
  s.push_back(pattern_schema("Ax5", "forall x . (phi -> psi) -> (phi -> forall x . psi), x not free in phi",
                             imp(all(imp(a, b)), imp(a, all(b)))));
  s.push_back(AxiomSchema{"Ax6", "phi -> psi, phi and psi variants", match_ax6});
  s.push_back(pattern_schema("K", "[](phi -> psi) -> ([]phi -> []psi)",
                             imp(box(imp(a, b)), imp(box(a), box(b)))));
  s.push_back(pattern_schema("K1", "[](phi -> psi) -> ([]~psi -> []~phi)",
                             imp(box(imp(a, b)), imp(box(neg(b)), box(neg(a))))));
  s.push_back(pattern_schema("K2", "<>(phi -> psi) -> ([]phi -> <>psi)",
                             imp(dia(imp(a, b)), imp(box(a), dia(b)))));
  s.push_back(pattern_schema("M1", "[]~phi -> [](phi -> psi)", imp(box(neg(a)), box(imp(a, b)))));
  s.push_back(pattern_schema("M2", "[]psi -> [](phi -> psi)", imp(box(b), box(imp(a, b)))));
  s.push_back(pattern_schema("M3", "<>psi -> <>(phi -> psi)", imp(dia(b), dia(imp(a, b)))));
  s.push_back(pattern_schema("M4", "<>~phi -> <>(phi -> psi)", imp(dia(neg(a)), dia(imp(a, b)))));
  s.push_back(pattern_schema("T", "[]phi -> phi", imp(box(a), a)));
  s.push_back(pattern_schema("A4", "[]phi -> [][]phi", imp(box(a), box(box(a)))));
  s.push_back(pattern_schema("A5", "<>[]phi -> []phi", imp(dia(box(a)), box(a))));
  // Numeric labels keep the printed shapes; see logic_axiom_set for which is sound where.
  s.push_back(pattern_schema("4", "<>[]phi -> []phi", imp(dia(box(a)), box(a))));
  s.push_back(pattern_schema("5", "[]phi -> [][]phi", imp(box(a), box(box(a)))));
  s.push_back(pattern_schema("DN1", "[]phi -> []~~phi", imp(box(a), box(neg(neg(a))))));
  s.push_back(pattern_schema("DN2", "[]~~phi -> []phi", imp(box(neg(neg(a))), box(a))));
  s.push_back(pattern_schema("BF", "forall x . []phi -> [] forall x . phi",
                             imp(all(box(a)), box(all(a)))));
  s.push_back(pattern_schema("CBF", "[] forall x . phi -> forall x . []phi",
                             imp(box(all(a)), all(box(a)))));
  s.push_back(pattern_schema("NBF", "forall x . <>phi -> <> forall x . phi",
                             imp(all(dia(a)), dia(all(a)))));
  s.push_back(pattern_schema("PBF", "<> forall x . phi -> forall x . <>phi",
                             imp(dia(all(a)), all(dia(a)))));
  return s;
}

}  // namespace detail

inline const std::vector<AxiomSchema>& axiom_schemas() {
  static const std::vector<AxiomSchema> schemas = detail::build_schemas();
  return schemas;
}

inline const AxiomSchema* find_schema(std::string_view name) {
  for (const auto& s : axiom_schemas())
    if (s.name == name) return &s;
  return nullptr;
}

inline std::optional<SchemaMatch> match_axiom(const AxiomSchema& schema, const Formula& f) {
  return schema.match(f);
}

inline std::optional<SchemaMatch> match_axiom(std::string_view name, const Formula& f) {
  const auto* s = find_schema(name);
  if (!s) throw std::invalid_argument("unknown axiom schema " + std::string(name));
  return s->match(f);
}

/// Schema names available in a logic; Gen is available iff first_order.
inline std::vector<std::string> logic_axiom_set(Logic logic, bool first_order) {
  std::vector<std::string> out{"Ax1", "Ax2", "Ax3", "K",  "K1",  "K2", "M1",
                               "M2",  "M3",  "M4",  "T",  "DN1", "DN2"};
  if (logic != Logic::tm) out.push_back("A4");
  if (logic == Logic::s5m) out.push_back("A5");
  if (first_order)
    for (const char* n : {"Ax4", "Ax5", "Ax6", "BF", "CBF", "NBF", "PBF"}) out.push_back(n);
  return out;
}

struct Justification {
  enum class Kind { premise, axiom, mp, gen };
  Kind kind = Kind::premise;
  std::string axiom;        // axiom
  std::size_t first = 0;    // mp: antecedent step; gen: step
  std::size_t second = 0;   // mp: implication step
  std::string variable;     // gen
};

struct DerivationStep {
  std::size_t number = 0;  // 1-based
  Formula formula;
  Justification why;
};

struct Derivation {
  std::vector<DerivationStep> steps;
  Signature signature;
};

class DerivationSyntaxError : public std::runtime_error {
 public:
  DerivationSyntaxError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Reads "n. <formula> ; premise | axiom <name> | mp j,k | gen j x" lines.
/// Blank lines and lines starting with '#' are skipped. The signature is
/// extended with every symbol seen.
inline Derivation parse_derivation(std::string_view text, Signature sig = {}) {
  Derivation d;
  d.signature = std::move(sig);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw DerivationSyntaxError(lineno, "expected a step number, got '" + s + "'");
    return std::stoul(s);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto dot = line.find('.');
    auto semi = line.rfind(';');
    if (dot == std::string::npos || semi == std::string::npos || semi < dot)
      throw DerivationSyntaxError(lineno, "expected 'n. formula ; justification'");
    DerivationStep step;
    step.number = number(trim(line.substr(0, dot)));
    if (step.number != d.steps.size() + 1)
      throw DerivationSyntaxError(lineno, "steps must be numbered consecutively from 1");
    try {
      step.formula = parse_extending(trim(line.substr(dot + 1, semi - dot - 1)), d.signature);
    } catch (const ParseError& e) {
      throw DerivationSyntaxError(lineno, e.what());
    }
    std::istringstream js(trim(line.substr(semi + 1)));
    std::string kind;
    js >> kind;
    auto& w = step.why;
    if (kind == "premise") {
      w.kind = Justification::Kind::premise;
    } else if (kind == "axiom") {
      w.kind = Justification::Kind::axiom;
      js >> w.axiom;
      if (w.axiom.empty()) throw DerivationSyntaxError(lineno, "axiom needs a schema name");
    } else if (kind == "mp") {
      w.kind = Justification::Kind::mp;
      std::string rest;
      std::getline(js, rest);
      auto comma = rest.find(',');
      if (comma == std::string::npos) throw DerivationSyntaxError(lineno, "mp needs 'j,k'");
      w.first = number(trim(rest.substr(0, comma)));
      w.second = number(trim(rest.substr(comma + 1)));
    } else if (kind == "gen") {
      w.kind = Justification::Kind::gen;
      std::string j;
      js >> j >> w.variable;
      w.first = number(j);
      if (w.variable.empty()) throw DerivationSyntaxError(lineno, "gen needs a variable");
    } else {
      throw DerivationSyntaxError(lineno, "unknown justification '" + kind + "'");
    }
    std::string extra;
    if (js >> extra) throw DerivationSyntaxError(lineno, "trailing text '" + extra + "'");
    d.steps.push_back(std::move(step));
  }
  return d;
}

struct CheckResult {
  bool accepted = true;
  std::size_t step = 0;  // earliest failing step, 1-based
  std::string reason;
};

struct CheckOptions {
  bool first_order = false;
  bool dmt_guard = false;
};

/// Verifies every step. With the DMT guard, Gen may not quantify a variable
/// that is free in a premise the generalized step depends on.
inline CheckResult check_derivation(Logic logic, const std::vector<Formula>& premises,
                                    const Derivation& d, CheckOptions opts = {}) {
  auto allowed = logic_axiom_set(logic, opts.first_order);
  std::vector<std::set<std::size_t>> deps;  // premise indices per step
  auto reject = [](std::size_t step, std::string why) {
    return CheckResult{false, step, std::move(why)};
  };
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const auto& s = d.steps[i];
    std::size_t n = i + 1;
    auto earlier = [&](std::size_t j) { return j >= 1 && j < n; };
    std::set<std::size_t> dep;
    switch (s.why.kind) {
      case Justification::Kind::premise: {
        auto it = std::find(premises.begin(), premises.end(), s.formula);
        if (it == premises.end()) return reject(n, "not a premise");
        dep.insert(static_cast<std::size_t>(it - premises.begin()));
        break;
      }
      case Justification::Kind::axiom: {
        const auto* schema = find_schema(s.why.axiom);
        if (!schema) return reject(n, "unknown axiom schema " + s.why.axiom);
        if (std::find(allowed.begin(), allowed.end(), s.why.axiom) == allowed.end())
          return reject(n, "schema " + s.why.axiom + " is not in " +
                               std::string(logic_name(logic)) + (opts.first_order ? "*" : ""));
        if (!schema->match(s.formula)) return reject(n, "no match for axiom " + s.why.axiom);
        break;
      }
      case Justification::Kind::mp: {
        if (!earlier(s.why.first) || !earlier(s.why.second)) return reject(n, "bad step index");
        const Formula& a = d.steps[s.why.first - 1].formula;
        const Formula& imp = d.steps[s.why.second - 1].formula;
        if (!imp.is(FormulaKind::imp) || imp.lhs() != a || imp.rhs() != s.formula)
          return reject(n, "MP shape mismatch");
        dep = deps[s.why.first - 1];
        dep.insert(deps[s.why.second - 1].begin(), deps[s.why.second - 1].end());
        break;
      }
      case Justification::Kind::gen: {
        if (!opts.first_order) return reject(n, "Gen is not available in propositional logics");
        if (!earlier(s.why.first)) return reject(n, "bad step index");
        const Formula& body = d.steps[s.why.first - 1].formula;
        if (s.formula != Formula::forall(s.why.variable, body)) return reject(n, "Gen shape mismatch");
        dep = deps[s.why.first - 1];
        if (opts.dmt_guard)
          for (std::size_t p : dep)
            if (premises[p].has_free(s.why.variable))
              return reject(n, "DMT side condition: " + s.why.variable + " is free in premise " +
                                   to_string(premises[p]));
        break;
      }
    }
    deps.push_back(std::move(dep));
  }
  return {};
}

}  // namespace ivlev
