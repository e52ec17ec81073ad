// Finite four-valued modal structures for Tm*, S4m* and S5m*.
//
// A valuation over a structure is a map on sentences of the signature
// expanded with a name for every element. Only the sentences reachable from a
// goal matter: its instantiation closure under immediate subsentences and
// constant instances of universal sentences. Atoms and universal sentences
// get forced values; negation is deterministic; only box and implication
// nodes branch.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ivlev/formula.hpp"
#include "ivlev/truth_value.hpp"

namespace ivlev {

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PredicateTable {
  int arity = 1;
  std::vector<TruthValue> cells;  // row-major over element indices
};

class FourValuedStructure {
 public:
  explicit FourValuedStructure(std::vector<std::string> domain) : domain_(std::move(domain)) {
    if (domain_.empty()) throw std::invalid_argument("domain must be non-empty");
  }

  std::size_t size() const noexcept { return domain_.size(); }
  const std::vector<std::string>& domain() const noexcept { return domain_; }

  void set_constant(const std::string& c, int element) {
    check_element(element);
    for (auto& [name, e] : constants_)
      if (name == c) {
        e = element;
        return;
      }
    constants_.emplace_back(c, element);
  }

  const std::vector<std::pair<std::string, int>>& constants() const noexcept { return constants_; }

  /// Declares P with every cell set to fill.
  void declare_predicate(const std::string& p, int arity, TruthValue fill = TruthValue::T) {
    if (arity < 1) throw std::invalid_argument("arity must be at least 1");
    std::size_t cells = 1;
    for (int i = 0; i < arity; ++i) cells *= domain_.size();
    predicates_[p] = PredicateTable{arity, std::vector<TruthValue>(cells, fill)};
  }

  const std::map<std::string, PredicateTable>& predicates() const noexcept { return predicates_; }
  PredicateTable& table(const std::string& p) { return predicates_.at(p); }

  TruthValue get(const std::string& p, std::span<const int> tuple) const {
    const auto& t = predicates_.at(p);
    return t.cells[cell(t, tuple)];
  }

  void set(const std::string& p, std::span<const int> tuple, TruthValue v) {
    auto& t = predicates_.at(p);
    t.cells[cell(t, tuple)] = v;
  }

  /// Name for an element that no user constant denotes.
  static std::string naming_constant(std::size_t element) {
    return "_u" + std::to_string(element + 1);
  }

  /// The constants of the expanded signature: user constants in order, then
  /// a naming constant for each unnamed element.
  std::vector<std::string> names() const {
    std::vector<std::string> out;
    std::vector<bool> named(domain_.size(), false);
    for (const auto& [c, e] : constants_) {
      out.push_back(c);
      named[static_cast<std::size_t>(e)] = true;
    }
    for (std::size_t i = 0; i < domain_.size(); ++i)
      if (!named[i]) out.push_back(naming_constant(i));
    return out;
  }

  std::optional<int> denotation(const std::string& c) const {
    for (const auto& [name, e] : constants_)
      if (name == c) return e;
    if (c.size() > 2 && c[0] == '_' && c[1] == 'u') {
      std::size_t i = std::stoul(c.substr(2)) - 1;
      if (i < domain_.size()) return static_cast<int>(i);
    }
    return std::nullopt;
  }

  /// Clause 1: the value of an atomic sentence.
  TruthValue atom_value(const Formula& atom) const {
    std::vector<int> tuple;
    for (const auto& t : atom.args()) {
      auto d = t.is_constant() ? denotation(t.name) : std::nullopt;
      if (!d) throw std::invalid_argument("no denotation for term " + t.name);
      tuple.push_back(*d);
    }
    auto it = predicates_.find(atom.name());
    if (it == predicates_.end()) throw std::invalid_argument("undeclared predicate " + atom.name());
    return it->second.cells[cell(it->second, tuple)];
  }

 private:
  void check_element(int e) const {
    if (e < 0 || static_cast<std::size_t>(e) >= domain_.size())
      throw std::out_of_range("no such element");
  }

  std::size_t cell(const PredicateTable& t, std::span<const int> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(t.arity))
      throw std::invalid_argument("wrong tuple length");
    std::size_t i = 0;
    for (int e : tuple) {
      check_element(e);
      i = i * domain_.size() + static_cast<std::size_t>(e);
    }
    return i;
  }

  std::vector<std::string> domain_;
  std::vector<std::pair<std::string, int>> constants_;
  std::map<std::string, PredicateTable> predicates_;
};

/// Sentence values keyed on canonical forms, so variants share a value.
class FOValuation {
 public:
  void set(const Formula& sentence, TruthValue v) {
    Formula key = canonicalize(sentence);
    auto [it, fresh] = index_.emplace(key, entries_.size());
    if (fresh)
      entries_.emplace_back(key, v);
    else
      entries_[it->second].second = v;
  }

  std::optional<TruthValue> get(const Formula& sentence) const {
    auto it = index_.find(canonicalize(sentence));
    if (it == index_.end()) return std::nullopt;
    return entries_[it->second].second;
  }

  const std::vector<std::pair<Formula, TruthValue>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

 private:
  std::vector<std::pair<Formula, TruthValue>> entries_;
  std::unordered_map<Formula, std::size_t, FormulaHash> index_;
};

/// Least set containing canon(phi), closed under immediate subsentences and
/// constant instances of universal sentences. Ordered by complexity, then
/// structurally.
inline std::vector<Formula> instantiation_closure(const Formula& phi,
                                                  const std::vector<std::string>& constants) {
  if (!phi.is_sentence()) throw std::invalid_argument("instantiation closure needs a sentence");
  std::unordered_set<Formula, FormulaHash> seen;
  std::vector<Formula> out;
  std::vector<Formula> work{canonicalize(phi)};
  while (!work.empty()) {
    Formula f = std::move(work.back());
    work.pop_back();
    if (!seen.insert(f).second) continue;
    out.push_back(f);
    switch (f.kind()) {
      case FormulaKind::prop_atom:
      case FormulaKind::atom: break;
      case FormulaKind::neg:
      case FormulaKind::box: work.push_back(canonicalize(f.operand())); break;
      case FormulaKind::imp:
        work.push_back(canonicalize(f.lhs()));
        work.push_back(canonicalize(f.rhs()));
        break;
      case FormulaKind::forall:
        for (const auto& c : constants) work.push_back(instantiate(f, c));
        break;
    }
  }
  std::sort(out.begin(), out.end(), [](const Formula& a, const Formula& b) {
    if (a.complexity() != b.complexity()) return a.complexity() < b.complexity();
    return Formula::compare(a, b) < 0;
  });
  return out;
}

namespace detail {

// The closure of a goal as an evaluation graph.
struct ClosureGraph {
  std::vector<Formula> nodes;
  std::vector<std::vector<int>> kids;  // operand(s) or instances
  int root = -1;

  ClosureGraph(const Formula& phi, const std::vector<std::string>& names)
      : nodes(instantiation_closure(phi, names)) {
    std::unordered_map<Formula, int, FormulaHash> index;
    for (std::size_t i = 0; i < nodes.size(); ++i) index.emplace(nodes[i], static_cast<int>(i));
    kids.resize(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Formula& f = nodes[i];
      switch (f.kind()) {
        case FormulaKind::neg:
        case FormulaKind::box: kids[i] = {index.at(canonicalize(f.operand()))}; break;
        case FormulaKind::imp:
          kids[i] = {index.at(canonicalize(f.lhs())), index.at(canonicalize(f.rhs()))};
          break;
        case FormulaKind::forall:
          for (const auto& c : names) kids[i].push_back(index.at(instantiate(f, c)));
          break;
        default: break;
      }
    }
    root = index.at(canonicalize(phi));
  }
};

// Depth-first enumeration of legal valuations over a closure graph; values
// tried in T, t, f, F order. root_mask restricts the goal's value.
template <class Visit>
bool enumerate_fo(Logic logic, const ClosureGraph& g, const FourValuedStructure& a,
                  std::vector<TruthValue>& values, std::size_t i, std::uint8_t root_mask,
                  Visit& visit) {
  if (i == g.nodes.size()) return visit(values);
  const Formula& f = g.nodes[i];
  const auto& k = g.kids[i];
  std::uint8_t allowed = 0;
  switch (f.kind()) {
    case FormulaKind::atom: allowed = ValueSet::bit(a.atom_value(f)); break;
    case FormulaKind::prop_atom: allowed = 0xF; break;
    case FormulaKind::neg:
      allowed = ValueSet::bit(negate(values[static_cast<std::size_t>(k[0])]));
      break;
    case FormulaKind::box:
      allowed = box_op(logic, values[static_cast<std::size_t>(k[0])]).bits();
      break;
    case FormulaKind::imp:
      allowed = imp_op(values[static_cast<std::size_t>(k[0])], values[static_cast<std::size_t>(k[1])])
                    .bits();
      break;
    case FormulaKind::forall: {
      std::uint8_t xs = 0;
      for (int c : k) xs |= ValueSet::bit(values[static_cast<std::size_t>(c)]);
      allowed = ValueSet::bit(forall_op(ValueSet::from_bits(xs)));
      break;
    }
  }
  if (static_cast<int>(i) == g.root) allowed &= root_mask;
  for (auto v : kValueOrder) {
    if ((allowed & ValueSet::bit(v)) == 0) continue;
    values[i] = v;
    if (!enumerate_fo(logic, g, a, values, i + 1, root_mask, visit)) return false;
  }
  return true;
}

inline FOValuation to_valuation(const ClosureGraph& g, const std::vector<TruthValue>& values) {
  FOValuation v;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) v.set(g.nodes[i], values[i]);
  return v;
}

}  // namespace detail

/// Streams every legal valuation over the instantiation closure of phi in
/// the naming expansion of a. The callback returns false to stop.
inline void enumerate_legal_fo_valuations(Logic logic, const FourValuedStructure& a,
                                          const Formula& phi,
                                          const std::function<bool(const FOValuation&)>& callback) {
  detail::ClosureGraph g(phi, a.names());
  std::vector<TruthValue> values(g.nodes.size(), TruthValue::T);
  auto visit = [&](const std::vector<TruthValue>& vs) {
    return callback(detail::to_valuation(g, vs));
  };
  detail::enumerate_fo(logic, g, a, values, 0, 0xF, visit);
}

inline std::vector<FOValuation> legal_fo_valuations(Logic logic, const FourValuedStructure& a,
                                                    const Formula& phi) {
  std::vector<FOValuation> out;
  enumerate_legal_fo_valuations(logic, a, phi, [&](const FOValuation& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

struct VerifyReport {
  bool ok = true;
  int clause = 0;  // 1 atoms, 2 negation, 3 box, 4 implication, 5 forall; 0 otherwise
  std::string message;
};

/// Checks the valuation clauses on the closure of phi and that phi is not
/// designated. Reports the first violation in closure order.
inline VerifyReport verify_countermodel(Logic logic, const FourValuedStructure& a,
                                        const FOValuation& v, const Formula& phi) {
  auto fail = [](int clause, const std::string& msg) { return VerifyReport{false, clause, msg}; };
  auto closure = instantiation_closure(phi, a.names());
  auto names = a.names();
  auto value = [&](const Formula& f) { return v.get(f); };
  for (const auto& f : closure) {
    auto mine = value(f);
    if (!mine) return fail(0, "no value for " + to_string(f));
    std::string where = " at " + to_string(f);
    switch (f.kind()) {
      case FormulaKind::prop_atom: break;
      case FormulaKind::atom:
        if (*mine != a.atom_value(f)) return fail(1, "clause 1 violated" + where);
        break;
      case FormulaKind::neg:
        if (*mine != negate(*value(f.operand()))) return fail(2, "clause 2 violated" + where);
        break;
      case FormulaKind::box:
        if (!box_op(logic, *value(f.operand())).contains(*mine))
          return fail(3, "clause 3 violated" + where);
        break;
      case FormulaKind::imp:
        if (!imp_op(*value(f.lhs()), *value(f.rhs())).contains(*mine))
          return fail(4, "clause 4 violated" + where);
        break;
      case FormulaKind::forall: {
        std::uint8_t xs = 0;
        for (const auto& c : names) xs |= ValueSet::bit(*value(instantiate(f, c)));
        if (*mine != forall_op(ValueSet::from_bits(xs))) return fail(5, "clause 5 violated" + where);
        break;
      }
    }
  }
  if (is_designated(*value(phi))) return fail(0, "the formula is designated");
  return {};
}

struct Countermodel {
  FourValuedStructure structure;
  FOValuation valuation;
};

struct BoundedResult {
  bool valid_up_to = false;
  std::size_t domain_bound = 0;  // n in ValidUpTo(n)
  std::optional<Countermodel> countermodel;
  std::size_t structures = 0;  // structures examined
};

struct BoundedOptions {
  std::size_t max_structures = 2'000'000;
  std::vector<std::string> constants;  // order for constant maps; default occurrence order
};

/// Searches every structure with at most max_domain elements for a legal
/// valuation refuting phi. Domain sizes ascend; constant maps vary slowest,
/// then predicate tables in T, t, f, F lexicographic order.
inline BoundedResult bounded_validity(Logic logic, const Formula& phi, std::size_t max_domain,
                                      BoundedOptions opts = {}) {
  if (max_domain < 1) throw std::invalid_argument("max domain must be at least 1");
  if (!phi.is_sentence()) throw std::invalid_argument("bounded validity needs a sentence");
  auto preds = predicates_of(phi);
  std::vector<std::string> consts = opts.constants.empty() ? constants_of(phi) : opts.constants;

  BoundedResult result;
  for (std::size_t n = 1; n <= max_domain; ++n) {
    std::vector<std::string> domain;
    for (std::size_t i = 0; i < n; ++i) domain.push_back("u" + std::to_string(i + 1));

    std::vector<int> cmap(consts.size(), 0);
    while (true) {
      FourValuedStructure a(domain);
      for (std::size_t i = 0; i < consts.size(); ++i) a.set_constant(consts[i], cmap[i]);
      std::size_t cells = 0;
      for (const auto& [p, arity] : preds) {
        a.declare_predicate(p, arity);
        cells += a.predicates().at(p).cells.size();
      }
      detail::ClosureGraph g(canonicalize(phi), a.names());
      std::vector<TruthValue> values(g.nodes.size(), TruthValue::T);
      std::vector<int> digits(cells, 0);  // index into kValueOrder
      while (true) {
        if (++result.structures > opts.max_structures)
          throw ResourceLimitError("structure cap of " + std::to_string(opts.max_structures) +
                                   " exceeded");
        std::size_t d = 0;
        for (const auto& [p, arity] : preds) {
          (void)arity;
          for (auto& cell : a.table(p).cells) cell = kValueOrder[static_cast<std::size_t>(digits[d++])];
        }
        std::optional<std::vector<TruthValue>> found;
        auto visit = [&](const std::vector<TruthValue>& vs) {
          found = vs;
          return false;
        };
        constexpr std::uint8_t kUndesignated =
            ValueSet::bit(TruthValue::f) | ValueSet::bit(TruthValue::F);
        detail::enumerate_fo(logic, g, a, values, 0, kUndesignated, visit);
        if (found) {
          result.countermodel = Countermodel{a, detail::to_valuation(g, *found)};
          result.domain_bound = n;
          return result;
        }
        // Next table assignment, last cell fastest.
        std::size_t k = cells;
        while (k > 0 && digits[k - 1] == 3) digits[--k] = 0;
        if (k == 0) break;
        ++digits[k - 1];
      }
      std::size_t k = cmap.size();
      while (k > 0 && static_cast<std::size_t>(cmap[k - 1]) == n - 1) cmap[--k] = 0;
      if (k == 0) break;
      ++cmap[k - 1];
    }
  }
  result.valid_up_to = true;
  result.domain_bound = max_domain;
  return result;
}

}  // namespace ivlev
