// Brute-force semantics for propositional Tm, S4m and S5m.
//
// A valuation is only constrained locally (each compound's value must lie in
// its connective's multioperator applied to the children's values), so the
// restrictions of valuations to a subformula-closed set are exactly the
// assignments satisfying those local constraints. The oracle enumerates them
// over the shared subformula graph, one value per distinct subformula.
#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ivlev/formula.hpp"
#include "ivlev/truth_value.hpp"

namespace ivlev {

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distinct subformulas of a set of roots, children before parents.
class SubformulaGraph {
 public:
  SubformulaGraph() = default;
  explicit SubformulaGraph(std::span<const Formula> roots) {
    for (const auto& r : roots) roots_.push_back(add(r));
  }

  int add(const Formula& f) {
    if (auto it = index_.find(f); it != index_.end()) return it->second;
    std::array<int, 2> kids{-1, -1};
    switch (f.kind()) {
      case FormulaKind::neg:
      case FormulaKind::box: kids[0] = add(f.operand()); break;
      case FormulaKind::imp:
        kids[0] = add(f.lhs());
        kids[1] = add(f.rhs());
        break;
      case FormulaKind::prop_atom: break;
      default: throw std::invalid_argument("propositional formula expected: " + to_string(f));
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(f);
    children_.push_back(kids);
    index_.emplace(f, id);
    return id;
  }

  std::size_t size() const noexcept { return nodes_.size(); }
  const Formula& formula(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::array<int, 2>& children(int i) const { return children_[static_cast<std::size_t>(i)]; }
  std::span<const int> roots() const noexcept { return roots_; }

  std::optional<int> find(const Formula& f) const {
    auto it = index_.find(f);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::vector<Formula> nodes_;
  std::vector<std::array<int, 2>> children_;
  std::vector<int> roots_;
  std::unordered_map<Formula, int, FormulaHash> index_;
};

/// Values for every node of a subformula graph.
class LocalAssignment {
 public:
  LocalAssignment(std::shared_ptr<const SubformulaGraph> graph, std::vector<TruthValue> values)
      : graph_(std::move(graph)), values_(std::move(values)) {}

  const SubformulaGraph& graph() const { return *graph_; }
  std::size_t size() const noexcept { return values_.size(); }
  TruthValue value(int node) const { return values_[static_cast<std::size_t>(node)]; }
  std::span<const TruthValue> values() const noexcept { return values_; }

  std::optional<TruthValue> value_of(const Formula& f) const {
    auto id = graph_->find(f);
    if (!id) return std::nullopt;
    return value(*id);
  }

  /// "p=t, (p -> p)=t, ..." in graph order.
  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i != 0) out += ", ";
      const Formula& f = graph_->formula(static_cast<int>(i));
      out += f.is_atomic() ? ivlev::to_string(f) : "(" + ivlev::to_string(f) + ")";
      out += '=';
      out += to_char(values_[i]);
    }
    return out;
  }

 private:
  std::shared_ptr<const SubformulaGraph> graph_;
  std::vector<TruthValue> values_;
};

/// Values a node may take given its children's values.
inline ValueSet allowed_values(Logic logic, const SubformulaGraph& g, int node,
                               std::span<const TruthValue> values) {
  const Formula& f = g.formula(node);
  const auto& kids = g.children(node);
  switch (f.kind()) {
    case FormulaKind::neg: return neg_op(values[static_cast<std::size_t>(kids[0])]);
    case FormulaKind::box: return box_op(logic, values[static_cast<std::size_t>(kids[0])]);
    case FormulaKind::imp:
      return imp_op(values[static_cast<std::size_t>(kids[0])],
                    values[static_cast<std::size_t>(kids[1])]);
    default: return ValueSet::all();
  }
}

inline bool is_legal_assignment(Logic logic, const LocalAssignment& a) {
  const auto& g = a.graph();
  for (std::size_t i = 0; i < g.size(); ++i) {
    int n = static_cast<int>(i);
    if (!allowed_values(logic, g, n, a.values()).contains(a.value(n))) return false;
  }
  return true;
}

struct OracleOptions {
  std::size_t max_nodes = 24;
};

namespace detail {

// Depth-first enumeration in graph order, values tried T, t, f, F. The
// filter restricts a node's values (used to prune at the roots). Visit
// returns false to stop.
template <class Filter, class Visit>
bool enumerate_assignments(Logic logic, const SubformulaGraph& g, std::vector<TruthValue>& values,
                           std::size_t i, Filter& filter, Visit& visit) {
  if (i == g.size()) return visit(std::span<const TruthValue>(values));
  int node = static_cast<int>(i);
  ValueSet allowed = allowed_values(logic, g, node, values);
  std::uint8_t bits = allowed.bits() & filter(node);
  for (auto v : kValueOrder) {
    if ((bits & ValueSet::bit(v)) == 0) continue;
    values[i] = v;
    if (!enumerate_assignments(logic, g, values, i + 1, filter, visit)) return false;
  }
  return true;
}

inline void check_cap(const SubformulaGraph& g, const OracleOptions& opts) {
  if (g.size() > opts.max_nodes)
    throw OracleLimitError("oracle refuses " + std::to_string(g.size()) +
                           " distinct subformulas (cap " + std::to_string(opts.max_nodes) + ")");
}

}  // namespace detail

/// Streams every legal assignment over the subformula closure of roots.
/// The callback returns false to stop early.
inline void enumerate_legal_assignments(
    Logic logic, std::span<const Formula> roots,
    const std::function<bool(const LocalAssignment&)>& callback, OracleOptions opts = {}) {
  auto graph = std::make_shared<SubformulaGraph>(roots);
  detail::check_cap(*graph, opts);
  std::vector<TruthValue> values(graph->size(), TruthValue::T);
  auto all = [](int) -> std::uint8_t { return 0xF; };
  auto visit = [&](std::span<const TruthValue> v) {
    return callback(LocalAssignment(graph, std::vector<TruthValue>(v.begin(), v.end())));
  };
  detail::enumerate_assignments(logic, *graph, values, 0, all, visit);
}

inline std::vector<LocalAssignment> legal_assignments(Logic logic, std::span<const Formula> roots,
                                                      OracleOptions opts = {}) {
  std::vector<LocalAssignment> out;
  enumerate_legal_assignments(
      logic, roots,
      [&](const LocalAssignment& a) {
        out.push_back(a);
        return true;
      },
      opts);
  return out;
}

struct OracleVerdict {
  bool valid = false;
  std::optional<LocalAssignment> counter;  // first witness in enumeration order
};

/// Gamma |= phi over the logic's Nmatrix, for finite Gamma.
inline OracleVerdict consequence_prop(Logic logic, std::span<const Formula> premises,
                                      const Formula& goal, OracleOptions opts = {}) {
  std::vector<Formula> roots(premises.begin(), premises.end());
  roots.push_back(goal);
  auto graph = std::make_shared<SubformulaGraph>(roots);
  detail::check_cap(*graph, opts);

  constexpr std::uint8_t kDesignated = ValueSet::bit(TruthValue::T) | ValueSet::bit(TruthValue::t);
  std::vector<std::uint8_t> filter_mask(graph->size(), 0xF);
  int goal_id = graph->roots().back();
  for (std::size_t i = 0; i + 1 < graph->roots().size(); ++i)
    filter_mask[static_cast<std::size_t>(graph->roots()[i])] &= kDesignated;
  filter_mask[static_cast<std::size_t>(goal_id)] &= static_cast<std::uint8_t>(~kDesignated & 0xF);

  OracleVerdict verdict{true, std::nullopt};
  std::vector<TruthValue> values(graph->size(), TruthValue::T);
  auto filter = [&](int n) { return filter_mask[static_cast<std::size_t>(n)]; };
  auto visit = [&](std::span<const TruthValue> v) {
    verdict.valid = false;
    verdict.counter.emplace(graph, std::vector<TruthValue>(v.begin(), v.end()));
    return false;
  };
  detail::enumerate_assignments(logic, *graph, values, 0, filter, visit);
  return verdict;
}

inline OracleVerdict is_valid_prop(Logic logic, const Formula& f, OracleOptions opts = {}) {
  return consequence_prop(logic, {}, f, opts);
}

}  // namespace ivlev
