// Signed tableaux for Tm, S4m, S5m and their first-order extensions.
//
// Propositional inputs are saturated depth first, one branch at a time, with
// non-branching rules preferred. First-order inputs run the systematic stage
// procedure: each stage picks the highest, then leftmost, unused expression
// and extends every open branch below it.
#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ivlev/formula.hpp"
#include "ivlev/prop_oracle.hpp"
#include "ivlev/rules.hpp"
#include "ivlev/truth_value.hpp"

namespace ivlev {

struct SignedFormula {
  TruthValue sign;
  Formula formula;

  friend bool operator==(const SignedFormula& a, const SignedFormula& b) {
    return a.sign == b.sign && a.formula == b.formula;
  }
};

inline std::string to_string(const SignedFormula& s) {
  return std::string(1, to_char(s.sign)) + ":" + to_string(s.formula);
}

/// A signed formula, or a marked t:forall / f:forall entry when mark is set.
struct TableauEntry {
  TruthValue sign = TruthValue::T;
  Formula formula;
  std::string mark;

  bool marked() const noexcept { return !mark.empty(); }
  SignedFormula signed_formula() const { return {sign, formula}; }
};

inline std::string to_string(const TableauEntry& e) {
  std::string s = std::string(1, to_char(e.sign)) + ":" + to_string(e.formula);
  if (e.marked()) s += ":[" + e.mark + "]";
  return s;
}

struct TableauNode {
  TableauEntry entry;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
  bool used = false;
  std::string rule;     // name of the rule applied to this node, once used
  bool closed = false;  // leaf whose branch is closed
  bool dead = false;    // no open branch passes through here
};

class Tableau {
 public:
  int add_root(TableauEntry e) {
    nodes_.clear();
    TableauNode n;
    n.entry = std::move(e);
    nodes_.push_back(std::move(n));
    return 0;
  }

  int add_child(int parent, TableauEntry e) {
    TableauNode n;
    n.entry = std::move(e);
    n.parent = parent;
    n.depth = nodes_[idx(parent)].depth + 1;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(n));
    nodes_[idx(parent)].children.push_back(id);
    return id;
  }

  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t size() const noexcept { return nodes_.size(); }
  TableauNode& node(int i) { return nodes_[idx(i)]; }
  const TableauNode& node(int i) const { return nodes_[idx(i)]; }

  /// Node ids from the root down to n.
  std::vector<int> path(int n) const {
    std::vector<int> out;
    for (int i = n; i >= 0; i = nodes_[idx(i)].parent) out.push_back(i);
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// The signed formulas on the branch ending at leaf (marked entries skipped).
  std::vector<SignedFormula> branch(int leaf) const {
    std::vector<SignedFormula> out;
    for (int i : path(leaf))
      if (!nodes_[idx(i)].entry.marked()) out.push_back(nodes_[idx(i)].entry.signed_formula());
    return out;
  }

  std::vector<int> leaves() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].children.empty()) out.push_back(static_cast<int>(i));
    return out;
  }

  bool closed() const {
    if (nodes_.empty()) return false;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].children.empty() && !nodes_[i].closed) return false;
    return true;
  }

  /// Marks leaf closed and propagates deadness upwards.
  void close_leaf(int leaf) {
    nodes_[idx(leaf)].closed = true;
    for (int i = leaf; i >= 0; i = nodes_[idx(i)].parent) {
      auto& n = nodes_[idx(i)];
      bool all_dead = n.children.empty()
                          ? n.closed
                          : std::all_of(n.children.begin(), n.children.end(),
                                        [&](int c) { return nodes_[idx(c)].dead; });
      if (!all_dead) break;
      n.dead = true;
    }
  }

  /// Indented text rendering. Each branch starts with "+"; closed leaves end
  /// in a cross.
  std::string render() const {
    std::string out;
    if (!nodes_.empty()) render_from(0, "", "", out);
    return out;
  }

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i); }

  void render_from(int i, const std::string& first, const std::string& rest, std::string& out) const {
    bool head = true;
    while (true) {
      const auto& n = nodes_[idx(i)];
      out += head ? first : rest;
      head = false;
      out += to_string(n.entry);
      if (!n.rule.empty()) out += "   [" + n.rule + "]";
      if (n.closed) out += "  ✕";
      out += '\n';
      if (n.children.size() == 1) {
        i = n.children.front();
        continue;
      }
      for (int c : n.children) render_from(c, rest + "+ ", rest + "  ", out);
      return;
    }
  }

  std::vector<TableauNode> nodes_;
};

/// Whether two signed formulas on the branch share a sentence (up to
/// variants) with different signs. Sentences are compared canonically.
inline bool is_branch_closed(const std::vector<SignedFormula>& branch) {
  std::unordered_map<Formula, TruthValue, FormulaHash> seen;
  for (const auto& s : branch) {
    auto [it, fresh] = seen.emplace(canonicalize(s.formula), s.sign);
    if (!fresh && it->second != s.sign) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Propositional saturation

struct SaturateOptions {
  bool build_tree = true;
};

struct PropSaturation {
  bool closed = false;
  std::vector<SignedFormula> open_branch;  // first open saturated branch
  Tableau tableau;                         // empty unless build_tree
  std::size_t branches = 0;                // branches explored to their end
};

namespace detail {

class PropSaturator {
 public:
  PropSaturator(Logic logic, const SignedFormula& start, bool tree)
      : logic_(logic), graph_(std::span<const Formula>(&start.formula, 1)), tree_(tree) {
    sign_of_.assign(graph_.size(), -1);
    int root = graph_.roots().front();
    if (tree_) result_.tableau.add_root({start.sign, start.formula, {}});
    push(root, start.sign, 0);
  }

  PropSaturation run() {
    result_.closed = saturate(0);
    return std::move(result_);
  }

 private:
  struct Item {
    int id;
    TruthValue sign;
    int node;  // tableau node, or -1
    bool used;
  };

  void push(int id, TruthValue sign, int node) {
    sign_of_[static_cast<std::size_t>(id)] = static_cast<std::int8_t>(sign);
    trail_.push_back({id, sign, node, graph_.formula(id).is_atomic()});
  }

  // First unused non-branching item, else first unused branching item.
  int select() const {
    int branching = -1;
    for (std::size_t i = 0; i < trail_.size(); ++i) {
      const auto& it = trail_[i];
      if (it.used) continue;
      const auto& r = prop_rule(logic_, graph_.formula(it.id).kind(), it.sign);
      if (!r.branching()) return static_cast<int>(i);
      if (branching < 0) branching = static_cast<int>(i);
    }
    return branching;
  }

  // Returns true when every branch below the current state closes.
  bool saturate(int leaf) {
    int pos = select();
    if (pos < 0) {
      ++result_.branches;
      for (const auto& it : trail_) result_.open_branch.push_back({it.sign, graph_.formula(it.id)});
      return false;
    }
    auto& item = trail_[static_cast<std::size_t>(pos)];
    item.used = true;
    const Formula& f = graph_.formula(item.id);
    const PropRule& rule = prop_rule(logic_, f.kind(), item.sign);
    if (tree_ && item.node >= 0) result_.tableau.node(item.node).used = true;
    if (tree_ && item.node >= 0) result_.tableau.node(item.node).rule = std::string(rule.name);
    if (rule.closes()) {
      ++result_.branches;
      if (tree_) result_.tableau.close_leaf(leaf);
      trail_[static_cast<std::size_t>(pos)].used = false;
      return true;
    }
    const auto& kids = graph_.children(item.id);
    for (std::size_t b = 0; b < rule.branch_count; ++b) {
      std::size_t mark = trail_.size();
      int tip = leaf;
      bool conflict = false;
      for (std::size_t k = 0; k < rule.sizes[b]; ++k) {
        const RuleItem& ri = rule.items[b][k];
        int cid = kids[ri.child];
        if (tree_) tip = result_.tableau.add_child(tip, {ri.sign, graph_.formula(cid), {}});
        auto have = sign_of_[static_cast<std::size_t>(cid)];
        if (have == static_cast<std::int8_t>(ri.sign)) {
          if (tree_) result_.tableau.node(tip).used = true;
          continue;
        }
        if (have >= 0) {
          conflict = true;
          break;
        }
        push(cid, ri.sign, tip);
      }
      if (conflict) {
        ++result_.branches;
        if (tree_) result_.tableau.close_leaf(tip);
      } else if (!saturate(tip)) {
        return false;
      }
      while (trail_.size() > mark) {
        sign_of_[static_cast<std::size_t>(trail_.back().id)] = -1;
        trail_.pop_back();
      }
    }
    trail_[static_cast<std::size_t>(pos)].used = false;
    return true;
  }

  Logic logic_;
  SubformulaGraph graph_;
  bool tree_;
  std::vector<std::int8_t> sign_of_;
  std::vector<Item> trail_;
  PropSaturation result_;
};

}  // namespace detail

/// Saturates a propositional signed formula. Always terminates: every rule
/// consequence is an immediate subformula of its premise.
inline PropSaturation saturate_prop(Logic logic, const SignedFormula& start,
                                    SaturateOptions opts = {}) {
  if (!is_propositional(start.formula))
    throw std::invalid_argument("saturate_prop needs a propositional formula");
  return detail::PropSaturator(logic, start, opts.build_tree).run();
}

// ---------------------------------------------------------------------------
// First-order systematic procedure

/// Constants in the order the systematic procedure tries them: the given
/// user constants, then _k1, _k2, ...
class ConstantPool {
 public:
  ConstantPool() = default;
  explicit ConstantPool(std::vector<std::string> user) : user_(std::move(user)) {}

  std::string at(std::size_t i) const {
    return i < user_.size() ? user_[i] : fresh_constant(i - user_.size() + 1);
  }

  /// Position in the order, for sorting branch constants.
  std::size_t rank(const std::string& c) const {
    for (std::size_t i = 0; i < user_.size(); ++i)
      if (user_[i] == c) return i;
    if (is_fresh_constant(c)) return user_.size() + std::stoul(c.substr(2)) - 1;
    return static_cast<std::size_t>(-1);
  }

  /// First constant satisfying pred.
  template <class Pred>
  std::string first(Pred&& pred) const {
    for (std::size_t i = 0;; ++i) {
      std::string c = at(i);
      if (pred(c)) return c;
    }
  }

  const std::vector<std::string>& user() const noexcept { return user_; }

 private:
  std::vector<std::string> user_;
};

enum class SearchOutcome { closed, open, exhausted };

inline std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::closed: return "closed";
    case SearchOutcome::open: return "open";
    case SearchOutcome::exhausted: return "exhausted";
  }
  return "?";
}

struct SystematicOptions {
  std::size_t budget = 1000;  // stages
  std::size_t max_nodes = 2'000'000;
  std::vector<std::string> constants;  // user constant order; default: occurrence order
};

struct SystematicResult {
  SearchOutcome outcome = SearchOutcome::exhausted;
  Tableau tableau;
  int open_leaf = -1;
  std::vector<SignedFormula> open_branch;
  std::vector<std::string> branch_constants;  // pool order
  std::size_t stages = 0;
};

/// Constants occurring in a signed branch, sorted by the pool order.
inline std::vector<std::string> branch_constants(const std::vector<TableauEntry>& entries,
                                                 const ConstantPool& pool) {
  std::vector<std::string> out;
  for (const auto& e : entries) {
    for (auto& c : constants_of(e.formula))
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    if (e.marked() && std::find(out.begin(), out.end(), e.mark) == out.end())
      out.push_back(e.mark);
  }
  std::sort(out.begin(), out.end(), [&](const std::string& a, const std::string& b) {
    return pool.rank(a) < pool.rank(b);
  });
  return out;
}

/// One rule application on a branch: the branches to append, or none when
/// the rule closes the branch.
struct Expansion {
  std::string rule;
  std::vector<std::vector<TableauEntry>> branches;
  bool closes() const noexcept { return branches.empty(); }
};

namespace detail {

struct BranchView {
  const std::vector<TableauEntry>& entries;
  const ConstantPool& pool;

  bool has_constant(const std::string& c) const {
    for (const auto& e : entries) {
      if (e.mark == c) return true;
      auto cs = constants_of(e.formula);
      if (std::find(cs.begin(), cs.end(), c) != cs.end()) return true;
    }
    return false;
  }

  bool contains(TruthValue sign, const Formula& f) const {
    for (const auto& e : entries)
      if (!e.marked() && e.sign == sign && e.formula == f) return true;
    return false;
  }
};

}  // namespace detail

/// The extension of an open branch by one of its expressions. The branch
/// (root first) determines the constants picked by the quantifier rules.
inline Expansion expand(Logic logic, const TableauEntry& e, const std::vector<TableauEntry>& branch,
                        const ConstantPool& pool) {
  using TV = TruthValue;
  detail::BranchView view{branch, pool};
  const Formula& f = e.formula;
  auto sign_name = std::string(1, to_char(e.sign));
  if (e.marked()) {
    const std::string& c = e.mark;
    auto first_without = [&](TV s) {
      return pool.first([&](const std::string& k) {
        return k != c && !view.contains(s, instantiate(f, k));
      });
    };
    Expansion x{sign_name + "forall[]", {}};
    std::vector<TV> signs = e.sign == TV::t ? std::vector<TV>{TV::t, TV::T}
                                            : std::vector<TV>{TV::f, TV::T, TV::t};
    for (TV s : signs)
      x.branches.push_back({{s, instantiate(f, first_without(s)), {}}, {e.sign, f, c}});
    return x;
  }
  switch (f.kind()) {
    case FormulaKind::prop_atom:
    case FormulaKind::atom: throw std::invalid_argument("no rule applies to an atomic formula");
    case FormulaKind::neg:
    case FormulaKind::box:
    case FormulaKind::imp: {
      const PropRule& r = prop_rule(logic, f.kind(), e.sign);
      Expansion x{std::string(r.name), {}};
      Formula kids[2] = {canonicalize(f.lhs()),
                         f.is(FormulaKind::imp) ? canonicalize(f.rhs()) : Formula{}};
      for (std::size_t b = 0; b < r.branch_count; ++b) {
        std::vector<TableauEntry> br;
        for (std::size_t k = 0; k < r.sizes[b]; ++k)
          br.push_back({r.items[b][k].sign, kids[r.items[b][k].child], {}});
        x.branches.push_back(std::move(br));
      }
      return x;
    }
    case FormulaKind::forall: {
      Expansion x{sign_name + "forall", {}};
      auto unused = [&](const std::string& k) { return !view.has_constant(k); };
      switch (e.sign) {
        case TV::F: x.branches.push_back({{TV::F, instantiate(f, pool.first(unused)), {}}}); break;
        case TV::T: {
          std::string c = pool.first(
              [&](const std::string& k) { return !view.contains(TV::T, instantiate(f, k)); });
          x.branches.push_back({{TV::T, instantiate(f, c), {}}, {TV::T, f, {}}});
          break;
        }
        case TV::t:
        case TV::f: {
          std::string c = pool.first(unused);
          x.branches.push_back({{e.sign, instantiate(f, c), {}}, {e.sign, f, c}});
          break;
        }
      }
      return x;
    }
  }
  throw std::logic_error("unreachable");
}

namespace detail {

class Systematic {
 public:
  Systematic(Logic logic, const SignedFormula& start, const SystematicOptions& opts)
      : logic_(logic), opts_(opts) {
    Formula root = canonicalize(start.formula);
    if (!root.is_sentence()) throw std::invalid_argument("tableau roots must be sentences");
    std::vector<std::string> user;
    auto occurring = constants_of(root);
    if (opts.constants.empty()) {
      user = occurring;
    } else {
      for (const auto& c : opts.constants)
        if (std::find(occurring.begin(), occurring.end(), c) != occurring.end()) user.push_back(c);
      for (const auto& c : occurring)
        if (std::find(user.begin(), user.end(), c) == user.end()) user.push_back(c);
    }
    pool_ = ConstantPool(std::move(user));
    result_.tableau.add_root({start.sign, root, {}});
  }

  SystematicResult run() {
    auto& tab = result_.tableau;
    if (finished(0)) return open_at(0);
    while (true) {
      if (tab.node(0).dead) {
        result_.outcome = SearchOutcome::closed;
        return std::move(result_);
      }
      if (result_.stages >= opts_.budget || tab.size() >= opts_.max_nodes) {
        result_.outcome = SearchOutcome::exhausted;
        return std::move(result_);
      }
      int chosen = select();
      if (chosen < 0) {
        // Every open branch is fully used; cannot happen without a finished branch.
        result_.outcome = SearchOutcome::exhausted;
        return std::move(result_);
      }
      ++result_.stages;
      std::vector<int> extended;
      for (int leaf : open_leaves_below(chosen)) {
        auto tips = extend(chosen, leaf);
        extended.insert(extended.end(), tips.begin(), tips.end());
      }
      tab.node(chosen).used = true;
      for (int tip : extended)
        if (!tab.node(tip).closed && finished(tip)) return open_at(tip);
    }
  }

 private:
  static bool expandable(const TableauNode& n) {
    return n.entry.marked() || !n.entry.formula.is_atomic();
  }

  static bool reusable(const TableauEntry& e) {
    return e.marked() || (e.sign == TruthValue::T && e.formula.is(FormulaKind::forall));
  }

  // Highest unused expression on an open branch, leftmost among equals.
  // Reusable expressions wait until nothing else is left; the other rules
  // lower complexity, so they cannot starve them.
  int select() const {
    const auto& tab = result_.tableau;
    int fallback = -1;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      const auto& n = tab.node(i);
      if (n.dead) continue;
      if (!n.used && expandable(n)) {
        if (!reusable(n.entry)) return i;
        if (fallback < 0) fallback = i;
      }
      for (int c : n.children) queue.push_back(c);
    }
    return fallback;
  }

  std::vector<int> open_leaves_below(int start) const {
    const auto& tab = result_.tableau;
    std::vector<int> out;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      const auto& n = tab.node(i);
      if (n.dead) continue;
      if (n.children.empty()) {
        out.push_back(i);
        continue;
      }
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
    }
    return out;
  }

  std::vector<TableauEntry> entries(int leaf) const {
    std::vector<TableauEntry> out;
    for (int i : result_.tableau.path(leaf)) out.push_back(result_.tableau.node(i).entry);
    return out;
  }

  // Appends the rule's branches below leaf; returns the new tips.
  std::vector<int> extend(int chosen, int leaf) {
    auto& tab = result_.tableau;
    auto branch = entries(leaf);
    Expansion x = expand(logic_, tab.node(chosen).entry, branch, pool_);
    tab.node(chosen).rule = x.rule;
    if (x.closes()) {
      tab.close_leaf(leaf);
      return {};
    }
    std::vector<int> tips;
    const std::size_t base = branch.size();
    for (auto& br : x.branches) {
      int tip = leaf;
      bool conflict = false;
      for (auto& e : br) {
        tip = tab.add_child(tip, e);
        if (!e.marked() && clashes(e, branch)) {
          conflict = true;
          break;
        }
        branch.push_back(e);
      }
      branch.resize(base);
      if (conflict)
        tab.close_leaf(tip);
      else
        tips.push_back(tip);
    }
    return tips;
  }

  static bool clashes(const TableauEntry& e, const std::vector<TableauEntry>& branch) {
    for (const auto& b : branch)
      if (!b.marked() && b.sign != e.sign && b.formula == e.formula) return true;
    return false;
  }

  // An open branch is finished when every expression on it is used, except
  // reusable ones whose instances already cover every branch constant.
  bool finished(int leaf) const {
    const auto& tab = result_.tableau;
    auto branch = entries(leaf);
    detail::BranchView view{branch, pool_};
    std::vector<std::string> consts;
    bool have_consts = false;
    for (int i : tab.path(leaf)) {
      const auto& n = tab.node(i);
      if (n.used || !expandable(n)) continue;
      const auto& e = n.entry;
      if (!reusable(e)) return false;
      if (!have_consts) {
        consts = branch_constants(branch, pool_);
        have_consts = true;
      }
      if (consts.empty()) return false;
      for (const auto& c : consts) {
        if (e.marked() && c == e.mark) continue;
        Formula inst = instantiate(e.formula, c);
        bool ok = view.contains(TruthValue::T, inst);
        if (e.marked()) ok = ok || view.contains(TruthValue::t, inst);
        if (e.marked() && e.sign == TruthValue::f) ok = ok || view.contains(TruthValue::f, inst);
        if (!ok) return false;
      }
    }
    return true;
  }

  SystematicResult open_at(int leaf) {
    result_.outcome = SearchOutcome::open;
    result_.open_leaf = leaf;
    result_.open_branch = result_.tableau.branch(leaf);
    result_.branch_constants = branch_constants(entries(leaf), pool_);
    return std::move(result_);
  }

  Logic logic_;
  SystematicOptions opts_;
  ConstantPool pool_;
  SystematicResult result_;
};

}  // namespace detail

/// Runs the systematic procedure from a signed sentence for at most
/// opts.budget stages.
inline SystematicResult run_systematic(Logic logic, const SignedFormula& start,
                                       SystematicOptions opts = {}) {
  if (opts.budget == 0) throw std::invalid_argument("budget must be at least 1");
  return detail::Systematic(logic, start, opts).run();
}

// ---------------------------------------------------------------------------
// Provability

enum class ProofStatus { proved, not_proved, budget_exhausted };

inline std::string_view to_string(ProofStatus s) {
  switch (s) {
    case ProofStatus::proved: return "proved";
    case ProofStatus::not_proved: return "not proved";
    case ProofStatus::budget_exhausted: return "budget exhausted";
  }
  return "?";
}

struct RootSearch {
  TruthValue sign = TruthValue::F;
  SearchOutcome outcome = SearchOutcome::exhausted;
  Tableau tableau;
  std::vector<SignedFormula> open_branch;
  std::vector<std::string> branch_constants;
  std::size_t stages = 0;
};

struct ProofVerdict {
  ProofStatus status = ProofStatus::budget_exhausted;
  Formula goal;  // the sentence actually refuted: closed and nested
  bool first_order = false;
  std::vector<RootSearch> searches;  // F first, then f
};

struct ProveOptions {
  std::size_t budget = 1000;
  std::size_t max_nodes = 2'000'000;
  bool build_tree = true;
  bool short_circuit = false;  // skip the f search once F stays open
  std::vector<std::string> constants;
};

/// Closes free variables, then nests the premises into the goal in order.
inline Formula provability_goal(std::span<const Formula> premises, const Formula& goal) {
  std::vector<Formula> closed;
  for (const auto& g : premises) closed.push_back(universal_closure(g));
  return nest_implications(closed, universal_closure(goal));
}

inline ProofVerdict prove_from(Logic logic, std::span<const Formula> premises, const Formula& goal,
                               ProveOptions opts = {}) {
  ProofVerdict v;
  v.goal = provability_goal(premises, goal);
  v.first_order = !is_propositional(v.goal);
  bool all_closed = true;
  bool any_open = false;
  for (TruthValue sign : {TruthValue::F, TruthValue::f}) {
    RootSearch s;
    s.sign = sign;
    if (v.first_order) {
      SystematicOptions so{opts.budget, opts.max_nodes, opts.constants};
      auto r = run_systematic(logic, {sign, v.goal}, so);
      s.outcome = r.outcome;
      s.tableau = std::move(r.tableau);
      s.open_branch = std::move(r.open_branch);
      s.branch_constants = std::move(r.branch_constants);
      s.stages = r.stages;
    } else {
      auto r = saturate_prop(logic, {sign, v.goal}, {opts.build_tree});
      s.outcome = r.closed ? SearchOutcome::closed : SearchOutcome::open;
      s.tableau = std::move(r.tableau);
      s.open_branch = std::move(r.open_branch);
    }
    all_closed = all_closed && s.outcome == SearchOutcome::closed;
    any_open = any_open || s.outcome == SearchOutcome::open;
    v.searches.push_back(std::move(s));
    if (opts.short_circuit && any_open) break;
  }
  v.status = all_closed ? ProofStatus::proved
             : any_open ? ProofStatus::not_proved
                        : ProofStatus::budget_exhausted;
  return v;
}

inline ProofVerdict prove(Logic logic, const Formula& goal, ProveOptions opts = {}) {
  return prove_from(logic, {}, goal, std::move(opts));
}

}  // namespace ivlev
