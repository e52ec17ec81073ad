// Syntax of propositional and first-order modal formulas.
//
// The core tree has five connective kinds (atoms, ~, [], ->, forall) plus a
// separate node for propositional atoms. Diamond, exists, & and | are sugar
// and are expanded at construction time. Formulas are immutable and share
// structure; equality is structural.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ivlev {

struct Term {
  enum class Kind : std::uint8_t { variable, constant };

  Kind kind = Kind::variable;
  std::string name;

  static Term var(std::string n) { return Term{Kind::variable, std::move(n)}; }
  static Term constant(std::string n) { return Term{Kind::constant, std::move(n)}; }

  bool is_variable() const noexcept { return kind == Kind::variable; }
  bool is_constant() const noexcept { return kind == Kind::constant; }

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

/// Fresh constants live in a reserved namespace that user input cannot spell.
inline std::string fresh_constant(std::size_t index) { return "_k" + std::to_string(index); }

inline bool is_fresh_constant(std::string_view name) noexcept {
  return name.size() > 2 && name[0] == '_' && name[1] == 'k';
}

/// Raised when a substitution would capture a variable.
class CaptureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FormulaKind : std::uint8_t { prop_atom, atom, neg, box, imp, forall };

namespace detail {

// Instantiated only once Formula is complete.
template <class F>
struct FormulaNode {
  FormulaKind kind = FormulaKind::prop_atom;
  std::string name;
  std::vector<Term> args;
  F left;
  F right;
  std::size_t hash = 0;
  unsigned complexity = 0;
  bool has_prop = false;
  bool has_fo = false;
  std::vector<std::string> free_vars;
};

}  // namespace detail

class Formula {
 public:
  Formula() = default;

  static Formula prop(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::prop_atom;
    n->name = std::move(name);
    return finish(std::move(n));
  }

  static Formula atom(std::string predicate, std::vector<Term> args) {
    if (args.empty()) throw std::invalid_argument("predicate atoms need at least one argument");
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::atom;
    n->name = std::move(predicate);
    n->args = std::move(args);
    return finish(std::move(n));
  }

  static Formula neg(Formula operand) { return unary(FormulaKind::neg, std::move(operand)); }
  static Formula box(Formula operand) { return unary(FormulaKind::box, std::move(operand)); }

  static Formula imp(Formula antecedent, Formula consequent) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::imp;
    n->left = std::move(antecedent);
    n->right = std::move(consequent);
    return finish(std::move(n));
  }

  static Formula forall(std::string variable, Formula body) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::forall;
    n->name = std::move(variable);
    n->left = std::move(body);
    return finish(std::move(n));
  }

  // Sugar.
  static Formula diamond(Formula f) { return neg(box(neg(std::move(f)))); }
  static Formula exists(std::string variable, Formula body) {
    return neg(forall(std::move(variable), neg(std::move(body))));
  }
  static Formula conj(Formula a, Formula b) { return neg(imp(std::move(a), neg(std::move(b)))); }
  static Formula disj(Formula a, Formula b) { return imp(neg(std::move(a)), std::move(b)); }

  bool valid() const noexcept { return node_ != nullptr; }
  FormulaKind kind() const { return node_->kind; }

  /// Propositional atom name, predicate name or bound variable.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }

  /// Operand of ~ and [], body of forall, antecedent of ->.
  const Formula& operand() const { return node_->left; }
  const Formula& lhs() const { return node_->left; }
  const Formula& rhs() const { return node_->right; }
  const Formula& body() const { return node_->left; }
  const std::string& variable() const { return node_->name; }

  bool is_atomic() const {
    return node_->kind == FormulaKind::prop_atom || node_->kind == FormulaKind::atom;
  }
  bool is(FormulaKind k) const { return node_->kind == k; }

  std::size_t hash() const noexcept { return node_ ? node_->hash : 0; }
  unsigned complexity() const noexcept { return node_->complexity; }

  /// Free variables, sorted by name.
  const std::vector<std::string>& free_variables() const { return node_->free_vars; }
  bool has_free(std::string_view x) const {
    return std::binary_search(node_->free_vars.begin(), node_->free_vars.end(), x);
  }
  bool is_sentence() const { return node_->free_vars.empty(); }

  bool contains_prop_atoms() const { return node_->has_prop; }
  bool contains_first_order() const { return node_->has_fo; }

  const void* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash()) return false;
    return compare(a, b) == 0;
  }

  /// Total structural order (kind, names, then children).
  static int compare(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return 0;
    if (!a.node_ || !b.node_) return a.node_ ? 1 : -1;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return x.kind < y.kind ? -1 : 1;
    if (int c = x.name.compare(y.name); c != 0) return c < 0 ? -1 : 1;
    if (x.args != y.args) return x.args < y.args ? -1 : 1;
    if (int c = compare(x.left, y.left); c != 0) return c;
    return compare(x.right, y.right);
  }

  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }

 private:
  using Node = detail::FormulaNode<Formula>;

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula unary(FormulaKind k, Formula operand) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->left = std::move(operand);
    return finish(std::move(n));
  }

  static void mix(std::size_t& seed, std::size_t v) noexcept {
    seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  }

  static Formula finish(std::shared_ptr<Node> n) {
    std::size_t h = static_cast<std::size_t>(n->kind) * 0x100000001b3ULL + 17;
    switch (n->kind) {
      case FormulaKind::prop_atom:
        mix(h, std::hash<std::string>{}(n->name));
        n->has_prop = true;
        break;
      case FormulaKind::atom: {
        mix(h, std::hash<std::string>{}(n->name));
        n->has_fo = true;
        for (const auto& t : n->args) {
          mix(h, std::hash<std::string>{}(t.name) + static_cast<std::size_t>(t.kind));
          if (t.is_variable()) n->free_vars.push_back(t.name);
        }
        std::sort(n->free_vars.begin(), n->free_vars.end());
        n->free_vars.erase(std::unique(n->free_vars.begin(), n->free_vars.end()),
                           n->free_vars.end());
        break;
      }
      case FormulaKind::neg:
      case FormulaKind::box:
        if (!n->left.valid()) throw std::invalid_argument("missing operand");
        mix(h, n->left.hash());
        n->complexity = n->left.complexity() + 1;
        n->has_prop = n->left.node_->has_prop;
        n->has_fo = n->left.node_->has_fo;
        n->free_vars = n->left.node_->free_vars;
        break;
      case FormulaKind::imp: {
        if (!n->left.valid() || !n->right.valid()) throw std::invalid_argument("missing operand");
        mix(h, n->left.hash());
        mix(h, n->right.hash());
        n->complexity = n->left.complexity() + n->right.complexity() + 1;
        n->has_prop = n->left.node_->has_prop || n->right.node_->has_prop;
        n->has_fo = n->left.node_->has_fo || n->right.node_->has_fo;
        const auto& a = n->left.node_->free_vars;
        const auto& b = n->right.node_->free_vars;
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(n->free_vars));
        break;
      }
      case FormulaKind::forall:
        if (!n->left.valid()) throw std::invalid_argument("missing body");
        mix(h, std::hash<std::string>{}(n->name));
        mix(h, n->left.hash());
        n->complexity = n->left.complexity() + 1;
        n->has_prop = n->left.node_->has_prop;
        n->has_fo = true;
        for (const auto& v : n->left.node_->free_vars)
          if (v != n->name) n->free_vars.push_back(v);
        break;
    }
    n->hash = h;
    return Formula(std::shared_ptr<const Node>(std::move(n)));
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// Complexity measure: atoms 0; ~, [] and forall add one; c(a->b) = c(a)+c(b)+1.
inline unsigned complexity(const Formula& f) { return f.complexity(); }

inline bool is_sentence(const Formula& f) { return f.is_sentence(); }

/// Free variables in order of first (left-to-right) occurrence.
inline std::vector<std::string> free_vars_ordered(const Formula& f) {
  std::vector<std::string> out;
  std::vector<std::string> bound;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::prop_atom: return;
      case FormulaKind::atom:
        for (const auto& t : g.args()) {
          if (!t.is_variable()) continue;
          if (std::find(bound.begin(), bound.end(), t.name) != bound.end()) continue;
          if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        }
        return;
      case FormulaKind::neg:
      case FormulaKind::box: walk(g.operand()); return;
      case FormulaKind::imp:
        walk(g.lhs());
        walk(g.rhs());
        return;
      case FormulaKind::forall:
        bound.push_back(g.variable());
        walk(g.body());
        bound.pop_back();
        return;
    }
  };
  walk(f);
  return out;
}

/// Whether tau may replace the free occurrences of x in f without capture.
inline bool is_free_for(const Term& tau, std::string_view x, const Formula& f) {
  if (tau.is_constant()) return true;
  switch (f.kind()) {
    case FormulaKind::prop_atom:
    case FormulaKind::atom: return true;
    case FormulaKind::neg:
    case FormulaKind::box: return is_free_for(tau, x, f.operand());
    case FormulaKind::imp: return is_free_for(tau, x, f.lhs()) && is_free_for(tau, x, f.rhs());
    case FormulaKind::forall:
      if (f.variable() == x) return true;  // x is not free below
      if (!f.body().has_free(x)) return true;
      if (f.variable() == tau.name) return false;
      return is_free_for(tau, x, f.body());
  }
  return true;
}

/// Replace every free occurrence of x by tau. Throws CaptureError when tau
/// is not free for x.
inline Formula substitute(const Formula& f, std::string_view x, const Term& tau) {
  if (!is_free_for(tau, x, f))
    throw CaptureError("term " + tau.name + " is not free for " + std::string(x));
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (!g.has_free(x)) return g;
    switch (g.kind()) {
      case FormulaKind::prop_atom: return g;
      case FormulaKind::atom: {
        std::vector<Term> args(g.args().begin(), g.args().end());
        for (auto& t : args)
          if (t.is_variable() && t.name == x) t = tau;
        return Formula::atom(g.name(), std::move(args));
      }
      case FormulaKind::neg: return Formula::neg(go(g.operand()));
      case FormulaKind::box: return Formula::box(go(g.operand()));
      case FormulaKind::imp: return Formula::imp(go(g.lhs()), go(g.rhs()));
      case FormulaKind::forall: return Formula::forall(g.variable(), go(g.body()));
    }
    return g;
  };
  return go(f);
}

/// Variant normal form: void quantifiers deleted, bound variables renamed to
/// x1, x2, ... by binder nesting depth. If a free variable already has that
/// shape the reserved spelling _x1, _x2, ... is used instead.
inline Formula canonicalize(const Formula& f) {
  if (!f.contains_first_order()) return f;
  std::string prefix = "x";
  for (const auto& v : f.free_variables()) {
    if (v.size() > 1 && v[0] == 'x' &&
        std::all_of(v.begin() + 1, v.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      prefix = "_x";
      break;
    }
  }
  std::vector<std::pair<std::string, std::string>> env;  // original -> canonical
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    switch (g.kind()) {
      case FormulaKind::prop_atom: return g;
      case FormulaKind::atom: {
        bool changed = false;
        std::vector<Term> args(g.args().begin(), g.args().end());
        for (auto& t : args) {
          if (!t.is_variable()) continue;
          for (auto it = env.rbegin(); it != env.rend(); ++it) {
            if (it->first == t.name) {
              if (t.name != it->second) {
                t.name = it->second;
                changed = true;
              }
              break;
            }
          }
        }
        return changed ? Formula::atom(g.name(), std::move(args)) : g;
      }
      case FormulaKind::neg: {
        auto o = go(g.operand());
        return o.identity() == g.operand().identity() ? g : Formula::neg(std::move(o));
      }
      case FormulaKind::box: {
        auto o = go(g.operand());
        return o.identity() == g.operand().identity() ? g : Formula::box(std::move(o));
      }
      case FormulaKind::imp: {
        auto a = go(g.lhs());
        auto b = go(g.rhs());
        if (a.identity() == g.lhs().identity() && b.identity() == g.rhs().identity()) return g;
        return Formula::imp(std::move(a), std::move(b));
      }
      case FormulaKind::forall: {
        if (!g.body().has_free(g.variable())) return go(g.body());
        std::string fresh = prefix + std::to_string(env.size() + 1);
        env.emplace_back(g.variable(), fresh);
        auto b = go(g.body());
        env.pop_back();
        if (fresh == g.variable() && b.identity() == g.body().identity()) return g;
        return Formula::forall(std::move(fresh), std::move(b));
      }
    }
    return g;
  };
  return go(f);
}

inline bool are_variants(const Formula& a, const Formula& b) {
  return canonicalize(a) == canonicalize(b);
}

/// phi(c) for a universal sentence forall x phi, in canonical form.
inline Formula instantiate(const Formula& universal, const std::string& constant) {
  return canonicalize(substitute(universal.body(), universal.variable(), Term::constant(constant)));
}

/// forall x1 ... forall xn f over the free variables in order of occurrence.
inline Formula universal_closure(const Formula& f) {
  auto vars = free_vars_ordered(f);
  Formula out = f;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) out = Formula::forall(*it, out);
  return out;
}

/// Constants in order of first occurrence.
inline std::vector<std::string> constants_of(const Formula& f) {
  std::vector<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::prop_atom: return;
      case FormulaKind::atom:
        for (const auto& t : g.args())
          if (t.is_constant() && std::find(out.begin(), out.end(), t.name) == out.end())
            out.push_back(t.name);
        return;
      case FormulaKind::neg:
      case FormulaKind::box:
      case FormulaKind::forall: walk(g.operand()); return;
      case FormulaKind::imp:
        walk(g.lhs());
        walk(g.rhs());
        return;
    }
  };
  walk(f);
  return out;
}

/// Predicates with their arities.
inline std::map<std::string, int> predicates_of(const Formula& f) {
  std::map<std::string, int> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::prop_atom: return;
      case FormulaKind::atom: out.emplace(g.name(), static_cast<int>(g.args().size())); return;
      case FormulaKind::neg:
      case FormulaKind::box:
      case FormulaKind::forall: walk(g.operand()); return;
      case FormulaKind::imp:
        walk(g.lhs());
        walk(g.rhs());
        return;
    }
  };
  walk(f);
  return out;
}

inline bool is_propositional(const Formula& f) { return !f.contains_first_order(); }

/// Right-nested implication g1 -> (g2 -> ... -> (gn -> goal)).
inline Formula nest_implications(std::span<const Formula> premises, Formula goal) {
  Formula out = std::move(goal);
  for (auto it = premises.rbegin(); it != premises.rend(); ++it) out = Formula::imp(*it, out);
  return out;
}

namespace detail {

inline void print_to(std::string& out, const Formula& f, bool closed_right);

inline void print_operand(std::string& out, const Formula& f, bool closed_right) {
  if (f.is(FormulaKind::imp)) {
    out += '(';
    print_to(out, f, false);
    out += ')';
  } else {
    print_to(out, f, closed_right);
  }
}

// closed_right: more text follows, so a trailing -> must be wrapped.
inline void print_to(std::string& out, const Formula& f, bool closed_right) {
  switch (f.kind()) {
    case FormulaKind::prop_atom: out += f.name(); return;
    case FormulaKind::atom: {
      out += f.name();
      out += '(';
      bool first = true;
      for (const auto& t : f.args()) {
        if (!first) out += ',';
        out += t.name;
        first = false;
      }
      out += ')';
      return;
    }
    case FormulaKind::neg:
      out += '~';
      print_operand(out, f.operand(), closed_right);
      return;
    case FormulaKind::box:
      out += "[]";
      print_operand(out, f.operand(), closed_right);
      return;
    case FormulaKind::imp:
      if (closed_right) out += '(';
      print_to(out, f.lhs(), true);
      out += " -> ";
      print_to(out, f.rhs(), false);
      if (closed_right) out += ')';
      return;
    case FormulaKind::forall:
      out += "forall ";
      out += f.variable();
      out += " . ";
      print_operand(out, f.body(), closed_right);
      return;
  }
}

}  // namespace detail

/// ASCII rendering in the input grammar, using only primitive connectives.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_to(out, f, false);
  return out;
}

}  // namespace ivlev

template <>
struct std::hash<ivlev::Formula> {
  std::size_t operator()(const ivlev::Formula& f) const noexcept { return f.hash(); }
};
