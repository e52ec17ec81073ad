// Hand-rolled random generators for property tests.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ivlev/formula.hpp"

namespace gen {

using ivlev::Formula;
using ivlev::Term;

/// Random first-order formulas over P/1, R/2, constants a, b and variables
/// x, y, z. Bound variables are drawn from the same pool, so shadowing and
/// void quantifiers both occur.
class FirstOrder {
 public:
  explicit FirstOrder(std::uint64_t seed) : rng_(seed) {}

  Formula formula(int depth) {
    if (depth <= 0) return atom();
    switch (pick(6)) {
      case 0: return atom();
      case 1: return Formula::neg(formula(depth - 1));
      case 2: return Formula::box(formula(depth - 1));
      case 3: return Formula::imp(formula(depth - 1), formula(depth - 1));
      default: return Formula::forall(variable(), formula(depth - 1));
    }
  }

  /// A sentence: the universal closure of a random formula.
  Formula sentence(int depth) { return ivlev::universal_closure(formula(depth)); }

  Term term() { return pick(2) ? Term::var(variable()) : Term::constant(pick(2) ? "a" : "b"); }
  std::string variable() { return std::string(1, "xyz"[pick(3)]); }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

 private:
  Formula atom() {
    if (pick(2)) return Formula::atom("P", {term()});
    return Formula::atom("R", {term(), term()});
  }

  std::mt19937_64 rng_;
};

/// Inserts a void quantifier at a random position.
inline Formula insert_void(FirstOrder& g, const Formula& f) {
  auto fresh = std::string("w");
  if (g.pick(3) == 0 || f.is_atomic()) return Formula::forall(fresh, f);
  switch (f.kind()) {
    case ivlev::FormulaKind::neg: return Formula::neg(insert_void(g, f.operand()));
    case ivlev::FormulaKind::box: return Formula::box(insert_void(g, f.operand()));
    case ivlev::FormulaKind::imp:
      return g.pick(2) ? Formula::imp(insert_void(g, f.lhs()), f.rhs())
                       : Formula::imp(f.lhs(), insert_void(g, f.rhs()));
    case ivlev::FormulaKind::forall: return Formula::forall(f.variable(), insert_void(g, f.body()));
    default: return f;
  }
}

/// Renames the outermost binder to a variable not occurring in f.
inline Formula rename_outer(const Formula& f) {
  switch (f.kind()) {
    case ivlev::FormulaKind::neg: return Formula::neg(rename_outer(f.operand()));
    case ivlev::FormulaKind::box: return Formula::box(rename_outer(f.operand()));
    case ivlev::FormulaKind::imp: return Formula::imp(rename_outer(f.lhs()), f.rhs());
    case ivlev::FormulaKind::forall:
      return Formula::forall("v", ivlev::substitute(f.body(), f.variable(), Term::var("v")));
    default: return f;
  }
}

}  // namespace gen
