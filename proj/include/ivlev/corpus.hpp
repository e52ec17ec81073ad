// Propositional formula corpora: exhaustive by connective count, and seeded
// random.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "ivlev/formula.hpp"

namespace ivlev {

/// Number of connective nodes (negations, boxes, implications).
inline std::size_t connective_count(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::neg:
    case FormulaKind::box: return 1 + connective_count(f.operand());
    case FormulaKind::imp: return 1 + connective_count(f.lhs()) + connective_count(f.rhs());
    default: return 0;
  }
}

/// Calls visit on every formula over the atoms with at most max_connectives
/// connective nodes, by increasing size; within a size, ~, [], -> and
/// earlier operands first. Returns the number visited. Stops early when
/// visit returns false.
inline std::size_t enumerate_formulas(const std::vector<std::string>& atoms,
                                      std::size_t max_connectives,
                                      const std::function<bool(const Formula&)>& visit) {
  std::vector<std::vector<Formula>> by_size(1);
  for (const auto& a : atoms) by_size[0].push_back(Formula::prop(a));
  std::size_t count = 0;
  bool go = true;
  auto emit = [&](const Formula& f, std::vector<Formula>* keep) {
    if (!go) return;
    ++count;
    go = visit(f);
    if (keep) keep->push_back(f);
  };
  for (const auto& f : by_size[0]) emit(f, nullptr);
  for (std::size_t n = 1; n <= max_connectives && go; ++n) {
    // The last level is streamed, not stored.
    std::vector<Formula> level;
    std::vector<Formula>* keep = n < max_connectives ? &level : nullptr;
    for (const auto& a : by_size[n - 1]) emit(Formula::neg(a), keep);
    for (const auto& a : by_size[n - 1]) emit(Formula::box(a), keep);
    for (std::size_t i = 0; i < n && go; ++i)
      for (const auto& a : by_size[i])
        for (const auto& b : by_size[n - 1 - i]) emit(Formula::imp(a, b), keep);
    by_size.push_back(std::move(level));
  }
  return count;
}

/// Seeded random formulas with 1..max_nodes nodes in total (atoms count).
class RandomFormulaGenerator {
 public:
  RandomFormulaGenerator(std::uint64_t seed, std::vector<std::string> atoms, std::size_t max_nodes)
      : rng_(seed), atoms_(std::move(atoms)), max_nodes_(max_nodes) {}

  Formula next() {
    std::uniform_int_distribution<std::size_t> size(1, max_nodes_);
    return build(size(rng_));
  }

 private:
  // A formula with exactly n nodes.
  Formula build(std::size_t n) {
    if (n == 1) {
      std::uniform_int_distribution<std::size_t> pick(0, atoms_.size() - 1);
      return Formula::prop(atoms_[pick(rng_)]);
    }
    // Implications need at least three nodes.
    std::uniform_int_distribution<int> op(0, n >= 3 ? 2 : 1);
    switch (op(rng_)) {
      case 0: return Formula::neg(build(n - 1));
      case 1: return Formula::box(build(n - 1));
      default: {
        std::uniform_int_distribution<std::size_t> split(1, n - 2);
        std::size_t left = split(rng_);
        Formula a = build(left);
        return Formula::imp(std::move(a), build(n - 1 - left));
      }
    }
  }

  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
  std::size_t max_nodes_;
};

inline std::vector<Formula> random_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_nodes,
                                          std::vector<std::string> atoms = {"p", "q"}) {
  RandomFormulaGenerator gen(seed, std::move(atoms), max_nodes);
  std::vector<Formula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

}  // namespace ivlev
