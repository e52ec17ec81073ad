// Signed tableau rules for the propositional connectives.
//
// A rule maps a signed compound L:phi to a list of branches, each a short
// list of signed immediate subformulas. A rule with no branches closes the
// branch outright.
#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "ivlev/formula.hpp"
#include "ivlev/truth_value.hpp"

namespace ivlev {

struct RuleItem {
  std::uint8_t child;  // 0: operand or antecedent, 1: consequent
  TruthValue sign;
};

struct PropRule {
  std::string_view name;
  std::uint8_t branch_count = 0;  // 0 means the branch closes
  std::array<std::uint8_t, 5> sizes{};
  std::array<std::array<RuleItem, 2>, 5> items{};

  bool closes() const noexcept { return branch_count == 0; }
  bool branching() const noexcept { return branch_count > 1; }
};

namespace detail {

using TV = TruthValue;

constexpr RuleItem L(TV s) { return {0, s}; }
constexpr RuleItem R(TV s) { return {1, s}; }

constexpr PropRule rule1(std::string_view name, RuleItem a) {
  PropRule r{name, 1, {}, {}};
  r.sizes[0] = 1;
  r.items[0][0] = a;
  return r;
}

constexpr PropRule closing(std::string_view name) { return PropRule{name, 0, {}, {}}; }

constexpr PropRule unary3(std::string_view name, TV a, TV b, TV c) {
  PropRule r{name, 3, {1, 1, 1}, {}};
  r.items[0][0] = L(a);
  r.items[1][0] = L(b);
  r.items[2][0] = L(c);
  return r;
}

// Index by sign enumerator value: F=0, f=1, t=2, T=3.
inline constexpr std::array<PropRule, 4> kNegRules{
    rule1("F~", L(TV::T)),
    rule1("f~", L(TV::t)),
    rule1("t~", L(TV::f)),
    rule1("T~", L(TV::F)),
};

inline constexpr std::array<PropRule, 4> kImpRules{
    // F:(a->b) / T:a, F:b
    PropRule{"F->", 1, {2}, {{{L(TV::T), R(TV::F)}}}},
    // f:(a->b) / T:a,f:b | t:a,f:b | t:a,F:b
    PropRule{"f->",
             3,
             {2, 2, 2},
             {{{L(TV::T), R(TV::f)}, {L(TV::t), R(TV::f)}, {L(TV::t), R(TV::F)}}}},
    // t:(a->b) / T:a,t:b | t:a,t:b | f:a,t:b | f:a,f:b | f:a,F:b
    PropRule{"t->",
             5,
             {2, 2, 2, 2, 2},
             {{{L(TV::T), R(TV::t)},
               {L(TV::t), R(TV::t)},
               {L(TV::f), R(TV::t)},
               {L(TV::f), R(TV::f)},
               {L(TV::f), R(TV::F)}}}},
    // T:(a->b) / F:a | t:a,t:b | f:a,t:b | f:a,f:b | T:b
    PropRule{"T->",
             5,
             {1, 2, 2, 2, 1},
             {{{L(TV::F)},
               {L(TV::t), R(TV::t)},
               {L(TV::f), R(TV::t)},
               {L(TV::f), R(TV::f)},
               {R(TV::T)}}}},
};

// kBoxRules[logic][sign]
inline constexpr std::array<std::array<PropRule, 4>, 3> kBoxRules{{
    {unary3("F[]", TV::t, TV::f, TV::F), unary3("f[]", TV::t, TV::f, TV::F),
     rule1("t[]", L(TV::T)), rule1("T[]", L(TV::T))},
    {unary3("F[]", TV::t, TV::f, TV::F), unary3("f[]", TV::t, TV::f, TV::F), closing("t[]"),
     rule1("T[]", L(TV::T))},
    {unary3("F[]", TV::t, TV::f, TV::F), closing("f[]"), closing("t[]"), rule1("T[]", L(TV::T))},
}};

}  // namespace detail

/// The unique rule for L:phi with phi a negation, box or implication.
inline const PropRule& prop_rule(Logic logic, FormulaKind kind, TruthValue sign) {
  auto s = static_cast<unsigned>(sign);
  switch (kind) {
    case FormulaKind::neg: return detail::kNegRules[s];
    case FormulaKind::imp: return detail::kImpRules[s];
    case FormulaKind::box: return detail::kBoxRules[static_cast<unsigned>(logic)][s];
    default: throw std::invalid_argument("no propositional rule for this connective");
  }
}

}  // namespace ivlev
