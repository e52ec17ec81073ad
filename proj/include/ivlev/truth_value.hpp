// Four-valued Ivlev matrices: truth values, value sets and the multioperator
// tables for Tm, S4m and S5m, plus the deterministic quantifier operators.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ivlev {

/// The chain F <= f <= t <= T. Enumerator values follow the chain.
enum class TruthValue : std::uint8_t { F = 0, f = 1, t = 2, T = 3 };

/// Enumeration order used everywhere values are tried in turn.
inline constexpr std::array<TruthValue, 4> kValueOrder{TruthValue::T, TruthValue::t,
                                                       TruthValue::f, TruthValue::F};

constexpr bool is_designated(TruthValue v) noexcept {
  return v == TruthValue::T || v == TruthValue::t;
}

constexpr char to_char(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::T: return 'T';
    case TruthValue::t: return 't';
    case TruthValue::f: return 'f';
    case TruthValue::F: return 'F';
  }
  return '?';
}

inline std::string to_string(TruthValue v) { return std::string(1, to_char(v)); }

inline TruthValue truth_value_from_char(char c) {
  switch (c) {
    case 'T': return TruthValue::T;
    case 't': return TruthValue::t;
    case 'f': return TruthValue::f;
    case 'F': return TruthValue::F;
    default: throw std::invalid_argument(std::string("not a truth value: ") + c);
  }
}

/// Non-empty subset of the four values, stored as a 4-bit mask.
class ValueSet {
 public:
  constexpr ValueSet(std::initializer_list<TruthValue> values) {
    for (auto v : values) bits_ |= bit(v);
    if (bits_ == 0) throw std::invalid_argument("empty value set");
  }

  static constexpr ValueSet from_bits(std::uint8_t bits) {
    if ((bits & 0xF) == 0 || (bits & ~0xF) != 0) throw std::invalid_argument("bad value-set mask");
    ValueSet s{TruthValue::T};
    s.bits_ = bits;
    return s;
  }

  static constexpr ValueSet singleton(TruthValue v) { return ValueSet{v}; }
  static constexpr ValueSet all() { return from_bits(0xF); }

  constexpr std::uint8_t bits() const noexcept { return bits_; }
  constexpr bool contains(TruthValue v) const noexcept { return (bits_ & bit(v)) != 0; }
  constexpr int size() const noexcept {
    return ((bits_ >> 0) & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1) + ((bits_ >> 3) & 1);
  }
  constexpr bool subset_of(ValueSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool is_singleton() const noexcept { return size() == 1; }

  /// First member in T, t, f, F order.
  constexpr TruthValue first() const noexcept {
    for (auto v : kValueOrder)
      if (contains(v)) return v;
    return TruthValue::F;
  }

  constexpr ValueSet with(TruthValue v) const noexcept {
    ValueSet s = *this;
    s.bits_ |= bit(v);
    return s;
  }

  friend constexpr bool operator==(ValueSet a, ValueSet b) noexcept { return a.bits_ == b.bits_; }

  static constexpr std::uint8_t bit(TruthValue v) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(v));
  }

 private:
  std::uint8_t bits_ = 0;
};

inline std::string to_string(ValueSet s) {
  std::string out = "{";
  bool first = true;
  for (auto v : kValueOrder) {
    if (!s.contains(v)) continue;
    if (!first) out += ",";
    out += to_char(v);
    first = false;
  }
  return out + "}";
}

/// Modal system; the first-order extensions share the same tables.
enum class Logic : std::uint8_t { tm, s4m, s5m };

inline constexpr std::array<Logic, 3> kAllLogics{Logic::tm, Logic::s4m, Logic::s5m};

inline std::string_view logic_name(Logic l) noexcept {
  switch (l) {
    case Logic::tm: return "Tm";
    case Logic::s4m: return "S4m";
    case Logic::s5m: return "S5m";
  }
  return "?";
}

inline Logic parse_logic(std::string_view s) {
  if (s == "tm" || s == "Tm" || s == "TM") return Logic::tm;
  if (s == "s4m" || s == "S4m" || s == "S4M") return Logic::s4m;
  if (s == "s5m" || s == "S5m" || s == "S5M") return Logic::s5m;
  throw std::invalid_argument("unknown logic: " + std::string(s));
}

namespace tables {

using TV = TruthValue;

inline constexpr std::uint8_t mask(std::initializer_list<TruthValue> vs) {
  std::uint8_t m = 0;
  for (auto v : vs) m |= ValueSet::bit(v);
  return m;
}

// Indexed by the enumerator value (F=0, f=1, t=2, T=3).
inline constexpr std::array<std::uint8_t, 4> kNeg{
    mask({TV::T}),  // F
    mask({TV::t}),  // f
    mask({TV::f}),  // t
    mask({TV::F}),  // T
};

// kImp[antecedent][consequent]
inline constexpr std::array<std::array<std::uint8_t, 4>, 4> kImp{{
    // antecedent F: F, f, t, T
    {mask({TV::T}), mask({TV::T}), mask({TV::T}), mask({TV::T})},
    // antecedent f
    {mask({TV::t}), mask({TV::T, TV::t}), mask({TV::T, TV::t}), mask({TV::T})},
    // antecedent t
    {mask({TV::f}), mask({TV::f}), mask({TV::T, TV::t}), mask({TV::T})},
    // antecedent T
    {mask({TV::F}), mask({TV::f}), mask({TV::t}), mask({TV::T})},
}};

// kBox[logic][value]
inline constexpr std::array<std::array<std::uint8_t, 4>, 3> kBox{{
    // Tm
    {mask({TV::f, TV::F}), mask({TV::f, TV::F}), mask({TV::f, TV::F}), mask({TV::T, TV::t})},
    // S4m
    {mask({TV::f, TV::F}), mask({TV::f, TV::F}), mask({TV::f, TV::F}), mask({TV::T})},
    // S5m
    {mask({TV::F}), mask({TV::F}), mask({TV::F}), mask({TV::T})},
}};

}  // namespace tables

inline constexpr ValueSet neg_op(TruthValue v) {
  return ValueSet::from_bits(tables::kNeg[static_cast<unsigned>(v)]);
}

/// The unique element of neg_op(v).
inline constexpr TruthValue negate(TruthValue v) noexcept {
  return static_cast<TruthValue>(3 - static_cast<unsigned>(v));
}

inline constexpr ValueSet imp_op(TruthValue antecedent, TruthValue consequent) {
  return ValueSet::from_bits(
      tables::kImp[static_cast<unsigned>(antecedent)][static_cast<unsigned>(consequent)]);
}

inline constexpr ValueSet box_op(Logic logic, TruthValue v) {
  return ValueSet::from_bits(
      tables::kBox[static_cast<unsigned>(logic)][static_cast<unsigned>(v)]);
}

namespace tables {

// Quantifier tables indexed by the value-set mask (bit F=1, f=2, t=4, T=8).
// Index 0 is unused.
inline constexpr std::array<TruthValue, 16> kForall{
    TV::F,                        // (unused)
    TV::F, TV::f, TV::F, TV::t,   // {F} {f} {F,f} {t}
    TV::F, TV::f, TV::F, TV::T,   // {F,t} {f,t} {F,f,t} {T}
    TV::F, TV::f, TV::F, TV::t,   // {F,T} {f,T} {F,f,T} {t,T}
    TV::F, TV::f, TV::F,          // {F,t,T} {f,t,T} {F,f,t,T}
};

inline constexpr std::array<TruthValue, 16> kExists{
    TV::F,                        // (unused)
    TV::F, TV::f, TV::f, TV::t,   // {F} {f} {F,f} {t}
    TV::t, TV::t, TV::t, TV::T,   // {F,t} {f,t} {F,f,t} {T}
    TV::T, TV::T, TV::T, TV::T,   // T in X
    TV::T, TV::T, TV::T,
};

}  // namespace tables

/// Deterministic universal quantifier; coincides with the meet of X.
inline constexpr TruthValue forall_op(ValueSet x) noexcept { return tables::kForall[x.bits()]; }

/// Deterministic existential quantifier; coincides with the join of X.
inline constexpr TruthValue exists_op(ValueSet x) noexcept { return tables::kExists[x.bits()]; }

}  // namespace ivlev
