#include <gtest/gtest.h>

#include "ivlev/corpus.hpp"
#include "ivlev/parser.hpp"
#include "ivlev/prop_oracle.hpp"

using namespace ivlev;
using TV = TruthValue;

namespace {

std::size_t count_assignments(Logic l, const char* text) {
  Formula f = parse(text);
  return legal_assignments(l, std::span<const Formula>(&f, 1)).size();
}

// Brute force over all 4^n value vectors of the subformula graph.
bool naive_valid(Logic l, const Formula& f) {
  SubformulaGraph g(std::span<const Formula>(&f, 1));
  std::size_t n = g.size();
  std::vector<TV> vals(n);
  std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) vals[i] = static_cast<TV>((code >> (2 * i)) & 3);
    bool legal = true;
    for (std::size_t i = 0; i < n && legal; ++i)
      legal = allowed_values(l, g, static_cast<int>(i), vals).contains(vals[i]);
    if (legal && !is_designated(vals[static_cast<std::size_t>(g.roots()[0])])) return false;
  }
  return true;
}

}  // namespace

TEST(SubformulaGraph, SharesSubterms) {
  Formula f = parse("[]p -> ([]p -> p)");
  SubformulaGraph g(std::span<const Formula>(&f, 1));
  EXPECT_EQ(g.size(), 4u);  // p, []p, []p -> p, root
  EXPECT_TRUE(g.find(parse("[]p")).has_value());
  EXPECT_FALSE(g.find(parse("q")).has_value());
}

TEST(Oracle, AssignmentCounts) {
  EXPECT_EQ(count_assignments(Logic::tm, "p"), 4u);
  EXPECT_EQ(count_assignments(Logic::tm, "[]p"), 8u);
  EXPECT_EQ(count_assignments(Logic::s5m, "[]p"), 4u);
  EXPECT_EQ(count_assignments(Logic::s4m, "[]p"), 7u);
}

TEST(Oracle, ValidityExamples) {
  EXPECT_TRUE(is_valid_prop(Logic::tm, parse("[]p -> p")).valid);
  EXPECT_TRUE(is_valid_prop(Logic::s4m, parse("[]p -> [][]p")).valid);

  auto v = is_valid_prop(Logic::tm, parse("[](p -> p)"));
  ASSERT_FALSE(v.valid);
  ASSERT_TRUE(v.counter.has_value());
  EXPECT_EQ(v.counter->value_of(parse("p")), TV::t);
  EXPECT_EQ(v.counter->value_of(parse("p -> p")), TV::t);
  EXPECT_EQ(v.counter->value_of(parse("[](p -> p)")), TV::f);

  auto w = is_valid_prop(Logic::s4m, parse("~[]~[]p -> []p"));
  ASSERT_FALSE(w.valid);
  EXPECT_EQ(w.counter->value_of(parse("p")), TV::t);
  EXPECT_EQ(w.counter->value_of(parse("[]p")), TV::f);
  EXPECT_EQ(w.counter->value_of(parse("~[]p")), TV::t);
  EXPECT_FALSE(is_designated(*w.counter->value_of(parse("[]~[]p"))));
  EXPECT_TRUE(is_legal_assignment(Logic::s4m, *w.counter));
}

TEST(Oracle, ConsequenceExamples) {
  std::vector<Formula> mp{parse("p"), parse("p -> q")};
  for (Logic l : kAllLogics) EXPECT_TRUE(consequence_prop(l, mp, parse("q")).valid);
  std::vector<Formula> just_p{parse("p")};
  EXPECT_FALSE(consequence_prop(Logic::tm, just_p, parse("[]p")).valid);
  for (const char* s : {"[]p -> p", "[](p -> p)", "p -> []p"})
    for (Logic l : kAllLogics)
      EXPECT_EQ(consequence_prop(l, {}, parse(s)).valid, is_valid_prop(l, parse(s)).valid);
}

TEST(Oracle, NodeCap) {
  OracleOptions tight;
  tight.max_nodes = 3;
  EXPECT_THROW(is_valid_prop(Logic::tm, parse("[]p -> [][]p"), tight), OracleLimitError);
}

TEST(OracleProperty, AgreesWithNaiveEnumeration) {
  std::size_t checked = 0;
  enumerate_formulas({"p", "q"}, 4, [&](const Formula& f) {
    for (Logic l : kAllLogics) EXPECT_EQ(is_valid_prop(l, f).valid, naive_valid(l, f)) << to_string(f);
    ++checked;
    return true;
  });
  EXPECT_GT(checked, 3000u);
}

TEST(OracleProperty, LegalSetsAreNested) {
  RandomFormulaGenerator gen(7, {"p", "q"}, 9);
  for (int i = 0; i < 300; ++i) {
    Formula f = gen.next();
    for (const auto& a : legal_assignments(Logic::s5m, std::span<const Formula>(&f, 1)))
      ASSERT_TRUE(is_legal_assignment(Logic::s4m, a)) << to_string(f);
    for (const auto& a : legal_assignments(Logic::s4m, std::span<const Formula>(&f, 1)))
      ASSERT_TRUE(is_legal_assignment(Logic::tm, a)) << to_string(f);
  }
}

TEST(OracleProperty, EnumerationIsExactlyTheLegalSet) {
  RandomFormulaGenerator gen(8, {"p", "q"}, 6);
  for (int i = 0; i < 200; ++i) {
    Formula f = gen.next();
    SubformulaGraph g(std::span<const Formula>(&f, 1));
    if (g.size() > 6) continue;
    for (Logic l : kAllLogics) {
      auto listed = legal_assignments(l, std::span<const Formula>(&f, 1));
      std::size_t brute = 0;
      std::vector<TV> vals(g.size());
      for (std::size_t code = 0; code < (std::size_t{1} << (2 * g.size())); ++code) {
        for (std::size_t k = 0; k < g.size(); ++k) vals[k] = static_cast<TV>((code >> (2 * k)) & 3);
        bool legal = true;
        for (std::size_t k = 0; k < g.size() && legal; ++k)
          legal = allowed_values(l, g, static_cast<int>(k), vals).contains(vals[k]);
        brute += legal;
      }
      ASSERT_EQ(listed.size(), brute) << to_string(f);
      for (const auto& a : listed) ASSERT_TRUE(is_legal_assignment(l, a));
    }
  }
}
