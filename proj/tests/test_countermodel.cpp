#include <gtest/gtest.h>

#include "generators.hpp"
#include "ivlev/corpus.hpp"
#include "ivlev/countermodel.hpp"
#include "ivlev/parser.hpp"

using namespace ivlev;
using TV = TruthValue;

namespace {

SignedFormula sf(TV s, const char* text) { return {s, canonicalize(parse(text))}; }

bool has_clause(const HintikkaReport& r, int clause) {
  for (const auto& v : r.violations)
    if (v.clause == clause) return true;
  return false;
}

std::vector<SignedFormula> open_fo_branch(Logic l, TV sign, const char* text,
                                          std::vector<std::string>* consts) {
  auto r = run_systematic(l, {sign, parse(text)}, {200, 200000, {}});
  if (r.outcome != SearchOutcome::open) return {};
  *consts = r.branch_constants;
  return r.open_branch;
}

}  // namespace

TEST(Hintikka, Examples) {
  EXPECT_TRUE(check_hintikka({sf(TV::T, "~p"), sf(TV::F, "p")}, {}).pass());

  auto boxed = check_hintikka({sf(TV::T, "[]p")}, {});
  EXPECT_FALSE(boxed.pass());
  EXPECT_TRUE(has_clause(boxed, 3));

  EXPECT_TRUE(check_hintikka({sf(TV::t, "[]p"), sf(TV::T, "p")}, {}, Logic::tm).pass());
  EXPECT_FALSE(check_hintikka({sf(TV::t, "[]p"), sf(TV::T, "p")}, {}, Logic::s4m).pass());
}

TEST(Hintikka, ClauseNumbers) {
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::T, "p"), sf(TV::t, "p")}, {}), 1));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::T, "~p")}, {}), 2));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::f, "[]p"), sf(TV::t, "p"), sf(TV::f, "p")}, {}), 4));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::F, "p -> q"), sf(TV::t, "p"), sf(TV::F, "q")}, {}), 8));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::T, "forall x . P(x)")}, {"c"}), 9));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::t, "forall x . P(x)"), sf(TV::T, "P(c)")}, {"c"}), 10));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::f, "forall x . P(x)"), sf(TV::F, "P(c)")}, {"c"}), 11));
  EXPECT_TRUE(has_clause(check_hintikka({sf(TV::F, "forall x . P(x)"), sf(TV::f, "P(c)")}, {"c"}), 12));
  EXPECT_TRUE(check_hintikka({sf(TV::F, "forall x . P(x)"), sf(TV::F, "P(c)")}, {"c"}).pass());
}

TEST(ExtractProp, Examples) {
  auto r = saturate_prop(Logic::tm, sf(TV::f, "[](p -> p)"), {false});
  ASSERT_FALSE(r.closed);
  auto a = extract_prop_countermodel(Logic::tm, r.open_branch);
  EXPECT_EQ(a.value_of(parse("p -> p")), TV::t);
  EXPECT_EQ(a.value_of(parse("[](p -> p)")), TV::f);
  EXPECT_TRUE(is_legal_assignment(Logic::tm, a));

  auto single = extract_prop_countermodel(Logic::tm, {sf(TV::F, "p")});
  EXPECT_EQ(single.size(), 1u);
  EXPECT_EQ(single.value_of(parse("p")), TV::F);
  EXPECT_FALSE(single.value_of(parse("q")).has_value());

  EXPECT_THROW(extract_prop_countermodel(Logic::tm, {sf(TV::T, "[]p")}), std::invalid_argument);
}

TEST(ExtractProp, CompletionTakesFirstLegalValue) {
  // q is not on the branch, so it takes the first value in T, t, f, F order.
  auto a = extract_prop_countermodel(Logic::tm, {sf(TV::T, "p -> q"), sf(TV::F, "p")});
  EXPECT_EQ(a.value_of(parse("p")), TV::F);
  EXPECT_EQ(a.value_of(parse("q")), TV::T);
}

TEST(ExtractFO, Examples) {
  std::vector<std::string> consts;
  auto br = open_fo_branch(Logic::tm, TV::f, "forall x . P(x)", &consts);
  ASSERT_FALSE(br.empty());
  auto m = extract_fo_countermodel(Logic::tm, br, consts);
  EXPECT_EQ(m.structure.domain(), std::vector<std::string>{"_k1"});
  EXPECT_EQ(m.structure.atom_value(Formula::atom("P", {Term::constant("_k1")})), TV::f);
  EXPECT_EQ(m.valuation.get(canonicalize(parse("forall x . P(x)"))), TV::f);

  br = open_fo_branch(Logic::tm, TV::F, "forall x . P(x)", &consts);
  ASSERT_FALSE(br.empty());
  m = extract_fo_countermodel(Logic::tm, br, consts);
  EXPECT_EQ(m.structure.atom_value(Formula::atom("P", {Term::constant("_k1")})), TV::F);
  EXPECT_EQ(m.valuation.get(canonicalize(parse("forall x . P(x)"))), TV::F);

  EXPECT_THROW(extract_fo_countermodel(Logic::tm, {sf(TV::T, "forall x . P(x)")}, {"c"}),
               std::invalid_argument);
}

TEST(ExtractFO, MatchesBoundedCountermodelUpToRenaming) {
  // exists x . P(x) -> forall x . P(x) fails on two elements with P differing.
  const char* text = "exists x . P(x) -> forall x . P(x)";
  auto bounded = bounded_validity(Logic::tm, parse(text), 2);
  ASSERT_FALSE(bounded.valid_up_to);
  std::vector<std::string> consts;
  auto br = open_fo_branch(Logic::tm, TV::F, text, &consts);
  ASSERT_FALSE(br.empty());
  auto m = extract_fo_countermodel(Logic::tm, br, consts);
  EXPECT_EQ(m.structure.size(), bounded.countermodel->structure.size());
  auto designated_cells = [](const FourValuedStructure& a) {
    int n = 0;
    for (TV v : a.predicates().at("P").cells) n += is_designated(v);
    return n;
  };
  EXPECT_EQ(designated_cells(m.structure), 1);
  EXPECT_EQ(designated_cells(bounded.countermodel->structure), 1);
}

TEST(CountermodelProperty, OpenPropositionalBranchesRoundTrip) {
  RandomFormulaGenerator gen(41, {"p", "q"}, 10);
  int open = 0;
  for (int i = 0; i < 600; ++i) {
    Formula f = gen.next();
    for (Logic l : kAllLogics)
      for (TV s : {TV::F, TV::f}) {
        auto r = saturate_prop(l, {s, f}, {false});
        if (r.closed) continue;
        ++open;
        ASSERT_TRUE(check_hintikka(r.open_branch, {}, l).pass()) << to_string(f);
        auto a = extract_prop_countermodel(l, r.open_branch);
        ASSERT_TRUE(is_legal_assignment(l, a)) << to_string(f);
        for (const auto& e : r.open_branch) ASSERT_EQ(a.value_of(e.formula), e.sign) << to_string(f);
      }
  }
  EXPECT_GT(open, 500);
}

TEST(CountermodelProperty, OpenFirstOrderBranchesRoundTrip) {
  gen::FirstOrder g(42);
  int open = 0;
  for (int i = 0; i < 150; ++i) {
    Formula f = g.sentence(2);
    for (Logic l : kAllLogics)
      for (TV s : {TV::F, TV::f}) {
        auto r = run_systematic(l, {s, f}, {60, 50000, {}});
        if (r.outcome != SearchOutcome::open) continue;
        ++open;
        ASSERT_TRUE(check_hintikka(r.open_branch, r.branch_constants, l).pass()) << to_string(f);
        auto m = extract_fo_countermodel(l, r.open_branch, r.branch_constants);
        const Formula& root = r.open_branch.front().formula;
        EXPECT_TRUE(verify_countermodel(l, m.structure, m.valuation, root).ok) << to_string(f);
        EXPECT_EQ(m.valuation.get(root), s) << to_string(f);
        auto again = extract_fo_countermodel(l, r.open_branch, r.branch_constants);
        EXPECT_EQ(again.valuation.entries(), m.valuation.entries());
        EXPECT_EQ(again.structure.domain(), m.structure.domain());
      }
  }
  EXPECT_GT(open, 60);
}
