#include <gtest/gtest.h>

#include "generators.hpp"
#include "ivlev/fo_semantics.hpp"
#include "ivlev/parser.hpp"

using namespace ivlev;
using TV = TruthValue;

namespace {

std::vector<std::string> texts(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(to_string(f));
  return out;
}

FourValuedStructure unary(std::vector<TV> cells) {
  std::vector<std::string> dom;
  for (std::size_t i = 0; i < cells.size(); ++i) dom.push_back("u" + std::to_string(i + 1));
  FourValuedStructure a(dom);
  a.declare_predicate("P", 1);
  a.table("P").cells = std::move(cells);
  return a;
}

}  // namespace

TEST(Closure, Examples) {
  EXPECT_EQ(texts(instantiation_closure(parse("P(c)"), {"c"})), std::vector<std::string>{"P(c)"});
  auto two = texts(instantiation_closure(parse("forall x . P(x)"), {"c1", "c2"}));
  EXPECT_EQ(two.size(), 3u);
  EXPECT_EQ(two[0], "P(c1)");
  EXPECT_EQ(two[1], "P(c2)");
  auto boxed = texts(instantiation_closure(parse("[] forall x . P(x)"), {"c1"}));
  EXPECT_EQ(boxed.size(), 3u);
  EXPECT_EQ(boxed.back().substr(0, 2), "[]");
  EXPECT_THROW(instantiation_closure(parse("P(x)"), {"c"}), std::invalid_argument);
}

TEST(Structure, NamesAndDenotation) {
  FourValuedStructure a({"u1", "u2", "u3"});
  a.set_constant("c", 1);
  EXPECT_EQ(a.names(), (std::vector<std::string>{"c", "_u1", "_u3"}));
  EXPECT_EQ(a.denotation("c"), 1);
  EXPECT_EQ(a.denotation("_u3"), 2);
  EXPECT_FALSE(a.denotation("d").has_value());
  EXPECT_THROW(a.set_constant("d", 3), std::out_of_range);
  EXPECT_THROW(FourValuedStructure({}), std::invalid_argument);
}

TEST(LegalValuations, ForallAllT) {
  auto a = unary({TV::T});
  auto vs = legal_fo_valuations(Logic::tm, a, parse("forall x . P(x)"));
  ASSERT_FALSE(vs.empty());
  for (const auto& v : vs) EXPECT_EQ(v.get(parse("forall x . P(x)")), TV::T);
}

TEST(LegalValuations, ForallMixedContingent) {
  auto a = unary({TV::t, TV::f});
  auto vs = legal_fo_valuations(Logic::tm, a, parse("forall x . P(x)"));
  ASSERT_EQ(vs.size(), 1u);
  EXPECT_EQ(vs[0].get(parse("forall x . P(x)")), TV::f);
}

TEST(LegalValuations, S5BoxOfContingent) {
  auto a = unary({TV::t});
  a.set_constant("c", 0);
  for (const auto& v : legal_fo_valuations(Logic::s5m, a, parse("[]P(c)")))
    EXPECT_EQ(v.get(parse("[]P(c)")), TV::F);
}

TEST(LegalValuations, VariantsShareValues) {
  auto a = unary({TV::f, TV::T});
  a.set_constant("c", 0);
  for (const auto& v : legal_fo_valuations(Logic::tm, a, parse("forall x . P(c) -> P(c)"))) {
    EXPECT_EQ(v.get(parse("forall y . P(c)")), v.get(parse("P(c)")));
    EXPECT_EQ(v.get(parse("forall x . P(c)")), TV::f);
  }
}

TEST(LegalValuations, BranchingFactor) {
  // P(c) is fixed; []P(c) branches at most twice in Tm and S4m, never in S5m.
  for (TV cell : kValueOrder) {
    auto a = unary({cell});
    a.set_constant("c", 0);
    auto tm = legal_fo_valuations(Logic::tm, a, parse("[]P(c)")).size();
    auto s4 = legal_fo_valuations(Logic::s4m, a, parse("[]P(c)")).size();
    auto s5 = legal_fo_valuations(Logic::s5m, a, parse("[]P(c)")).size();
    EXPECT_LE(tm, 2u);
    EXPECT_LE(s4, 2u);
    EXPECT_EQ(s5, 1u);
    EXPECT_EQ(legal_fo_valuations(Logic::tm, a, parse("~forall x . P(x)")).size(), 1u);
  }
}

TEST(Bounded, Examples) {
  auto bf = bounded_validity(Logic::tm, parse("forall x . []P(x) -> [] forall x . P(x)"), 2);
  EXPECT_TRUE(bf.valid_up_to);
  EXPECT_EQ(bf.domain_bound, 2u);

  auto ax4 = bounded_validity(Logic::tm, parse("forall x . P(x) -> P(c)"), 1);
  EXPECT_TRUE(ax4.valid_up_to);

  auto swap = parse("forall x . exists y . R(x,y) -> exists y . forall x . R(x,y)");
  auto r = bounded_validity(Logic::tm, swap, 2);
  ASSERT_FALSE(r.valid_up_to);
  ASSERT_TRUE(r.countermodel.has_value());
  EXPECT_EQ(r.countermodel->structure.size(), 2u);
  EXPECT_TRUE(verify_countermodel(Logic::tm, r.countermodel->structure, r.countermodel->valuation, swap).ok);
}

TEST(Bounded, StructureCap) {
  BoundedOptions tiny;
  tiny.max_structures = 3;
  EXPECT_THROW(bounded_validity(Logic::tm, parse("forall x . []P(x) -> [] forall x . P(x)"), 2, tiny),
               ResourceLimitError);
}

TEST(Verify, DetectsViolations) {
  auto a = unary({TV::t});
  a.set_constant("c", 0);
  Formula phi = parse("~P(c)");
  FOValuation bad;
  bad.set(parse("P(c)"), TV::t);
  bad.set(phi, TV::t);
  auto rep = verify_countermodel(Logic::tm, a, bad, phi);
  EXPECT_FALSE(rep.ok);
  EXPECT_EQ(rep.clause, 2);

  auto b = unary({TV::F, TV::T});
  Formula all = parse("forall x . P(x)");
  FOValuation wrong;
  wrong.set(Formula::atom("P", {Term::constant("_u1")}), TV::F);
  wrong.set(Formula::atom("P", {Term::constant("_u2")}), TV::T);
  wrong.set(all, TV::f);
  auto rep2 = verify_countermodel(Logic::tm, b, wrong, all);
  EXPECT_FALSE(rep2.ok);
  EXPECT_EQ(rep2.clause, 5);
}

TEST(FOProperty, ClosureFaithfulness) {
  // All instances designated iff the universal closure is designated.
  gen::FirstOrder g(21);
  for (int i = 0; i < 60; ++i) {
    Formula f = g.formula(2);
    auto fv = f.free_variables();
    if (fv.size() != 1) continue;
    Formula closed = universal_closure(f);
    for (int n = 1; n <= 3; ++n) {
      std::vector<std::string> dom;
      for (int k = 0; k < n; ++k) dom.push_back("u" + std::to_string(k + 1));
      FourValuedStructure a(dom);
      a.set_constant("a", 0);
      a.set_constant("b", n - 1);
      a.declare_predicate("P", 1, TV::t);
      a.declare_predicate("R", 2, TV::f);
      a.set("P", std::vector<int>{0}, TV::F);
      std::size_t seen = 0;
      enumerate_legal_fo_valuations(Logic::tm, a, closed, [&](const FOValuation& v) {
        bool all = true;
        for (const auto& c : a.names()) all = all && is_designated(*v.get(substitute(f, fv[0], Term::constant(c))));
        EXPECT_EQ(all, is_designated(*v.get(closed))) << to_string(f);
        return ++seen < 50;
      });
    }
  }
}

TEST(FOProperty, EnumeratedValuationsVerify) {
  gen::FirstOrder g(22);
  for (int i = 0; i < 40; ++i) {
    Formula s = g.sentence(3);
    FourValuedStructure a({"u1", "u2"});
    a.set_constant("a", 0);
    a.set_constant("b", 1);
    a.declare_predicate("P", 1, TV::f);
    a.declare_predicate("R", 2, TV::t);
    std::size_t seen = 0;
    enumerate_legal_fo_valuations(Logic::s4m, a, s, [&](const FOValuation& v) {
      auto rep = verify_countermodel(Logic::s4m, a, v, s);
      // Legal valuations satisfy every clause; only designation may fail.
      EXPECT_TRUE(rep.ok || rep.clause == 0) << rep.message;
      EXPECT_EQ(rep.ok, !is_designated(*v.get(s)));
      return ++seen < 20;
    });
  }
}
