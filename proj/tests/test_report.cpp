#include <gtest/gtest.h>

#include "ivlev/parser.hpp"
#include "ivlev/report.hpp"

using namespace ivlev;

namespace {

// Every node carries the published fields; returns the node count.
std::size_t check_tree(const json& n) {
  EXPECT_TRUE(n.contains("sign"));
  EXPECT_TRUE(n.contains("formula"));
  EXPECT_TRUE(n.contains("rule"));
  EXPECT_TRUE(n.contains("closed"));
  EXPECT_TRUE(n["children"].is_array());
  std::size_t count = 1;
  for (const auto& c : n["children"]) count += check_tree(c);
  return count;
}

void check_countermodel_schema(const json& j) {
  for (const char* k : {"domain", "predicates", "constants", "valuation"}) EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_TRUE(j["domain"].is_array());
  EXPECT_TRUE(j["predicates"].is_object());
  EXPECT_TRUE(j["constants"].is_object());
  EXPECT_TRUE(j["valuation"].is_object());
}

}  // namespace

TEST(Report, ProvedPropositional) {
  auto v = prove(Logic::tm, parse("[]p -> p"));
  auto j = verdict_json(Logic::tm, v);
  EXPECT_EQ(j["logic"], "Tm");
  EXPECT_EQ(j["status"], to_string(ProofStatus::proved));
  ASSERT_EQ(j["searches"].size(), 2u);
  for (const auto& s : j["searches"]) {
    EXPECT_GT(check_tree(s["tree"]), 1u);
    EXPECT_EQ(s["outcome"], to_string(SearchOutcome::closed));
  }
  EXPECT_FALSE(j.contains("countermodel"));
  EXPECT_FALSE(verdict_json(Logic::tm, v, false)["searches"][0].contains("tree"));
}

TEST(Report, PropositionalCountermodel) {
  auto v = prove(Logic::s4m, parse("~[]~[]p -> []p"));
  auto j = verdict_json(Logic::s4m, v);
  ASSERT_TRUE(j.contains("countermodel"));
  check_countermodel_schema(j["countermodel"]);
  EXPECT_EQ(j["countermodel"]["valuation"]["p"], "t");
  EXPECT_EQ(j["countermodel"]["valuation"]["[]p"], "f");
  auto text = verdict_text(Logic::s4m, v);
  EXPECT_NE(text.find("countermodel"), std::string::npos);
  EXPECT_NE(text.find("v(p) = t"), std::string::npos);
}

TEST(Report, FirstOrderCountermodel) {
  ProveOptions o;
  o.budget = 100;
  auto v = prove(Logic::tm, parse("exists x . P(x) -> forall x . P(x)"), o);
  auto j = verdict_json(Logic::tm, v);
  EXPECT_EQ(j["logic"], "Tm*");
  ASSERT_TRUE(j.contains("countermodel"));
  const auto& cm = j["countermodel"];
  check_countermodel_schema(cm);
  EXPECT_EQ(cm["domain"].size(), 2u);
  EXPECT_EQ(cm["predicates"]["P"].size(), 2u);
  EXPECT_TRUE(j["searches"][0].contains("stages"));
  EXPECT_EQ(j.dump(), verdict_json(Logic::tm, prove(Logic::tm, parse("exists x . P(x) -> forall x . P(x)"), o)).dump());
}

TEST(Report, TupleKeys) {
  FourValuedStructure a({"u1", "u2"});
  a.declare_predicate("R", 2);
  EXPECT_EQ(tuple_key(a, 0, 2), "u1,u1");
  EXPECT_EQ(tuple_key(a, 1, 2), "u1,u2");
  EXPECT_EQ(tuple_key(a, 2, 2), "u2,u1");
}

TEST(Report, CheckResults) {
  EXPECT_EQ(check_json(CheckResult{}).dump(), R"({"verdict":"accept"})");
  CheckResult bad{false, 2, "MP shape mismatch"};
  EXPECT_EQ(check_json(bad)["step"], 2);
  EXPECT_EQ(check_text(bad), "reject at step 2: MP shape mismatch\n");
}
