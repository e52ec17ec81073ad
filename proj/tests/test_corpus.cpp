#include <gtest/gtest.h>

#include <set>

#include "ivlev/agreement.hpp"
#include "ivlev/corpus.hpp"
#include "ivlev/parser.hpp"

using namespace ivlev;

namespace {

std::size_t nodes(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::neg:
    case FormulaKind::box: return 1 + nodes(f.operand());
    case FormulaKind::imp: return 1 + nodes(f.lhs()) + nodes(f.rhs());
    default: return 1;
  }
}

}  // namespace

TEST(Enumerate, LevelCounts) {
  const std::vector<std::size_t> expected{2, 8, 48, 352, 2880, 25216, 231168};
  std::vector<std::size_t> seen(expected.size(), 0);
  std::size_t total = enumerate_formulas({"p", "q"}, 6, [&](const Formula& f) {
    ++seen[connective_count(f)];
    return true;
  });
  EXPECT_EQ(seen, expected);
  EXPECT_EQ(total, 259674u);
}

TEST(Enumerate, OrderAndDistinctness) {
  std::vector<Formula> all;
  enumerate_formulas({"p", "q"}, 3, [&](const Formula& f) {
    all.push_back(f);
    return true;
  });
  EXPECT_EQ(all[0], parse("p"));
  EXPECT_EQ(all[2], parse("~p"));
  EXPECT_EQ(all[4], parse("[]p"));
  EXPECT_EQ(all[6], parse("p -> p"));
  std::set<std::string> texts;
  for (std::size_t i = 0; i < all.size(); ++i) {
    texts.insert(to_string(all[i]));
    if (i) {
      EXPECT_LE(connective_count(all[i - 1]), connective_count(all[i]));
    }
  }
  EXPECT_EQ(texts.size(), all.size());
}

TEST(Enumerate, StopsEarly) {
  std::size_t n = enumerate_formulas({"p"}, 5, [](const Formula& f) { return connective_count(f) < 2; });
  EXPECT_EQ(n, 1u + 3u + 1u);
}

TEST(Random, SeededAndBounded) {
  auto a = random_corpus(99, 200, 12);
  auto b = random_corpus(99, 200, 12);
  auto c = random_corpus(100, 200, 12);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  std::size_t biggest = 0;
  for (const auto& f : a) {
    EXPECT_LE(nodes(f), 12u);
    biggest = std::max(biggest, nodes(f));
  }
  EXPECT_GE(biggest, 10u);
}

TEST(Agreement, SmallCorpus) {
  AgreementReport r;
  std::size_t idx = 0;
  enumerate_formulas({"p", "q"}, 3, [&](const Formula& f) {
    check_corpus_formula(r, idx++, f, kAllLogics);
    return true;
  });
  EXPECT_EQ(r.formulas, 410u);
  EXPECT_EQ(r.checks, 3 * 410u);
  EXPECT_TRUE(r.mismatches.empty()) << r.to_text();
  EXPECT_EQ(r.roundtrip_failures, 0u) << r.to_text();
  EXPECT_GT(r.open_branches, 0u);
  EXPECT_GT(r.valid, 0u);
}

TEST(Agreement, ReportIsDeterministic) {
  auto run = [] {
    AgreementReport r;
    auto fs = random_corpus(3, 150, 9);
    for (std::size_t i = 0; i < fs.size(); ++i) check_corpus_formula(r, i, fs[i], kAllLogics);
    return r.to_text();
  };
  EXPECT_EQ(run(), run());
}

TEST(Agreement, DetectsDisagreement) {
  AgreementReport r;
  FormulaCheck fake;
  fake.tableau_valid = true;
  fake.oracle_valid = false;
  r.add(7, Logic::tm, parse("[]p"), fake);
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_NE(r.to_text().find("#7 Tm []p tableau=valid oracle=invalid"), std::string::npos);
}
