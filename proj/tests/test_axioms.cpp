#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hyperkit;
using fixtures::chain;
using fixtures::diamond;
using fixtures::full;

namespace {

  std::vector<std::string> names(CheckReport const& r) {
    std::vector<std::string> out;
    for (auto const& v : r.verdicts()) {
      out.push_back(v.axiom);
    }
    return out;
  }

  Witness witness(CheckReport const& r, std::string const& axiom) {
    auto const* v = r.find(axiom);
    EXPECT_NE(v, nullptr) << axiom;
    EXPECT_TRUE(v != nullptr && v->witness.has_value()) << axiom;
    return v != nullptr && v->witness ? *v->witness : Witness{};
  }

  LMosaic random_mosaic(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint64_t> cell(1, (1ULL << n) - 1);
    std::vector<ElemSet>                         cells(n * n);
    for (auto& c : cells) {
      c = ElemSet::from_bits(cell(rng));
    }
    auto const rhos = oracle::involutions(static_cast<int>(n));
    auto const rho  = rhos[rng() % rhos.size()];
    return LMosaic(Carrier(n), HyperOpTable(n, cells),
                   static_cast<Element>(rng() % n),
                   std::vector<Element>(rho.begin(), rho.end()));
  }

}  // namespace

TEST(CheckBJoin, VerdictOrder) {
  EXPECT_EQ(names(check_bjoin(chain(2))),
            (std::vector<std::string>{"closed", "assoc", "comm", "idem",
                                      "bot_in", "bot_left", "bot_right"}));
}

TEST(CheckBJoin, ChainAndDiamondPass) {
  EXPECT_TRUE(check_bjoin(chain(2)).passed());
  EXPECT_TRUE(check_bjoin(diamond()).passed());
  EXPECT_TRUE(check_bjoin(fixtures::point()).passed());
}

TEST(CheckBJoin, IdempotenceFailure) {
  BJoinSemilattice s(BinOpTable({{0, 1}, {1, 0}}), 0);
  auto const       r = check_bjoin(s);
  EXPECT_FALSE(r.passed("idem"));
  EXPECT_EQ(witness(r, "idem").elements, (std::vector<Element>{1}));
  EXPECT_FALSE(replay(s, "idem", witness(r, "idem")));
}

TEST(CheckBJoin, ProjectionIsNotCommutative) {
  auto const s = BJoinSemilattice(
      BinOpTable::from_function(3, [](Element x, Element) { return x; }), 0);
  auto const r = check_bjoin(s);
  EXPECT_FALSE(r.passed("comm"));
  EXPECT_EQ(witness(r, "comm").elements, (std::vector<Element>{0, 1}));
  EXPECT_TRUE(r.passed("assoc"));
}

TEST(CheckBJoin, BottomFailures) {
  // 1 is the least element, but bot is declared as 0
  auto const s = BJoinSemilattice(
      BinOpTable({{0, 0}, {0, 1}}), 0);
  auto const r = check_bjoin(s);
  EXPECT_FALSE(r.passed("bot_left"));
  EXPECT_EQ(witness(r, "bot_left").elements, (std::vector<Element>{1}));
  EXPECT_FALSE(replay(s, "bot_left", witness(r, "bot_left")));
}

TEST(CheckBJoin, RandomTablesAgreeWithOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    std::size_t const n = 1 + trial % 3;
    std::vector<Element> cells(n * n);
    for (auto& c : cells) {
      c = static_cast<Element>(rng() % n);
    }
    BJoinSemilattice s(BinOpTable(n, cells), 0);
    auto const       r = check_bjoin(s);
    EXPECT_EQ(r.passed(), oracle::is_bjoin(fixtures::to_oracle(s), 0));
    for (auto const& v : r.verdicts()) {
      if (v.witness) {
        EXPECT_FALSE(replay(s, v.axiom, *v.witness)) << v.axiom;
      }
    }
  }
}

TEST(CheckMosaic, NakanoStructuresPassBothModes) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& [key, j] : oracle::bjoin_classes(static_cast<int>(n))) {
      auto const m = fixtures::from_oracle(oracle::nakano(j), 0,
                                           oracle::involutions(n).front());
      EXPECT_TRUE(check_mosaic(m, Neutrality::weak).passed());
      EXPECT_TRUE(check_mosaic(m, Neutrality::strict).passed());
    }
  }
}

TEST(CheckMosaic, FullStructureFailsOnlyStrictNeutrality) {
  auto const m = full(3);
  EXPECT_EQ(names(check_mosaic(m)),
            (std::vector<std::string>{"nonempty", "neutral", "reversibility"}));
  EXPECT_TRUE(check_mosaic(m, Neutrality::weak).passed());
  auto const strict = check_mosaic(m, Neutrality::strict);
  EXPECT_FALSE(strict.passed("neutral_strict"));
  EXPECT_TRUE(strict.passed("reversibility"));
  // e (+) e = whole carrier, so the first failing element is e itself.
  auto const w = witness(strict, "neutral_strict");
  EXPECT_EQ(w.elements, (std::vector<Element>{0}));
  EXPECT_FALSE(replay(m, "neutral_strict", w));
}

TEST(CheckLMosaic, DiamondNakanoPasses) {
  auto const m = nakano(diamond());
  auto const r = check_lmosaic(m);
  EXPECT_TRUE(r.passed()) << to_string(r);
  EXPECT_EQ(names(r),
            (std::vector<std::string>{"nonempty", "neutral", "reversibility",
                                      "comm", "lm1_e", "lm1_id", "lm2", "lm3",
                                      "lm4"}));
  EXPECT_TRUE(check_lmosaic(m, Neutrality::strict).passed());
}

TEST(CheckLMosaic, FullTwoElementFailsOnlyLm4) {
  auto const r = check_lmosaic(full(2));
  EXPECT_EQ(r.failures(), (std::vector<std::string>{"lm4"}));
  // First failing pair in lexicographic order is (0,0): both 0 and 1 qualify.
  auto const w = witness(r, "lm4");
  EXPECT_EQ(w.elements, (std::vector<Element>{0, 0}));
  EXPECT_EQ(w.sets, (std::vector<ElemSet>{ElemSet::of({0, 1})}));
  // The pair (0,1) has the same candidate set.
  EXPECT_EQ(predicates::lm4_candidates(full(2), 0, 1), ElemSet::of({0, 1}));
  EXPECT_FALSE(replay(full(2), "lm4", Witness{{0, 1}, {}}));
}

TEST(CheckLMosaic, OnePointPasses) {
  auto const m = LMosaic(HyperOpTable({{ElemSet::of({0})}}), 0);
  EXPECT_TRUE(check_lmosaic(m).passed());
  EXPECT_TRUE(check_lmosaic(m, Neutrality::strict).passed());
}

TEST(CheckLMosaic, EmptyCellIsAConstructionError) {
  EXPECT_THROW(LMosaic(HyperOpTable({{ElemSet(), ElemSet::of({1})},
                                     {ElemSet::of({1}), ElemSet::of({0, 1})}}),
                       0),
               InvalidStructure);
}

TEST(CheckLMosaic, RandomTablesAgreeWithOracle) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t const n = 1 + trial % 4;
    auto const        m = random_mosaic(rng, n);
    auto const        r = check_lmosaic(m);
    auto const        expected = oracle::lmosaic_axioms(
        fixtures::to_oracle(m), static_cast<int>(m.e()), fixtures::rho_of(m));
    for (auto const& v : r.verdicts()) {
      ASSERT_TRUE(expected.count(v.axiom)) << v.axiom;
      EXPECT_EQ(v.pass(), expected.at(v.axiom)) << v.axiom;
      if (v.witness) {
        EXPECT_FALSE(replay(m, v.axiom, *v.witness)) << v.axiom;
      }
    }
  }
}

TEST(CheckLMosaic, LeastCandidateSetWitness) {
  // a 2-element structure with an empty lm4 candidate set at (0,1)
  auto const m = LMosaic(HyperOpTable({{ElemSet::of({0}), ElemSet::of({0})},
                                       {ElemSet::of({0}), ElemSet::of({1})}}),
                         0);
  auto const r = check_lmosaic(m);
  auto const w = witness(r, "lm4");
  EXPECT_EQ(w.elements, (std::vector<Element>{0, 1}));
  EXPECT_EQ(w.sets, (std::vector<ElemSet>{ElemSet()}));
}

TEST(Replay, RejectsUnknownAxiomsAndArity) {
  EXPECT_THROW(replay(chain(2), "bogus", Witness{{0}, {}}), UsageError);
  EXPECT_THROW(replay(chain(2), "assoc", Witness{{0}, {}}), UsageError);
  EXPECT_THROW(replay(full(2), "bogus", Witness{{0}, {}}), UsageError);
}

TEST(CheckReport, TextRendering) {
  auto const text = to_string(check_lmosaic(full(2)));
  EXPECT_NE(text.find("lm4"), std::string::npos);
  EXPECT_NE(text.find("{0,1}"), std::string::npos);
}
