#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"

using namespace hyperkit;
using fixtures::chain;
using fixtures::diamond;

namespace {

  std::string read(std::string const& rel) {
    std::ifstream     in(fixtures::source_dir() + "/" + rel);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  ParseError parse_failure(std::string const& text) {
    try {
      parse_structure(text);
    } catch (ParseError const& e) {
      return e;
    }
    ADD_FAILURE() << "no ParseError for: " << text;
    return ParseError(0, 0, "");
  }

  template <typename S>
  void expect_round_trip(S const& s) {
    auto const text   = serialize_structure(s);
    auto const parsed = parse_structure(text);
    ASSERT_TRUE(std::holds_alternative<S>(parsed));
    EXPECT_EQ(std::get<S>(parsed), s);
    EXPECT_EQ(serialize_structure(parsed), text);
  }

}  // namespace

TEST(Parse, TwoChain) {
  auto const s = parse_structure(
      R"({"kind": "bjoin", "size": 2, "bot": 0, "table": [[0,1],[1,1]]})");
  ASSERT_TRUE(std::holds_alternative<BJoinSemilattice>(s));
  EXPECT_EQ(std::get<BJoinSemilattice>(s), chain(2));
}

TEST(Parse, LMosaicWithLabels) {
  auto const s = parse_structure(read("samples/nakano_diamond.hstruct"));
  ASSERT_TRUE(std::holds_alternative<LMosaic>(s));
  EXPECT_EQ(std::get<LMosaic>(s), nakano(diamond()));
}

TEST(Parse, EmptyCellIsRejectedWithPosition) {
  auto const e = parse_failure(read("samples/empty_cell.hstruct"));
  EXPECT_EQ(e.message(), "empty hyperoperation cell at (0,0)");
  EXPECT_EQ(e.line(), 7U);
  EXPECT_EQ(e.column(), 6U);
  EXPECT_STREQ(e.what(),
               "line 7, column 6: empty hyperoperation cell at (0,0)");
}

TEST(Parse, ShapeErrors) {
  struct Case {
    char const* text;
    char const* message;
  };
  Case const cases[] = {
      {R"({"size": 1, "bot": 0, "table": [[0]]})", "missing field \"kind\""},
      {R"({"kind": "poset", "size": 1})",
       "kind must be \"bjoin\" or \"lmosaic\", found \"poset\""},
      {R"({"kind": "bjoin", "size": 0, "bot": 0, "table": []})",
       "size must be in [1, 64], found 0"},
      {R"({"kind": "bjoin", "size": 65, "bot": 0, "table": []})",
       "size must be in [1, 64], found 65"},
      {R"({"kind": "bjoin", "size": 1, "table": [[0]]})",
       "missing field \"bot\""},
      {R"({"kind": "bjoin", "size": 1, "bot": 0, "table": [[0]], "e": 0})",
       "unknown field \"e\" for kind bjoin"},
      {R"({"kind": "bjoin", "size": 2, "bot": 0, "table": [[0,1]]})",
       "table has 1 rows, expected 2"},
      {R"({"kind": "bjoin", "size": 2, "bot": 0, "table": [[0,1],[1]]})",
       "table row 1 has 1 entries, expected 2"},
      {R"({"kind": "bjoin", "size": 2, "bot": 0, "table": [[0,1],[1,2]]})",
       "index 2 out of range in table cell (1,1) (size 2)"},
      {R"({"kind": "bjoin", "size": 2, "bot": 5, "table": [[0,1],[1,1]]})",
       "index 5 out of range in bot (size 2)"},
      {R"({"kind": "bjoin", "size": "2", "bot": 0, "table": []})",
       "size must be an integer, found string"},
      {R"({"kind": "bjoin", "size": 1, "bot": 0, "table": [[0]],
           "labels": ["x", "y"]})",
       "labels has 2 entries, expected 1"},
      {R"({"kind": "bjoin", "size": 2, "bot": 0, "table": [[0,1],[1,1]],
           "labels": ["x", "x"]})",
       "duplicate label \"x\""},
      {R"({"kind": "lmosaic", "size": 1, "e": 0, "table": [[[0]]]})",
       "missing field \"rho\""},
      {R"({"kind": "lmosaic", "size": 1, "e": 0, "rho": [0, 0],
           "table": [[[0]]]})",
       "rho has 2 entries, expected 1"},
      {R"({"kind": "lmosaic", "size": 1, "e": 0, "rho": [0],
           "table": [[[0, 0]]]})",
       "duplicate element 0 in hyperoperation cell at (0,0)"},
      {R"({"kind": "bjoin", "kind": "bjoin"})", "duplicate field \"kind\""},
  };
  for (auto const& c : cases) {
    EXPECT_EQ(parse_failure(c.text).message(), c.message) << c.text;
  }
}

TEST(Parse, SyntaxErrorsCarryPositions) {
  auto const e = parse_failure("{\n  \"kind\": \"bjoin\",\n  \"size\": ]\n}");
  EXPECT_EQ(e.line(), 3U);
  EXPECT_EQ(e.column(), 11U);
  auto const trailing = parse_failure("{\"kind\": \"bjoin\"} x");
  EXPECT_EQ(trailing.line(), 1U);
  EXPECT_FALSE(parse_failure("").message().empty());
  auto const unknown = parse_failure(
      "{\"kind\": \"bjoin\",\n \"sise\": 1}");
  EXPECT_EQ(unknown.line(), 2U);
  EXPECT_EQ(unknown.column(), 2U);
}

TEST(Serialize, Goldens) {
  EXPECT_EQ(serialize_structure(chain(2)), read("tests/golden/chain2.hstruct"));
  EXPECT_EQ(serialize_structure(nakano(chain(2))),
            read("tests/golden/nakano_chain2.hstruct"));
  EXPECT_EQ(serialize_structure(fixtures::point()),
            "{\n  \"bot\": 0,\n  \"kind\": \"bjoin\",\n  \"size\": 1,\n"
            "  \"table\": [\n    [0]\n  ]\n}\n");
  EXPECT_EQ(serialize_structure(diamond()), read("samples/diamond.hstruct"));
}

TEST(Serialize, EscapesLabels) {
  auto const s = BJoinSemilattice(Carrier(2, {"lo \"x\"", "hi\\"}),
                                  chain(2).table(), 0);
  expect_round_trip(s);
}

TEST(RoundTrip, CorpusIsStable) {
  expect_round_trip(nakano(diamond()));
  expect_round_trip(diamond());
  expect_round_trip(fixtures::full(3));
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& s : enumerate_bjoin(n)) {
      expect_round_trip(s);
      expect_round_trip(nakano(s));
    }
    for (auto const& m : enumerate_lmosaic(n)) {
      expect_round_trip(m);
    }
  }
}

TEST(RoundTrip, RandomShapes) {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t const n = 1 + trial % 8;
    std::vector<ElemSet> cells(n * n);
    for (auto& c : cells) {
      c = ElemSet::from_bits(1 + rng() % ((1ULL << n) - 1));
    }
    std::vector<Element> rho(n);
    for (auto& r : rho) {
      r = static_cast<Element>(rng() % n);
    }
    expect_round_trip(LMosaic(Carrier(n), HyperOpTable(n, cells),
                              static_cast<Element>(rng() % n), rho));
    std::vector<Element> join(n * n);
    for (auto& j : join) {
      j = static_cast<Element>(rng() % n);
    }
    expect_round_trip(BJoinSemilattice(BinOpTable(n, join),
                                       static_cast<Element>(rng() % n)));
  }
}
