// Acceptance suite: one PASS/FAIL line per criterion; exit status is the
// number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <hyperkit/hyperkit.hpp>

#include "oracles.hpp"

using namespace hyperkit;

namespace {

  using Clock = std::chrono::steady_clock;

  // Time limits, seconds.
  constexpr double kNakanoLimit     = 60.0;
  constexpr double kMosaicLimit     = 600.0;
  constexpr double kAssocScanLimit  = 60.0;

  constexpr std::size_t kLatticeCounts[] = {1, 1, 1, 2, 5, 15};

  // Mosaic enumeration is run up to this size (beyond the default bound of
  // 4) for the reverse-construction, round-trip and witness criteria.
  constexpr std::size_t   kMosaicMax = 6;
  EnumerationBounds const kBounds{7, kMosaicMax};

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string fmt(char const* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
  }

  std::string read(std::string const& path) {
    std::ifstream     in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  BJoinSemilattice diamond() {
    return BJoinSemilattice(
        Carrier(4, {"bot", "a", "b", "top"}),
        BinOpTable({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}),
        0);
  }

  LMosaic full2() {
    return LMosaic(HyperOpTable::from_function(
                       2, [](Element, Element) { return ElemSet::full(2); }),
                   0);
  }

  // Nakano validity over every semilattice n <= 6.
  Outcome ac1() {
    auto const  t0 = Clock::now();
    std::size_t total = 0, failures = 0;
    std::string counts;
    bool        counts_ok = true;
    for (std::size_t n = 1; n <= 6; ++n) {
      auto const family = enumerate_bjoin(n, kBounds);
      counts += (n == 1 ? "" : ",") + std::to_string(family.size());
      counts_ok = counts_ok && family.size() == kLatticeCounts[n - 1]
                  && family.size() == oracle::bjoin_classes(n).size();
      for (auto const& s : family) {
        ++total;
        failures += check_lmosaic(nakano(s)).passed() ? 0 : 1;
      }
    }
    double const t = seconds_since(t0);
    return {counts_ok && failures == 0 && t < kNakanoLimit,
            fmt("classes %s (expected 1,1,1,2,5,15), %zu structures, %zu "
                "failures, %.2f s (limit %.0f s)",
                counts.c_str(), total, failures, t, kNakanoLimit)};
  }

  // Reverse construction over every enumerated L-mosaic.
  Outcome ac2() {
    auto const  t0 = Clock::now();
    std::size_t total = 0, failures = 0;
    for (std::size_t n = 1; n <= kMosaicMax; ++n) {
      for (auto const& m : enumerate_lmosaic(n, kBounds)) {
        ++total;
        try {
          failures += check_bjoin(extract_bjoin(m)).passed() ? 0 : 1;
        } catch (...) {
          ++failures;
        }
      }
    }
    double const t = seconds_since(t0);
    return {failures == 0 && t < kMosaicLimit,
            fmt("n <= %zu: %zu L-mosaics, %zu failures, %.2f s (limit %.0f s)",
                kMosaicMax, total, failures, t, kMosaicLimit)};
  }

  // Mutual inverses and equal class counts.
  Outcome ac3() {
    std::size_t semilattices = 0, mosaics = 0, failures = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      for (auto const& s : enumerate_bjoin(n, kBounds)) {
        ++semilattices;
        failures += roundtrip_bjoin(s).identical() ? 0 : 1;
      }
    }
    std::string counts;
    bool        counts_ok = true;
    for (std::size_t n = 1; n <= kMosaicMax; ++n) {
      auto const family = enumerate_lmosaic(n, kBounds);
      counts_ok = counts_ok
                  && family.size() == enumerate_bjoin(n, kBounds).size()
                  && family.size() == kLatticeCounts[n - 1];
      counts += (n == 1 ? "" : ",") + std::to_string(family.size());
      for (auto const& m : family) {
        ++mosaics;
        failures += roundtrip_lmosaic(m).identical() ? 0 : 1;
      }
    }
    return {failures == 0 && counts_ok,
            fmt("%zu semilattice and %zu L-mosaic round trips, %zu failures; "
                "L-mosaic classes %s (expected 1,1,1,2,5,15)",
                semilattices, mosaics, failures, counts.c_str())};
  }

  // Induced order is the join order; lub properties hold.
  Outcome ac4() {
    std::size_t total = 0, failures = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      for (auto const& s : enumerate_bjoin(n, kBounds)) {
        ++total;
        auto const m  = nakano(s);
        auto const o  = induced_order(m);
        bool       ok = lub_properties(m).passed();
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            ok = ok && o.leq(x, y) == (s.join(x, y) == y);
          }
        }
        failures += ok ? 0 : 1;
      }
    }
    return {failures == 0,
            fmt("%zu Nakano structures, %zu failures", total, failures)};
  }

  // Choice contract of the unique join witness.
  Outcome ac5() {
    bool multiple = false;
    try {
      extract_join(full2(), 0, 1);
    } catch (JoinWitnessError const& e) {
      multiple = e.kind() == JoinWitnessError::Kind::multiple_witnesses
                 && e.witnesses() == ElemSet::of({0, 1});
    }
    std::size_t total = 0, failures = 0;
    for (std::size_t n = 1; n <= kMosaicMax; ++n) {
      for (auto const& m : enumerate_lmosaic(n, kBounds)) {
        for (Element x = 0; x < n; ++x) {
          ++total;
          try {
            failures += extract_join(m, x, x) == x ? 0 : 1;
          } catch (...) {
            ++failures;
          }
        }
      }
    }
    return {multiple && failures == 0,
            fmt("full 2-element structure: %s; extract_join(x,x) = x on %zu "
                "elements, %zu failures",
                multiple ? "MultipleWitnesses {0,1}" : "unexpected result",
                total, failures)};
  }

  // Dropping lm4 at n = 2 breaks join definedness; golden report.
  Outcome ac6(std::string const& source_dir) {
    auto const r = ablate(2, LAxiom::lm4, kBounds);
    if (!r) {
      return {false, "no structure found"};
    }
    auto const again  = ablate(2, LAxiom::lm4, kBounds);
    bool const stable = again && again->structure == r->structure;
    bool const golden = to_json(*r).dump(2) + "\n"
                        == read(source_dir + "/tests/golden/ablate_2_lm4.json");
    bool const full   = r->structure == full2();
    bool const breaks = r->breaks("extract_join_defined");
    return {stable && golden && full && breaks,
            fmt("full structure %s, extract_join_defined broken %s, "
                "deterministic %s, golden %s",
                full ? "yes" : "no", breaks ? "yes" : "no",
                stable ? "yes" : "no", golden ? "match" : "MISMATCH")};
  }

  // First non-associative Nakano structure, pinned.
  Outcome ac7() {
    BJoinSemilattice const expected(BinOpTable({{0, 1, 2, 3, 4},
                                                {1, 1, 4, 4, 4},
                                                {2, 4, 2, 3, 4},
                                                {3, 4, 3, 3, 4},
                                                {4, 4, 4, 4, 4}}),
                                    0);
    auto const t0 = Clock::now();
    std::optional<std::pair<BJoinSemilattice, std::array<Element, 3>>> first;
    std::size_t scanned = 0;
    for (std::size_t n = 1; n <= 5 && !first; ++n) {
      for (auto const& s : enumerate_bjoin(n, kBounds)) {
        ++scanned;
        if (auto w = hyper_assoc_witness(nakano(s))) {
          first.emplace(s, *w);
          break;
        }
      }
    }
    double const t  = seconds_since(t0);
    bool const   ok = first && first->first == expected
                    && first->second == std::array<Element, 3>{1, 1, 2};
    if (!first) {
      return {false, fmt("none found in %zu structures, %.2f s", scanned, t)};
    }
    auto const& w = first->second;
    return {ok && t < kAssocScanLimit,
            fmt("size %zu class %s triple (%u,%u,%u) after %zu structures "
                "(pinned: size 5 triple (1,1,2)), %.2f s (limit %.0f s)",
                first->first.size(),
                canonical_form(first->first).short_hash().c_str(), w[0], w[1],
                w[2], scanned, t, kAssocScanLimit)};
  }

  // Serialisation round trips and the diamond Hasse diagram.
  Outcome ac8(std::string const& source_dir) {
    std::vector<Structure> corpus{nakano(diamond()), diamond()};
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& s : enumerate_bjoin(n, kBounds)) {
        corpus.emplace_back(s);
      }
      for (auto const& m : enumerate_lmosaic(n, kBounds)) {
        corpus.emplace_back(m);
      }
    }
    std::size_t failures = 0;
    for (auto const& s : corpus) {
      auto const text = serialize_structure(s);
      try {
        auto const back = parse_structure(text);
        failures += back == s && serialize_structure(back) == text ? 0 : 1;
      } catch (...) {
        ++failures;
      }
    }
    auto const        dot = emit_hasse(diamond());
    std::size_t       edges = 0;
    for (auto p = dot.find(" -> "); p != std::string::npos;
         p = dot.find(" -> ", p + 1)) {
      ++edges;
    }
    bool const golden = dot == read(source_dir + "/tests/golden/diamond.dot");
    return {failures == 0 && golden && edges == 4,
            fmt("%zu documents, %zu round-trip failures; diamond DOT %s with "
                "%zu covering edges",
                corpus.size(), failures, golden ? "matches golden" : "MISMATCH",
                edges)};
  }

}  // namespace

int main(int argc, char** argv) {
  std::string const source_dir = argc > 1 ? argv[1] : HYPERKIT_SOURCE_DIR;

  struct Criterion {
    char const*              id;
    char const*              name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {"AC1", "Nakano construction yields L-mosaics (n <= 6)", ac1},
      {"AC2", "reverse construction yields semilattices", ac2},
      {"AC3", "constructions are mutually inverse", ac3},
      {"AC4", "induced order and least upper bounds", ac4},
      {"AC5", "unique join witness contract", ac5},
      {"AC6", "ablation of lm4", [&] { return ac6(source_dir); }},
      {"AC7", "assoc-scan pinned witness (n <= 5)", ac7},
      {"AC8", "format stability and Hasse output",
       [&] { return ac8(source_dir); }},
  };

  int failed = 0;
  for (auto const& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("%s %s  %s: %s\n", c.id, o.pass ? "PASS" : "FAIL", c.name,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
