#pragma once

#include <string>
#include <vector>

#include <hyperkit/hyperkit.hpp>

#include "oracles.hpp"

namespace fixtures {

  using namespace hyperkit;

  // 0 < 1 < ... < n-1
  inline BJoinSemilattice chain(std::size_t n) {
    return BJoinSemilattice(
        BinOpTable::from_function(n, [](Element x, Element y) {
          return std::max(x, y);
        }),
        0);
  }

  // bot = 0, atoms a = 1 and b = 2, top = 3
  inline BJoinSemilattice diamond() {
    return BJoinSemilattice(
        Carrier(4, {"bot", "a", "b", "top"}),
        BinOpTable({{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}}),
        0);
  }

  inline BJoinSemilattice point() {
    return BJoinSemilattice(BinOpTable(1, {0}), 0);
  }

  // Every cell is the whole carrier; e = 0, rho = identity.
  inline LMosaic full(std::size_t n) {
    return LMosaic(HyperOpTable::from_function(
                       n, [n](Element, Element) { return ElemSet::full(n); }),
                   0);
  }

  inline BJoinSemilattice from_oracle(oracle::Table const& j, int bot = 0) {
    return BJoinSemilattice(
        BinOpTable::from_function(j.size(),
                                  [&](Element x, Element y) {
                                    return static_cast<Element>(j[x][y]);
                                  }),
        static_cast<Element>(bot));
  }

  inline LMosaic from_oracle(oracle::HTable const& h, int e,
                             std::vector<int> const& rho) {
    std::vector<Element> r(rho.begin(), rho.end());
    return LMosaic(Carrier(h.size()),
                   HyperOpTable::from_function(h.size(),
                                               [&](Element x, Element y) {
                                                 return ElemSet::from_bits(
                                                     h[x][y]);
                                               }),
                   static_cast<Element>(e),
                   r);
  }

  inline oracle::Table to_oracle(BJoinSemilattice const& s) {
    oracle::Table j(s.size(), std::vector<int>(s.size()));
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        j[x][y] = static_cast<int>(s.join(x, y));
      }
    }
    return j;
  }

  inline oracle::HTable to_oracle(LMosaic const& m) {
    oracle::HTable h(m.size(), std::vector<unsigned>(m.size()));
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        h[x][y] = static_cast<unsigned>(m.hyper(x, y).bits());
      }
    }
    return h;
  }

  inline std::vector<int> rho_of(LMosaic const& m) {
    return {m.rho().begin(), m.rho().end()};
  }

  inline std::string source_dir() {
    return HYPERKIT_SOURCE_DIR;
  }

}  // namespace fixtures
