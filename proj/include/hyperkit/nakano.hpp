#pragma once

#include "axioms.hpp"
#include "core.hpp"

namespace hyperkit {

  // x (+) y = { z : x v y = x v z  and  x v y = z v y }, e = bot, rho = id.
  // Refuses (AxiomViolation) when s is not a bounded join-semilattice.
  inline LMosaic nakano(BJoinSemilattice const& s) {
    auto report = check_bjoin(s);
    if (!report.passed()) {
      throw AxiomViolation("nakano: input is not a bounded join-semilattice",
                           std::move(report));
    }
    auto const n   = s.size();
    auto       hyp = HyperOpTable::from_function(n, [&](Element x, Element y) {
      auto const xy = s.join(x, y);
      ElemSet    out;
      for (Element z = 0; z < n; ++z) {
        if (s.join(x, z) == xy && s.join(z, y) == xy) {
          out.insert(z);
        }
      }
      return out;
    });
    return LMosaic(s.carrier(), std::move(hyp), s.bot(),
                   LMosaic::identity_map(n));
  }

}  // namespace hyperkit
