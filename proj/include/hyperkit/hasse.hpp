#pragma once

// Hasse diagrams as Graphviz DOT: covering edges only, drawn upward.

#include <string>
#include <utility>
#include <vector>

#include "axioms.hpp"
#include "extraction.hpp"

namespace hyperkit {

  // Pairs (x, y) with x < y and nothing strictly between, ascending.
  inline std::vector<std::pair<Element, Element>>
  covering_pairs(InducedOrder const& o) {
    auto const n    = o.size();
    auto       less = [&](Element x, Element y) {
      return x != y && o.leq(x, y);
    };
    std::vector<std::pair<Element, Element>> out;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!less(x, y)) {
          continue;
        }
        bool covers = true;
        for (Element z = 0; z < n && covers; ++z) {
          covers = !(less(x, z) && less(z, y));
        }
        if (covers) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

  namespace detail {
    inline std::string dot_id(std::string const& s) {
      std::string out = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out + "\"";
    }

    inline std::string dot(Carrier const& c, InducedOrder const& o) {
      std::string out = "digraph hasse {\n  rankdir=BT;\n";
      for (Element x = 0; x < c.size(); ++x) {
        out += "  " + dot_id(c.name(x)) + ";\n";
      }
      for (auto const& [x, y] : covering_pairs(o)) {
        out += "  " + dot_id(c.name(x)) + " -> " + dot_id(c.name(y)) + ";\n";
      }
      return out + "}\n";
    }
  }  // namespace detail

  // Order x <= y iff x v y = y. Refuses structures failing check_bjoin.
  inline std::string emit_hasse(BJoinSemilattice const& s) {
    auto report = check_bjoin(s);
    if (!report.passed()) {
      throw AxiomViolation("hasse: input is not a bounded join-semilattice",
                           std::move(report));
    }
    return detail::dot(s.carrier(), join_order(s));
  }

  // Induced order x <= y iff x in y(+)y. Refuses structures failing
  // check_lmosaic.
  inline std::string emit_hasse(LMosaic const& m,
                                Neutrality     mode = Neutrality::weak) {
    auto report = check_lmosaic(m, mode);
    if (!report.passed()) {
      throw AxiomViolation("hasse: input is not an L-mosaic",
                           std::move(report));
    }
    return detail::dot(m.carrier(), induced_order(m));
  }

}  // namespace hyperkit
