#pragma once

// Axiom ablation: structures satisfying every L-mosaic axiom but one, and the
// downstream properties of the join extraction that then break.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "check_report.hpp"
#include "enumeration.hpp"
#include "extraction.hpp"
#include "nakano.hpp"

namespace hyperkit {

  struct BrokenProperty {
    // order_reflexive, order_antisymmetric, order_transitive,
    // extract_join_defined, lub_ub_left, lub_ub_right, lub_least,
    // roundtrip_identity
    std::string property;
    Witness     witness;
  };

  struct AblationResult {
    LAxiom                      dropped;
    LMosaic                     structure;
    std::vector<BrokenProperty> broken;

    bool breaks(std::string const& property) const {
      for (auto const& b : broken) {
        if (b.property == property) {
          return true;
        }
      }
      return false;
    }
  };

  // Evaluates every downstream property on m and returns those that fail,
  // each with the tuple at which it fails. lub properties are only evaluated
  // when extract_join is defined everywhere.
  inline std::vector<BrokenProperty> downstream_failures(LMosaic const& m) {
    std::vector<BrokenProperty> out;
    auto const order = check_partial_order(induced_order(m));
    for (auto const& v : order.verdicts()) {
      if (!v.pass()) {
        out.push_back({"order_" + v.axiom, *v.witness});
      }
    }

    auto const              n = m.size();
    std::optional<Witness>  undefined;
    std::vector<Element>    cells(n * n);
    for (Element x = 0; x < n && !undefined; ++x) {
      for (Element y = 0; y < n && !undefined; ++y) {
        auto const w = join_witnesses(m, x, y);
        if (w.size() != 1) {
          undefined = Witness{{x, y}, {w}};
        } else {
          cells[x * n + y] = w.front();
        }
      }
    }
    if (undefined) {
      out.push_back({"extract_join_defined", *undefined});
      // no join table, so nothing to round-trip through
      out.push_back({"roundtrip_identity", *undefined});
      return out;
    }

    auto const lub = lub_properties(m);
    for (auto const& v : lub.verdicts()) {
      if (!v.pass()) {
        out.push_back({"lub_" + v.axiom, *v.witness});
      }
    }

    BJoinSemilattice s(m.carrier(), BinOpTable(n, cells), m.e());
    auto const       bjoin = check_bjoin(s);
    if (!bjoin.passed()) {
      auto const* v = bjoin.find(bjoin.failures().front());
      out.push_back({"roundtrip_identity", *v->witness});
      return out;
    }
    auto const back = nakano(s);
    for (Element x = 0; x < n; ++x) {
      if (back.rho(x) != m.rho(x)) {
        out.push_back({"roundtrip_identity", Witness{{x}, {}}});
        return out;
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (back.hyper(x, y) != m.hyper(x, y)) {
          out.push_back({"roundtrip_identity",
                         Witness{{x, y}, {m.hyper(x, y), back.hyper(x, y)}}});
          return out;
        }
      }
    }
    return out;
  }

  namespace detail {
    inline AblationResult make_ablation(LAxiom dropped, LMosaic m) {
      auto broken = downstream_failures(m);
      AblationResult r{dropped, std::move(m), std::move(broken)};
      if (dropped == LAxiom::lm4 && !r.breaks("extract_join_defined")
          && !r.breaks("lub_least")) {
        throw PostconditionViolation(
            "structure violating lm4 keeps a well-defined least join");
      }
      return r;
    }
  }  // namespace detail

  // The first structure of size n, in search order, that passes every
  // L-mosaic verdict except `dropped`, which it fails. nullopt if none.
  inline std::optional<AblationResult>
  ablate(std::size_t n, LAxiom dropped, EnumerationBounds const& bounds) {
    detail::check_bound(n, bounds.lmosaic, "ablation");
    std::optional<LMosaic> found;
    search_lmosaic(n, {false, dropped}, [&](LMosaic const& m) {
      found = m;
      return false;
    });
    if (!found) {
      return std::nullopt;
    }
    return detail::make_ablation(dropped, std::move(*found));
  }

  inline std::optional<AblationResult> ablate(std::size_t n, LAxiom dropped) {
    return ablate(n, dropped, enumeration_bounds());
  }

  // Every such structure up to isomorphism, as canonical representatives
  // sorted by canonical form.
  inline std::vector<AblationResult>
  ablate_all(std::size_t n, LAxiom dropped, EnumerationBounds const& bounds) {
    detail::check_bound(n, bounds.lmosaic, "ablation");
    std::map<CanonicalForm, LMosaic> classes;
    search_lmosaic(n, {false, dropped}, [&](LMosaic const& m) {
      auto [rep, form] = canonical_representative(m);
      classes.try_emplace(std::move(form), std::move(rep));
      return true;
    });
    std::vector<AblationResult> out;
    for (auto& [form, m] : classes) {
      out.push_back(detail::make_ablation(dropped, std::move(m)));
    }
    return out;
  }

  inline std::vector<AblationResult> ablate_all(std::size_t n, LAxiom dropped) {
    return ablate_all(n, dropped, enumeration_bounds());
  }

}  // namespace hyperkit
