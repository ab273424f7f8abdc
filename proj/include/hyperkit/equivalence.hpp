#pragma once

// The two constructions as mutually inverse maps, checked on single
// structures (on the nose, same carrier) and over enumerated families (up to
// isomorphism).

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "canonical.hpp"
#include "core.hpp"
#include "enumeration.hpp"
#include "extraction.hpp"
#include "nakano.hpp"

namespace hyperkit {

  struct Difference {
    std::string          field;  // "labels", "table", "bot", "e" or "rho"
    std::vector<Element> at;     // cell (x, y), rho index (x), or empty
    std::string          expected;
    std::string          actual;

    bool operator==(Difference const&) const = default;
  };

  struct StructureDiff {
    std::vector<Difference> details;

    bool identical() const noexcept {
      return details.empty();
    }
    char const* kind() const noexcept {
      return identical() ? "identical" : "differs";
    }
  };

  namespace detail {
    inline void diff_labels(Carrier const& e, Carrier const& a,
                            StructureDiff& d) {
      if (e.labels() != a.labels()) {
        auto show = [](Carrier const& c) {
          std::string s;
          for (Element x = 0; x < c.size(); ++x) {
            s += (x == 0 ? "" : ",") + c.name(x);
          }
          return c.has_labels() ? s : std::string("(none)");
        };
        d.details.push_back({"labels", {}, show(e), show(a)});
      }
    }
  }  // namespace detail

  inline StructureDiff diff(BJoinSemilattice const& expected,
                            BJoinSemilattice const& actual) {
    if (expected.size() != actual.size()) {
      throw UsageError("diff: structures differ in size");
    }
    StructureDiff d;
    detail::diff_labels(expected.carrier(), actual.carrier(), d);
    if (expected.bot() != actual.bot()) {
      d.details.push_back({"bot",
                           {},
                           std::to_string(expected.bot()),
                           std::to_string(actual.bot())});
    }
    for (Element x = 0; x < expected.size(); ++x) {
      for (Element y = 0; y < expected.size(); ++y) {
        if (expected.join(x, y) != actual.join(x, y)) {
          d.details.push_back({"table",
                               {x, y},
                               std::to_string(expected.join(x, y)),
                               std::to_string(actual.join(x, y))});
        }
      }
    }
    return d;
  }

  inline StructureDiff diff(LMosaic const& expected, LMosaic const& actual) {
    if (expected.size() != actual.size()) {
      throw UsageError("diff: structures differ in size");
    }
    StructureDiff d;
    detail::diff_labels(expected.carrier(), actual.carrier(), d);
    if (expected.e() != actual.e()) {
      d.details.push_back(
          {"e", {}, std::to_string(expected.e()), std::to_string(actual.e())});
    }
    for (Element x = 0; x < expected.size(); ++x) {
      if (expected.rho(x) != actual.rho(x)) {
        d.details.push_back({"rho",
                             {x},
                             std::to_string(expected.rho(x)),
                             std::to_string(actual.rho(x))});
      }
    }
    for (Element x = 0; x < expected.size(); ++x) {
      for (Element y = 0; y < expected.size(); ++y) {
        if (expected.hyper(x, y) != actual.hyper(x, y)) {
          d.details.push_back({"table",
                               {x, y},
                               to_string(expected.hyper(x, y)),
                               to_string(actual.hyper(x, y))});
        }
      }
    }
    return d;
  }

  // S against extract_bjoin(nakano(S)).
  inline StructureDiff roundtrip_bjoin(BJoinSemilattice const& s) {
    return diff(s, extract_bjoin(nakano(s)));
  }

  // M against nakano(extract_bjoin(M)).
  inline StructureDiff roundtrip_lmosaic(LMosaic const& m,
                                         Neutrality     mode = Neutrality::weak) {
    return diff(m, nakano(extract_bjoin(m, mode)));
  }

  // The lexicographically first (x, y, z) with
  //   set_mul(x(+)y, {z}) != set_mul({x}, y(+)z).
  inline std::optional<std::array<Element, 3>>
  hyper_assoc_witness(LMosaic const& m) {
    auto const n = m.size();
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          auto const l = set_mul(m, m.hyper(x, y), ElemSet::singleton(z));
          auto const r = set_mul(m, ElemSet::singleton(x), m.hyper(y, z));
          if (l != r) {
            return std::array<Element, 3>{x, y, z};
          }
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  struct FamilySummary {
    std::size_t size = 0;

    // semilattice side
    std::size_t semilattices        = 0;
    std::size_t nakano_valid        = 0;  // check_lmosaic(nakano(S)) passes
    std::size_t order_valid         = 0;  // induced order = join order, lub ok
    std::size_t bjoin_roundtrips    = 0;  // roundtrip_bjoin identical

    // L-mosaic side, only when size is within the mosaic bound
    bool        lmosaics_enumerated = false;
    std::size_t lmosaics            = 0;
    std::size_t extract_valid       = 0;  // extract_bjoin ok, x v x = x
    std::size_t lmosaic_roundtrips  = 0;  // roundtrip_lmosaic identical
    // nakano is a bijection on isomorphism classes
    std::optional<bool> bijection;

    std::vector<std::string> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  namespace detail {
    inline std::string describe(CanonicalForm const& f) {
      return "class " + f.short_hash();
    }

    inline void verify_semilattice(BJoinSemilattice const& s,
                                   FamilySummary&          sum) {
      auto const tag = describe(canonical_form(s));
      try {
        auto const m      = nakano(s);
        auto const report = check_lmosaic(m);
        if (report.passed()) {
          ++sum.nakano_valid;
        } else {
          sum.failures.push_back(tag + ": nakano fails "
                                 + report.failures().front());
        }
        auto const lub = lub_properties(m);
        if (induced_order(m) == join_order(s) && lub.passed()) {
          ++sum.order_valid;
        } else {
          sum.failures.push_back(tag + ": induced order or lub check fails");
        }
        auto const rt = roundtrip_bjoin(s);
        if (rt.identical()) {
          ++sum.bjoin_roundtrips;
        } else {
          sum.failures.push_back(tag + ": semilattice round trip differs");
        }
      } catch (Error const& e) {
        sum.failures.push_back(tag + ": " + e.what());
      } catch (PostconditionViolation const& e) {
        sum.failures.push_back(tag + ": " + e.what());
      }
    }

    inline void verify_mosaic(LMosaic const& m, FamilySummary& sum) {
      auto const tag = describe(canonical_form(m));
      try {
        auto const s          = extract_bjoin(m);
        bool       idempotent = true;
        for (Element x = 0; x < m.size(); ++x) {
          idempotent = idempotent && extract_join(m, x, x) == x;
        }
        if (idempotent) {
          ++sum.extract_valid;
        } else {
          sum.failures.push_back(tag + ": extract_join(x, x) != x");
        }
        if (roundtrip_lmosaic(m).identical()) {
          ++sum.lmosaic_roundtrips;
        } else {
          sum.failures.push_back(tag + ": L-mosaic round trip differs");
        }
      } catch (Error const& e) {
        sum.failures.push_back(tag + ": " + e.what());
      } catch (PostconditionViolation const& e) {
        sum.failures.push_back(tag + ": " + e.what());
      }
    }
  }  // namespace detail

  // Runs every check of both constructions over all semilattices of size n
  // and, when n is within the mosaic bound, all L-mosaics of size n, then
  // compares the two families by canonical form. Failures are collected,
  // never thrown.
  inline FamilySummary verify_family(std::size_t              n,
                                     EnumerationBounds const& bounds) {
    FamilySummary sum;
    sum.size                = n;
    auto const semilattices = enumerate_bjoin(n, bounds);
    sum.semilattices        = semilattices.size();
    std::set<CanonicalForm> images;
    for (auto const& s : semilattices) {
      detail::verify_semilattice(s, sum);
      try {
        images.insert(canonical_form(nakano(s)));
      } catch (AxiomViolation const&) {
        // already reported
      }
    }
    if (n > bounds.lmosaic) {
      return sum;
    }
    sum.lmosaics_enumerated = true;
    auto const mosaics      = enumerate_lmosaic(n, bounds);
    sum.lmosaics            = mosaics.size();
    std::set<CanonicalForm> found;
    for (auto const& m : mosaics) {
      detail::verify_mosaic(m, sum);
      found.insert(canonical_form(m));
    }
    bool const injective  = images.size() == semilattices.size();
    bool const surjective = images == found;
    sum.bijection         = injective && surjective;
    if (!injective) {
      sum.failures.push_back("nakano identifies non-isomorphic semilattices");
    }
    if (!surjective) {
      sum.failures.push_back(
          "Nakano images and enumerated L-mosaics differ as sets of classes");
    }
    return sum;
  }

  inline FamilySummary verify_family(std::size_t n) {
    return verify_family(n, enumeration_bounds());
  }

}  // namespace hyperkit
