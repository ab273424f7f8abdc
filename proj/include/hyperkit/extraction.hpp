#pragma once

// Recovering a bounded join-semilattice from an L-mosaic.
//
// The induced order is x <= y iff x in y(+)y. The join x v y is the unique z
// in x(+)y with x, y in z(+)z; uniqueness is exactly axiom lm4, so
// extract_join scans for witnesses afresh on every call and reports 0 or >= 2
// witnesses as invalid input rather than assuming a prior check.

#include <string>
#include <vector>

#include "axioms.hpp"
#include "check_report.hpp"
#include "core.hpp"

namespace hyperkit {

  class InducedOrder {
   public:
    // below[y] = { x : x <= y }
    explicit InducedOrder(std::vector<ElemSet> below)
        : _below(std::move(below)) {
      if (_below.empty() || _below.size() > kMaxCarrier) {
        throw InvalidStructure("order size must be in [1, 64]");
      }
      for (auto const& b : _below) {
        detail::check_subset(b, _below.size());
      }
    }

    std::size_t size() const noexcept {
      return _below.size();
    }
    bool leq(Element x, Element y) const noexcept {
      return _below[y].contains(x);
    }
    ElemSet below(Element y) const noexcept {
      return _below[y];
    }

    bool operator==(InducedOrder const&) const = default;

   private:
    std::vector<ElemSet> _below;
  };

  inline InducedOrder induced_order(LMosaic const& m) {
    std::vector<ElemSet> below;
    below.reserve(m.size());
    for (Element y = 0; y < m.size(); ++y) {
      below.push_back(m.hyper(y, y));
    }
    return InducedOrder(std::move(below));
  }

  // x <= y iff x v y = y
  inline InducedOrder join_order(BJoinSemilattice const& s) {
    std::vector<ElemSet> below(s.size());
    for (Element y = 0; y < s.size(); ++y) {
      for (Element x = 0; x < s.size(); ++x) {
        if (s.join(x, y) == y) {
          below[y].insert(x);
        }
      }
    }
    return InducedOrder(std::move(below));
  }

  // Verdicts: reflexive, antisymmetric, transitive.
  inline CheckReport check_partial_order(InducedOrder const& o) {
    auto const  n = o.size();
    CheckReport r;
    r.add("reflexive", detail::first_failing_1(
                           n, [&](Element x) { return o.leq(x, x); }));
    r.add("antisymmetric",
          detail::first_failing_2(n, [&](Element x, Element y) {
            return x == y || !(o.leq(x, y) && o.leq(y, x));
          }));
    r.add("transitive",
          detail::first_failing_3(n, [&](Element x, Element y, Element z) {
            return !(o.leq(x, y) && o.leq(y, z)) || o.leq(x, z);
          }));
    return r;
  }

  // Thrown by extract_join when (x, y) does not have exactly one witness.
  class JoinWitnessError : public Error {
   public:
    enum class Kind { zero_witnesses, multiple_witnesses };

    JoinWitnessError(Element x, Element y, ElemSet witnesses)
        : Error(describe(x, y, witnesses)),
          _x(x),
          _y(y),
          _witnesses(witnesses) {}

    Kind kind() const noexcept {
      return _witnesses.empty() ? Kind::zero_witnesses
                                : Kind::multiple_witnesses;
    }
    Element x() const noexcept {
      return _x;
    }
    Element y() const noexcept {
      return _y;
    }
    ElemSet witnesses() const noexcept {
      return _witnesses;
    }

   private:
    static std::string describe(Element x, Element y, ElemSet w) {
      auto const at = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      if (w.empty()) {
        return "ZeroWitnesses at " + at;
      }
      return "MultipleWitnesses at " + at + ": " + to_string(w);
    }

    Element _x;
    Element _y;
    ElemSet _witnesses;
  };

  // { z in x(+)y : x in z(+)z and y in z(+)z }, ascending.
  inline ElemSet join_witnesses(LMosaic const& m, Element x, Element y) {
    detail::check_index(x, m.size(), "left");
    detail::check_index(y, m.size(), "right");
    return predicates::lm4_candidates(m, x, y);
  }

  inline Element extract_join(LMosaic const& m, Element x, Element y) {
    auto const w = join_witnesses(m, x, y);
    if (w.size() != 1) {
      throw JoinWitnessError(x, y, w);
    }
    return w.front();
  }

  // The bounded join-semilattice (A, extract_join, e). Refuses inputs that
  // fail check_lmosaic; throws PostconditionViolation if the extracted table
  // is not itself a bounded join-semilattice.
  inline BJoinSemilattice extract_bjoin(LMosaic const& m,
                                        Neutrality mode = Neutrality::weak) {
    auto report = check_lmosaic(m, mode);
    if (!report.passed()) {
      throw AxiomViolation("extract: input is not an L-mosaic",
                           std::move(report));
    }
    auto join = BinOpTable::from_function(
        m.size(), [&](Element x, Element y) { return extract_join(m, x, y); });
    BJoinSemilattice s(m.carrier(), std::move(join), m.e());
    auto const       post = check_bjoin(s);
    if (!post.passed()) {
      throw PostconditionViolation(
          "extracted join is not a bounded join-semilattice:\n"
          + to_string(post));
    }
    return s;
  }

  // Verdicts ub_left (x <= x v y), ub_right (y <= x v y) and least
  // (x <= t and y <= t imply x v y <= t) in the induced order, with v given
  // by extract_join. JoinWitnessError propagates.
  inline CheckReport lub_properties(LMosaic const& m) {
    auto const n     = m.size();
    auto const order = induced_order(m);
    auto const join  = BinOpTable::from_function(
        n, [&](Element x, Element y) { return extract_join(m, x, y); });
    CheckReport r;
    r.add("ub_left", detail::first_failing_2(n, [&](Element x, Element y) {
            return order.leq(x, join(x, y));
          }));
    r.add("ub_right", detail::first_failing_2(n, [&](Element x, Element y) {
            return order.leq(y, join(x, y));
          }));
    r.add("least",
          detail::first_failing_3(n, [&](Element x, Element y, Element t) {
            return !(order.leq(x, t) && order.leq(y, t))
                   || order.leq(join(x, y), t);
          }));
    return r;
  }

}  // namespace hyperkit
