#pragma once

// Axiom checkers for bounded join-semilattices, mosaics and L-mosaics.
//
// Every check is a brute-force scan in lexicographic tuple order, so the
// witness of a failing axiom is always the lexicographically first failing
// tuple. The per-instance predicates in `predicates` are the single source of
// truth for what each axiom says; the checkers and replay() both call them.
//
// The base mosaic axioms are implemented as:
//   neutral         x in e(+)x and x in x(+)e                (weak, default)
//   neutral_strict  e(+)x = {x} = x(+)e
//   reversibility   z in x(+)y  implies  x in z(+)rho(y) and y in rho(x)(+)z

#include <string>

#include "check_report.hpp"
#include "core.hpp"

namespace hyperkit {

  enum class Neutrality { weak, strict };

  namespace predicates {

    // Bounded join-semilattice
    inline bool assoc_at(BJoinSemilattice const& s, Element x, Element y,
                         Element z) {
      return s.join(s.join(x, y), z) == s.join(x, s.join(y, z));
    }
    inline bool comm_at(BJoinSemilattice const& s, Element x, Element y) {
      return s.join(x, y) == s.join(y, x);
    }
    inline bool idem_at(BJoinSemilattice const& s, Element x) {
      return s.join(x, x) == x;
    }
    inline bool bot_left_at(BJoinSemilattice const& s, Element x) {
      return s.join(s.bot(), x) == x;
    }
    inline bool bot_right_at(BJoinSemilattice const& s, Element x) {
      return s.join(x, s.bot()) == x;
    }

    // Mosaic
    inline bool neutral_at(LMosaic const& m, Element x) {
      return m.hyper(m.e(), x).contains(x) && m.hyper(x, m.e()).contains(x);
    }
    inline bool neutral_strict_at(LMosaic const& m, Element x) {
      auto const sx = ElemSet::singleton(x);
      return m.hyper(m.e(), x) == sx && m.hyper(x, m.e()) == sx;
    }
    inline bool reversible_at(LMosaic const& m, Element x, Element y,
                              Element z) {
      if (!m.hyper(x, y).contains(z)) {
        return true;
      }
      return m.hyper(z, m.rho(y)).contains(x)
             && m.hyper(m.rho(x), z).contains(y);
    }

    // L-mosaic
    inline bool comm_at(LMosaic const& m, Element x, Element y) {
      return m.hyper(x, y) == m.hyper(y, x);
    }
    inline bool lm1_e_at(LMosaic const& m, Element x) {
      return m.hyper(x, x).contains(m.e());
    }
    inline bool lm1_id_at(LMosaic const& m, Element x) {
      return m.hyper(x, x).contains(x);
    }
    inline bool lm2_at(LMosaic const& m, Element x) {
      auto const d = m.hyper(x, x);
      return set_mul(m, d, d) == d;
    }
    // Elements of right_mul(x, x(+)y) & left_mul(x(+)y, y) outside x(+)y.
    inline ElemSet lm3_excess(LMosaic const& m, Element x, Element y) {
      auto const s = m.hyper(x, y);
      return (right_mul(m, x, s) & left_mul(m, s, y)) - s;
    }
    inline bool lm3_at(LMosaic const& m, Element x, Element y) {
      return lm3_excess(m, x, y).empty();
    }
    // All z in x(+)y with x, y in z(+)z.
    inline ElemSet lm4_candidates(LMosaic const& m, Element x, Element y) {
      ElemSet out;
      for (Element z : m.hyper(x, y)) {
        auto const d = m.hyper(z, z);
        if (d.contains(x) && d.contains(y)) {
          out.insert(z);
        }
      }
      return out;
    }
    inline bool lm4_at(LMosaic const& m, Element x, Element y) {
      return lm4_candidates(m, x, y).size() == 1;
    }

  }  // namespace predicates

  ////////////////////////////////////////////////////////////////////////
  // Checkers
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    template <typename P>
    std::optional<Witness> first_failing_1(std::size_t n, P&& holds) {
      for (Element x = 0; x < n; ++x) {
        if (!holds(x)) {
          return Witness{{x}, {}};
        }
      }
      return std::nullopt;
    }
    template <typename P>
    std::optional<Witness> first_failing_2(std::size_t n, P&& holds) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (!holds(x, y)) {
            return Witness{{x, y}, {}};
          }
        }
      }
      return std::nullopt;
    }
    template <typename P>
    std::optional<Witness> first_failing_3(std::size_t n, P&& holds) {
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          for (Element z = 0; z < n; ++z) {
            if (!holds(x, y, z)) {
              return Witness{{x, y, z}, {}};
            }
          }
        }
      }
      return std::nullopt;
    }
  }  // namespace detail

  // Verdicts, in order: closed, assoc, comm, idem, bot_in, bot_left,
  // bot_right. closed and bot_in hold for every shape-valid structure.
  inline CheckReport check_bjoin(BJoinSemilattice const& s) {
    using namespace predicates;
    auto const  n = s.size();
    CheckReport r;
    r.add("closed", std::nullopt);
    r.add("assoc", detail::first_failing_3(n, [&](Element x, Element y, Element z) {
            return assoc_at(s, x, y, z);
          }));
    r.add("comm", detail::first_failing_2(n, [&](Element x, Element y) {
            return comm_at(s, x, y);
          }));
    r.add("idem",
          detail::first_failing_1(n, [&](Element x) { return idem_at(s, x); }));
    r.add("bot_in", std::nullopt);
    r.add("bot_left", detail::first_failing_1(
                          n, [&](Element x) { return bot_left_at(s, x); }));
    r.add("bot_right", detail::first_failing_1(
                           n, [&](Element x) { return bot_right_at(s, x); }));
    return r;
  }

  // Verdicts: nonempty, neutral | neutral_strict, reversibility.
  inline CheckReport check_mosaic(LMosaic const& m,
                                  Neutrality      mode = Neutrality::weak) {
    using namespace predicates;
    auto const  n = m.size();
    CheckReport r;
    r.add("nonempty", detail::first_failing_2(n, [&](Element x, Element y) {
            return !m.hyper(x, y).empty();
          }));
    if (mode == Neutrality::weak) {
      r.add("neutral", detail::first_failing_1(
                           n, [&](Element x) { return neutral_at(m, x); }));
    } else {
      r.add("neutral_strict", detail::first_failing_1(n, [&](Element x) {
              return neutral_strict_at(m, x);
            }));
    }
    r.add("reversibility",
          detail::first_failing_3(n, [&](Element x, Element y, Element z) {
            return reversible_at(m, x, y, z);
          }));
    return r;
  }

  // check_mosaic verdicts followed by comm, lm1_e, lm1_id, lm2, lm3, lm4.
  // lm2 witnesses carry set_mul(x(+)x, x(+)x); lm3 witnesses carry the
  // offending elements; lm4 witnesses carry the full candidate set.
  inline CheckReport check_lmosaic(LMosaic const& m,
                                   Neutrality      mode = Neutrality::weak) {
    using namespace predicates;
    auto const  n = m.size();
    CheckReport r = check_mosaic(m, mode);
    r.add("comm", detail::first_failing_2(n, [&](Element x, Element y) {
            return comm_at(m, x, y);
          }));
    r.add("lm1_e",
          detail::first_failing_1(n, [&](Element x) { return lm1_e_at(m, x); }));
    r.add("lm1_id", detail::first_failing_1(
                        n, [&](Element x) { return lm1_id_at(m, x); }));

    std::optional<Witness> lm2;
    for (Element x = 0; x < n && !lm2; ++x) {
      auto const d = m.hyper(x, x);
      auto const p = set_mul(m, d, d);
      if (p != d) {
        lm2 = Witness{{x}, {p}};
      }
    }
    r.add("lm2", lm2);

    std::optional<Witness> lm3;
    for (Element x = 0; x < n && !lm3; ++x) {
      for (Element y = 0; y < n && !lm3; ++y) {
        auto const extra = lm3_excess(m, x, y);
        if (!extra.empty()) {
          lm3 = Witness{{x, y}, {extra}};
        }
      }
    }
    r.add("lm3", lm3);

    std::optional<Witness> lm4;
    for (Element x = 0; x < n && !lm4; ++x) {
      for (Element y = 0; y < n && !lm4; ++y) {
        auto const c = lm4_candidates(m, x, y);
        if (c.size() != 1) {
          lm4 = Witness{{x, y}, {c}};
        }
      }
    }
    r.add("lm4", lm4);
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay: re-evaluate a named axiom at a witness tuple.
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline void require_arity(Witness const& w, std::size_t k,
                              std::string const& axiom) {
      if (w.elements.size() != k) {
        throw UsageError("axiom " + axiom + " expects a witness of arity "
                         + std::to_string(k));
      }
    }
  }  // namespace detail

  // Whether the named axiom holds at the given witness.
  inline bool replay(BJoinSemilattice const& s, std::string const& axiom,
                     Witness const& w) {
    using namespace predicates;
    auto const& e = w.elements;
    if (axiom == "closed" || axiom == "bot_in") {
      return true;
    }
    if (axiom == "assoc") {
      detail::require_arity(w, 3, axiom);
      return assoc_at(s, e[0], e[1], e[2]);
    }
    if (axiom == "comm") {
      detail::require_arity(w, 2, axiom);
      return comm_at(s, e[0], e[1]);
    }
    detail::require_arity(w, 1, axiom);
    if (axiom == "idem") {
      return idem_at(s, e[0]);
    }
    if (axiom == "bot_left") {
      return bot_left_at(s, e[0]);
    }
    if (axiom == "bot_right") {
      return bot_right_at(s, e[0]);
    }
    throw UsageError("unknown semilattice axiom \"" + axiom + "\"");
  }

  inline bool replay(LMosaic const& m, std::string const& axiom,
                     Witness const& w) {
    using namespace predicates;
    auto const& e = w.elements;
    if (axiom == "nonempty") {
      detail::require_arity(w, 2, axiom);
      return !m.hyper(e[0], e[1]).empty();
    }
    if (axiom == "reversibility") {
      detail::require_arity(w, 3, axiom);
      return reversible_at(m, e[0], e[1], e[2]);
    }
    if (axiom == "comm" || axiom == "lm3" || axiom == "lm4") {
      detail::require_arity(w, 2, axiom);
      if (axiom == "comm") {
        return comm_at(m, e[0], e[1]);
      }
      return axiom == "lm3" ? lm3_at(m, e[0], e[1]) : lm4_at(m, e[0], e[1]);
    }
    detail::require_arity(w, 1, axiom);
    if (axiom == "neutral") {
      return neutral_at(m, e[0]);
    }
    if (axiom == "neutral_strict") {
      return neutral_strict_at(m, e[0]);
    }
    if (axiom == "lm1_e") {
      return lm1_e_at(m, e[0]);
    }
    if (axiom == "lm1_id") {
      return lm1_id_at(m, e[0]);
    }
    if (axiom == "lm2") {
      return lm2_at(m, e[0]);
    }
    throw UsageError("unknown L-mosaic axiom \"" + axiom + "\"");
  }

}  // namespace hyperkit
