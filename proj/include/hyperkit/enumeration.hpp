#pragma once

// Exhaustive generation of bounded join-semilattices and L-mosaics up to
// isomorphism.
//
// Both searches pin the distinguished element (bot / e) to index 0, assign
// table cells in a fixed order, propagate what each axiom forces, prune on
// every axiom instance that is already decided by the assigned cells, and
// finally deduplicate complete tables by canonical form. Output is sorted by
// canonical form, so it is deterministic.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "canonical.hpp"
#include "core.hpp"

namespace hyperkit {

  struct EnumerationBounds {
    std::size_t bjoin   = 7;
    std::size_t lmosaic = 4;
  };

  // Defaults, or both bounds set to $HYPERKIT_MAX_N when that is set.
  inline EnumerationBounds enumeration_bounds() {
    EnumerationBounds b;
    char const*       env = std::getenv("HYPERKIT_MAX_N");
    if (env == nullptr || *env == '\0') {
      return b;
    }
    char*      end   = nullptr;
    auto const value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0) {
      throw UsageError("HYPERKIT_MAX_N must be a positive integer, found \""
                       + std::string(env) + "\"");
    }
    if (value > kMaxCarrier) {
      throw UsageError("HYPERKIT_MAX_N must not exceed "
                       + std::to_string(kMaxCarrier));
    }
    b.bjoin = b.lmosaic = static_cast<std::size_t>(value);
    return b;
  }

  namespace detail {
    inline void check_bound(std::size_t n, std::size_t bound,
                            char const* what) {
      if (n == 0 || n > bound) {
        throw UsageError(std::string(what) + " size must be in [1, "
                         + std::to_string(bound) + "], found "
                         + std::to_string(n));
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Bounded join-semilattices
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Backtracking over the join cells x v y with 0 < x < y < n. The bot row
    // and column and the diagonal are forced; commutativity mirrors each
    // assignment. Symmetry breaking: the labelling is taken to be a linear
    // extension of the order, so x v y ranges over [y, n). Every finite poset
    // has a linear extension, so no isomorphism class is lost.
    class BJoinSearch {
     public:
      explicit BJoinSearch(std::size_t n) : _n(n), _t(n * n, kUnset) {
        for (Element x = 0; x < n; ++x) {
          set(0, x, x);
          set(x, x, x);
        }
        for (Element x = 1; x < n; ++x) {
          for (Element y = x + 1; y < n; ++y) {
            _cells.emplace_back(x, y);
          }
        }
      }

      template <typename F>
      void run(F&& emit) {
        recurse(0, emit);
      }

     private:
      static constexpr Element kUnset = ~Element{0};

      Element get(Element x, Element y) const {
        return _t[x * _n + y];
      }
      void set(Element x, Element y, Element v) {
        _t[x * _n + y] = v;
        _t[y * _n + x] = v;
      }

      // Associativity over every triple whose four lookups are assigned.
      bool consistent() const {
        for (Element a = 0; a < _n; ++a) {
          for (Element b = 0; b < _n; ++b) {
            auto const ab = get(a, b);
            if (ab == kUnset) {
              continue;
            }
            for (Element c = 0; c < _n; ++c) {
              auto const bc = get(b, c);
              if (bc == kUnset) {
                continue;
              }
              auto const l = get(ab, c);
              auto const r = get(a, bc);
              if (l != kUnset && r != kUnset && l != r) {
                return false;
              }
            }
          }
        }
        return true;
      }

      template <typename F>
      void recurse(std::size_t k, F& emit) {
        if (k == _cells.size()) {
          emit(BJoinSemilattice(BinOpTable(_n, _t), 0));
          return;
        }
        auto const [x, y] = _cells[k];
        for (Element v = y; v < _n; ++v) {
          set(x, y, v);
          if (consistent()) {
            recurse(k + 1, emit);
          }
        }
        set(x, y, kUnset);
      }

      std::size_t                             _n;
      std::vector<Element>                    _t;
      std::vector<std::pair<Element, Element>> _cells;
    };

  }  // namespace detail

  // Calls emit(S) for every labelled bounded join-semilattice of size n with
  // bot = 0 whose labelling is a linear extension of its order. Every
  // isomorphism class occurs at least once.
  template <typename F>
  void search_bjoin(std::size_t n, F&& emit) {
    detail::check_bound(n, kMaxCarrier, "semilattice");
    detail::BJoinSearch(n).run(emit);
  }

  // One canonical representative per isomorphism class, sorted by canonical
  // form.
  inline std::vector<BJoinSemilattice>
  enumerate_bjoin(std::size_t n, EnumerationBounds const& bounds) {
    detail::check_bound(n, bounds.bjoin, "semilattice enumeration");
    std::map<CanonicalForm, BJoinSemilattice> classes;
    search_bjoin(n, [&](BJoinSemilattice const& s) {
      auto [rep, form] = canonical_representative(s);
      classes.try_emplace(std::move(form), std::move(rep));
    });
    std::vector<BJoinSemilattice> out;
    out.reserve(classes.size());
    for (auto& [form, s] : classes) {
      out.push_back(std::move(s));
    }
    return out;
  }

  inline std::vector<BJoinSemilattice> enumerate_bjoin(std::size_t n) {
    return enumerate_bjoin(n, enumeration_bounds());
  }

  ////////////////////////////////////////////////////////////////////////
  // L-mosaics
  ////////////////////////////////////////////////////////////////////////

  // The axioms the L-mosaic search propagates; each can be dropped for
  // ablation. Weak neutrality is always enforced.
  enum class LAxiom : std::uint8_t {
    comm,
    lm1_e,
    lm1_id,
    lm2,
    lm3,
    lm4,
    reversibility
  };

  inline constexpr std::array<LAxiom, 7> kAllLAxioms = {LAxiom::comm,
                                                        LAxiom::lm1_e,
                                                        LAxiom::lm1_id,
                                                        LAxiom::lm2,
                                                        LAxiom::lm3,
                                                        LAxiom::lm4,
                                                        LAxiom::reversibility};

  inline std::string name(LAxiom a) {
    switch (a) {
      case LAxiom::comm:
        return "comm";
      case LAxiom::lm1_e:
        return "lm1_e";
      case LAxiom::lm1_id:
        return "lm1_id";
      case LAxiom::lm2:
        return "lm2";
      case LAxiom::lm3:
        return "lm3";
      case LAxiom::lm4:
        return "lm4";
      case LAxiom::reversibility:
        return "reversibility";
    }
    return "?";
  }

  inline LAxiom parse_axiom(std::string const& s) {
    for (auto a : kAllLAxioms) {
      if (name(a) == s) {
        return a;
      }
    }
    throw UsageError("unknown axiom \"" + s
                     + "\" (expected one of comm, lm1_e, lm1_id, lm2, lm3, "
                       "lm4, reversibility)");
  }

  struct MosaicSearchOptions {
    // Search every involution rho, not only the identity.
    bool general_rho = false;
    // Disable this axiom's propagation and keep only structures that
    // violate it.
    std::optional<LAxiom> dropped;
  };

  namespace detail {

    // Every involution of {0..n-1}, in lexicographic order (identity first).
    inline std::vector<std::vector<Element>> involutions(std::size_t n) {
      std::vector<std::vector<Element>> out;
      std::vector<Element>              rho(n, ~Element{0});
      std::function<void(Element)>      go = [&](Element x) {
        while (x < n && rho[x] != ~Element{0}) {
          ++x;
        }
        if (x == n) {
          out.push_back(rho);
          return;
        }
        for (Element y = x; y < n; ++y) {
          if (rho[y] != ~Element{0}) {
            continue;
          }
          rho[x] = y;
          rho[y] = x;
          go(x + 1);
          rho[x] = rho[y] = ~Element{0};
        }
      };
      go(0);
      std::sort(out.begin(), out.end());
      return out;
    }

    // Cell-by-cell assignment of nonempty subsets to the hyperoperation
    // table with e = 0. Diagonal cells come first so the induced order is
    // known before any off-diagonal cell is chosen, which makes lm4 a local
    // test on each off-diagonal cell. With comm enforced only the upper
    // triangle is searched and mirrored. Candidate subsets are tried by
    // ascending cardinality, then ascending bit pattern.
    //
    // Every pruning test below is monotone: the sets involved can only grow
    // as more cells are assigned, so a violation seen on a partial table
    // persists in every completion.
    class MosaicSearch {
     public:
      MosaicSearch(std::size_t n, std::vector<Element> rho,
                   std::optional<LAxiom> dropped)
          : _n(n), _rho(std::move(rho)), _dropped(dropped), _t(n * n) {
        _comm = enforced(LAxiom::comm);
        for (Element x = 0; x < n; ++x) {
          _cells.emplace_back(x, x);
        }
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            if (x != y && (!_comm || x < y)) {
              _cells.emplace_back(x, y);
            }
          }
        }
        for (std::uint64_t b = 1; b < (std::uint64_t{1} << n); ++b) {
          _subsets.push_back(ElemSet::from_bits(b));
        }
        std::stable_sort(
            _subsets.begin(), _subsets.end(), [](ElemSet a, ElemSet b) {
              return a.size() < b.size();
            });
      }

      // visit(M) returns false to stop the search.
      template <typename F>
      bool run(F&& visit) {
        return recurse(0, visit);
      }

     private:
      bool enforced(LAxiom a) const {
        return !_dropped || *_dropped != a;
      }
      ElemSet get(Element x, Element y) const {
        return _t[x * _n + y];
      }
      bool is_set(Element x, Element y) const {
        return !get(x, y).empty();
      }
      void set(Element x, Element y, ElemSet v) {
        _t[x * _n + y] = v;
        if (_comm) {
          _t[y * _n + x] = v;
        }
      }

      ElemSet required(Element x, Element y) const {
        ElemSet req;
        // weak neutrality, both orientations when mirrored
        if (x == 0) {
          req.insert(y);
        }
        if (y == 0) {
          req.insert(x);
        }
        if (x == y) {
          if (enforced(LAxiom::lm1_e)) {
            req.insert(0);
          }
          if (enforced(LAxiom::lm1_id)) {
            req.insert(x);
          }
        }
        return req;
      }

      bool reversibility_ok() const {
        for (Element x = 0; x < _n; ++x) {
          for (Element y = 0; y < _n; ++y) {
            for (Element z : get(x, y)) {
              auto const a = get(z, _rho[y]);
              if (!a.empty() && !a.contains(x)) {
                return false;
              }
              auto const b = get(_rho[x], z);
              if (!b.empty() && !b.contains(y)) {
                return false;
              }
            }
          }
        }
        return true;
      }

      bool lm2_ok() const {
        for (Element x = 0; x < _n; ++x) {
          auto const d = get(x, x);
          if (d.empty()) {
            continue;
          }
          ElemSet prod;
          bool    complete = true;
          for (Element a : d) {
            for (Element b : d) {
              auto const c = get(a, b);
              complete     = complete && !c.empty();
              prod |= c;
            }
          }
          if (!prod.subset_of(d) || (complete && prod != d)) {
            return false;
          }
        }
        return true;
      }

      bool lm3_ok() const {
        for (Element x = 0; x < _n; ++x) {
          for (Element y = 0; y < _n; ++y) {
            auto const s = get(x, y);
            if (s.empty()) {
              continue;
            }
            ElemSet right, left;
            for (Element w : s) {
              right |= get(x, w);
              left |= get(w, y);
            }
            if (!((right & left) - s).empty()) {
              return false;
            }
          }
        }
        return true;
      }

      bool lm4_ok() const {
        for (Element x = 0; x < _n; ++x) {
          for (Element y = 0; y < _n; ++y) {
            std::size_t count   = 0;
            bool        decided = true;
            for (Element z : get(x, y)) {
              auto const d = get(z, z);
              if (d.empty()) {
                decided = false;
              } else if (d.contains(x) && d.contains(y)) {
                ++count;
              }
            }
            if (count > 1 || (decided && is_set(x, y) && count != 1)) {
              return false;
            }
          }
        }
        return true;
      }

      bool consistent() const {
        return (!enforced(LAxiom::reversibility) || reversibility_ok())
               && (!enforced(LAxiom::lm4) || lm4_ok())
               && (!enforced(LAxiom::lm2) || lm2_ok())
               && (!enforced(LAxiom::lm3) || lm3_ok());
      }

      // Complete tables: every enforced axiom holds (pruning is exact on a
      // full table) and the dropped one, if any, must fail.
      bool accept(LMosaic const& m) const {
        auto const report = check_lmosaic(m);
        for (auto const& v : report.verdicts()) {
          bool const is_dropped = _dropped && v.axiom == name(*_dropped);
          if (v.pass() == is_dropped) {
            return false;
          }
        }
        return true;
      }

      template <typename F>
      bool recurse(std::size_t k, F& visit) {
        if (k == _cells.size()) {
          LMosaic m(Carrier(_n), HyperOpTable(_n, _t), 0, _rho);
          return !accept(m) || visit(m);
        }
        auto const [x, y] = _cells[k];
        auto const req    = required(x, y);
        for (ElemSet v : _subsets) {
          if (!req.subset_of(v)) {
            continue;
          }
          set(x, y, v);
          if (consistent() && !recurse(k + 1, visit)) {
            set(x, y, ElemSet());
            return false;
          }
        }
        set(x, y, ElemSet());
        return true;
      }

      std::size_t                              _n;
      std::vector<Element>                     _rho;
      std::optional<LAxiom>                    _dropped;
      bool                                     _comm;
      std::vector<ElemSet>                     _t;
      std::vector<std::pair<Element, Element>> _cells;
      std::vector<ElemSet>                     _subsets;
    };

  }  // namespace detail

  // Calls visit(M) on every labelled structure of size n with e = 0 that
  // passes check_lmosaic (weak neutrality), or, with opts.dropped set, passes
  // every verdict except the dropped axiom, which it fails. visit returns
  // false to stop early. Returns false iff stopped early.
  template <typename F>
  bool search_lmosaic(std::size_t n, MosaicSearchOptions const& opts,
                      F&& visit) {
    detail::check_bound(n, kMaxCarrier, "mosaic");
    if (n > 16) {
      // the 2^n - 1 candidate subsets per cell are materialised up front
      throw UsageError("mosaic search is limited to carriers of size <= 16");
    }
    auto const rhos = opts.general_rho
                          ? detail::involutions(n)
                          : std::vector<std::vector<Element>>{
                              LMosaic::identity_map(n)};
    for (auto const& rho : rhos) {
      if (!detail::MosaicSearch(n, rho, opts.dropped).run(visit)) {
        return false;
      }
    }
    return true;
  }

  inline std::vector<LMosaic> enumerate_lmosaic(std::size_t              n,
                                                EnumerationBounds const& bounds,
                                                bool general_rho = false) {
    detail::check_bound(n, bounds.lmosaic, "mosaic enumeration");
    std::map<CanonicalForm, LMosaic> classes;
    search_lmosaic(n, {general_rho, std::nullopt}, [&](LMosaic const& m) {
      auto [rep, form] = canonical_representative(m);
      classes.try_emplace(std::move(form), std::move(rep));
      return true;
    });
    std::vector<LMosaic> out;
    out.reserve(classes.size());
    for (auto& [form, m] : classes) {
      out.push_back(std::move(m));
    }
    return out;
  }

  inline std::vector<LMosaic> enumerate_lmosaic(std::size_t n,
                                                bool general_rho = false) {
    return enumerate_lmosaic(n, enumeration_bounds(), general_rho);
  }

}  // namespace hyperkit
