#pragma once

// Canonical forms by permutation minimisation.
//
// Elements are first sorted by an isomorphism-invariant signature (with
// bot/e always first), and only permutations that keep that block order are
// scanned. The canonical form is the lexicographically least serialisation
// over those permutations.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "core.hpp"

namespace hyperkit {

  enum class StructureKind : std::uint8_t { bjoin = 1, lmosaic = 2 };

  struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(CanonicalForm const&) const = default;
    bool operator==(CanonicalForm const&) const  = default;

    // 12 hex digits of FNV-1a over the bytes; stable across platforms.
    std::string short_hash() const {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (auto b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
      }
      std::array<char, 17> buf{};
      std::snprintf(buf.data(), buf.size(), "%016llx",
                    static_cast<unsigned long long>(h));
      return std::string(buf.data(), 12);
    }
  };

  // perm[x] is the new index of old element x.
  using Permutation = std::vector<Element>;

  namespace detail {
    inline void check_permutation(Permutation const& p, std::size_t n) {
      if (p.size() != n) {
        throw UsageError("permutation has wrong length");
      }
      ElemSet seen;
      for (Element x : p) {
        if (x >= n || seen.contains(x)) {
          throw UsageError("not a permutation");
        }
        seen.insert(x);
      }
    }

    inline std::optional<std::vector<std::string>>
    permute_labels(Carrier const& c, Permutation const& p) {
      if (!c.has_labels()) {
        return std::nullopt;
      }
      std::vector<std::string> out(c.size());
      for (Element x = 0; x < c.size(); ++x) {
        out[p[x]] = (*c.labels())[x];
      }
      return out;
    }

    inline Carrier permute_carrier(Carrier const& c, Permutation const& p) {
      auto labels = permute_labels(c, p);
      return labels ? Carrier(c.size(), std::move(*labels)) : Carrier(c.size());
    }

    inline ElemSet permute_set(ElemSet s, Permutation const& p) {
      ElemSet out;
      for (Element x : s) {
        out.insert(p[x]);
      }
      return out;
    }

    inline void push_set(std::vector<std::uint8_t>& out, ElemSet s,
                         std::size_t n) {
      auto const bytes = (n + 7) / 8;
      for (std::size_t i = bytes; i-- > 0;) {
        out.push_back(static_cast<std::uint8_t>((s.bits() >> (8 * i)) & 0xFF));
      }
    }

    inline std::vector<Element> inverse(Permutation const& p) {
      std::vector<Element> inv(p.size());
      for (Element x = 0; x < p.size(); ++x) {
        inv[p[x]] = x;
      }
      return inv;
    }

    // Calls f(perm) for every permutation that lists elements in the block
    // order induced by sig (blocks of equal signature permuted freely).
    template <typename Sig, typename F>
    void for_each_block_permutation(std::vector<Sig> const& sig, F&& f) {
      auto const           n = sig.size();
      std::vector<Element> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
        return sig[a] < sig[b];
      });
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      for (std::size_t i = 0; i < n;) {
        std::size_t j = i + 1;
        while (j < n && sig[order[j]] == sig[order[i]]) {
          ++j;
        }
        blocks.emplace_back(i, j);
        i = j;
      }
      // each block starts sorted ascending, so next_permutation visits all
      Permutation perm(n);
      while (true) {
        for (Element i = 0; i < n; ++i) {
          perm[order[i]] = i;
        }
        f(perm);
        std::size_t b = 0;
        for (; b < blocks.size(); ++b) {
          auto const [lo, hi] = blocks[b];
          if (std::next_permutation(order.begin() + lo, order.begin() + hi)) {
            break;
          }
        }
        if (b == blocks.size()) {
          return;
        }
      }
    }
  }  // namespace detail

  inline BJoinSemilattice relabel(BJoinSemilattice const& s,
                                  Permutation const&      p) {
    auto const n = s.size();
    detail::check_permutation(p, n);
    std::vector<Element> cells(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        cells[p[x] * n + p[y]] = p[s.join(x, y)];
      }
    }
    return BJoinSemilattice(detail::permute_carrier(s.carrier(), p),
                            BinOpTable(n, std::move(cells)),
                            p[s.bot()]);
  }

  inline LMosaic relabel(LMosaic const& m, Permutation const& p) {
    auto const n = m.size();
    detail::check_permutation(p, n);
    std::vector<ElemSet> cells(n * n);
    std::vector<Element> rho(n);
    for (Element x = 0; x < n; ++x) {
      rho[p[x]] = p[m.rho(x)];
      for (Element y = 0; y < n; ++y) {
        cells[p[x] * n + p[y]] = detail::permute_set(m.hyper(x, y), p);
      }
    }
    return LMosaic(detail::permute_carrier(m.carrier(), p),
                   HyperOpTable(n, std::move(cells)),
                   p[m.e()],
                   std::move(rho));
  }

  namespace detail {
    inline std::vector<std::uint8_t> serialize_under(BJoinSemilattice const& s,
                                                     Permutation const& p) {
      auto const                n = s.size();
      auto const                inv = inverse(p);
      std::vector<std::uint8_t> out;
      out.reserve(3 + n * n);
      out.push_back(static_cast<std::uint8_t>(StructureKind::bjoin));
      out.push_back(static_cast<std::uint8_t>(n));
      out.push_back(static_cast<std::uint8_t>(p[s.bot()]));
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          out.push_back(static_cast<std::uint8_t>(p[s.join(inv[i], inv[j])]));
        }
      }
      return out;
    }

    inline std::vector<std::uint8_t> serialize_under(LMosaic const&     m,
                                                     Permutation const& p) {
      auto const                n = m.size();
      auto const                inv = inverse(p);
      std::vector<std::uint8_t> out;
      out.reserve(3 + n + n * n * ((n + 7) / 8));
      out.push_back(static_cast<std::uint8_t>(StructureKind::lmosaic));
      out.push_back(static_cast<std::uint8_t>(n));
      out.push_back(static_cast<std::uint8_t>(p[m.e()]));
      for (Element i = 0; i < n; ++i) {
        out.push_back(static_cast<std::uint8_t>(p[m.rho(inv[i])]));
      }
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          push_set(out, permute_set(m.hyper(inv[i], inv[j]), p), n);
        }
      }
      return out;
    }

    using Signature = std::array<std::size_t, 5>;

    inline std::vector<Signature> signatures(BJoinSemilattice const& s) {
      auto const             n = s.size();
      std::vector<Signature> sig(n);
      for (Element x = 0; x < n; ++x) {
        std::size_t down = 0, up = 0, idem = s.join(x, x) == x ? 0 : 1;
        for (Element y = 0; y < n; ++y) {
          down += s.join(y, x) == x;
          up += s.join(x, y) == y;
        }
        sig[x] = {x == s.bot() ? 0U : 1U, down, up, idem, 0};
      }
      return sig;
    }

    inline std::vector<Signature> signatures(LMosaic const& m) {
      auto const             n = m.size();
      std::vector<Signature> sig(n);
      for (Element x = 0; x < n; ++x) {
        std::size_t in_diagonals = 0, row = 0;
        for (Element y = 0; y < n; ++y) {
          in_diagonals += m.hyper(y, y).contains(x);
          row += m.hyper(x, y).size() + m.hyper(y, x).size();
        }
        sig[x] = {x == m.e() ? 0U : 1U,
                  m.hyper(x, x).size(),
                  in_diagonals,
                  row,
                  m.rho(x) == x ? 0U : 1U};
      }
      return sig;
    }

    template <typename S>
    std::pair<CanonicalForm, Permutation> canonicalize_impl(S const& s) {
      CanonicalForm best;
      Permutation   best_perm;
      for_each_block_permutation(signatures(s), [&](Permutation const& p) {
        auto bytes = serialize_under(s, p);
        if (best_perm.empty() || bytes < best.bytes) {
          best.bytes = std::move(bytes);
          best_perm  = p;
        }
      });
      return {std::move(best), std::move(best_perm)};
    }
  }  // namespace detail

  inline CanonicalForm canonical_form(BJoinSemilattice const& s) {
    return detail::canonicalize_impl(s).first;
  }
  inline CanonicalForm canonical_form(LMosaic const& m) {
    return detail::canonicalize_impl(m).first;
  }

  // The relabelled representative whose identity serialisation is the
  // canonical form, together with that form.
  template <typename S>
  std::pair<S, CanonicalForm> canonical_representative(S const& s) {
    auto [form, perm] = detail::canonicalize_impl(s);
    return {relabel(s, perm), std::move(form)};
  }

  namespace detail {
    template <typename S>
    std::optional<Permutation> isomorphism(S const& a, S const& b) {
      if (a.size() != b.size()) {
        throw UsageError("is_isomorphic: structures differ in size");
      }
      auto [fa, pa] = canonicalize_impl(a);
      auto [fb, pb] = canonicalize_impl(b);
      if (fa != fb) {
        return std::nullopt;
      }
      // a --pa--> canonical <--pb-- b
      auto const  inv_b = inverse(pb);
      Permutation out(a.size());
      for (Element x = 0; x < a.size(); ++x) {
        out[x] = inv_b[pa[x]];
      }
      return out;
    }
  }  // namespace detail

  // A permutation p with relabel(a, p) equal to b on tables and constants
  // (labels are ignored), or nullopt.
  inline std::optional<Permutation> is_isomorphic(BJoinSemilattice const& a,
                                                  BJoinSemilattice const& b) {
    return detail::isomorphism(a, b);
  }
  inline std::optional<Permutation> is_isomorphic(LMosaic const& a,
                                                  LMosaic const& b) {
    return detail::isomorphism(a, b);
  }
  [[noreturn]] inline std::optional<Permutation>
  is_isomorphic(BJoinSemilattice const&, LMosaic const&) {
    throw UsageError("is_isomorphic: structures are of different kinds");
  }
  [[noreturn]] inline std::optional<Permutation>
  is_isomorphic(LMosaic const&, BJoinSemilattice const&) {
    throw UsageError("is_isomorphic: structures are of different kinds");
  }

}  // namespace hyperkit
