#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "elem_set.hpp"
#include "errors.hpp"

namespace hyperkit {

  class Carrier {
   public:
    explicit Carrier(std::size_t n) : _size(n) {
      if (n == 0 || n > kMaxCarrier) {
        throw InvalidStructure("carrier size must be in [1, "
                               + std::to_string(kMaxCarrier) + "], found "
                               + std::to_string(n));
      }
    }

    Carrier(std::size_t n, std::vector<std::string> labels) : Carrier(n) {
      if (labels.size() != n) {
        throw InvalidStructure("expected " + std::to_string(n)
                               + " labels, found "
                               + std::to_string(labels.size()));
      }
      std::unordered_set<std::string> seen;
      for (auto const& l : labels) {
        if (!seen.insert(l).second) {
          throw InvalidStructure("duplicate label \"" + l + "\"");
        }
      }
      _labels = std::move(labels);
    }

    std::size_t size() const noexcept {
      return _size;
    }
    bool has_labels() const noexcept {
      return _labels.has_value();
    }
    std::optional<std::vector<std::string>> const& labels() const noexcept {
      return _labels;
    }
    // Display name: the label if present, else the index.
    std::string name(Element x) const {
      return _labels ? (*_labels)[x] : std::to_string(x);
    }
    ElemSet all() const noexcept {
      return ElemSet::full(_size);
    }

    bool operator==(Carrier const&) const = default;

   private:
    std::size_t                             _size;
    std::optional<std::vector<std::string>> _labels;
  };

  namespace detail {
    inline void check_index(Element x, std::size_t n, char const* what) {
      if (x >= n) {
        throw UsageError(std::string(what) + " index " + std::to_string(x)
                         + " out of range for carrier of size "
                         + std::to_string(n));
      }
    }
    inline void check_subset(ElemSet s, std::size_t n) {
      if (!s.subset_of(ElemSet::full(n))) {
        throw UsageError("set " + to_string(s)
                         + " is not a subset of a carrier of size "
                         + std::to_string(n));
      }
    }
  }  // namespace detail

  // Total binary operation, n x n, row-major.
  class BinOpTable {
   public:
    BinOpTable(std::size_t n, std::vector<Element> cells)
        : _n(n), _cells(std::move(cells)) {
      if (_cells.size() != n * n) {
        throw InvalidStructure("binary table needs " + std::to_string(n * n)
                               + " cells, found "
                               + std::to_string(_cells.size()));
      }
      for (std::size_t i = 0; i < _cells.size(); ++i) {
        if (_cells[i] >= n) {
          throw InvalidStructure("table entry " + std::to_string(_cells[i])
                                 + " at (" + std::to_string(i / n) + ","
                                 + std::to_string(i % n)
                                 + ") is outside the carrier");
        }
      }
    }

    explicit BinOpTable(std::vector<std::vector<Element>> const& rows)
        : BinOpTable(rows.size(), flatten(rows)) {}

    template <typename F>
    static BinOpTable from_function(std::size_t n, F&& f) {
      std::vector<Element> cells;
      cells.reserve(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          cells.push_back(f(x, y));
        }
      }
      return BinOpTable(n, std::move(cells));
    }

    std::size_t size() const noexcept {
      return _n;
    }
    Element operator()(Element x, Element y) const noexcept {
      return _cells[x * _n + y];
    }
    std::vector<Element> const& cells() const noexcept {
      return _cells;
    }

    bool operator==(BinOpTable const&) const = default;

   private:
    static std::vector<Element>
    flatten(std::vector<std::vector<Element>> const& rows) {
      std::vector<Element> out;
      for (auto const& r : rows) {
        if (r.size() != rows.size()) {
          throw InvalidStructure("binary table is not square");
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }

    std::size_t          _n;
    std::vector<Element> _cells;
  };

  // Set-valued binary operation, n x n, row-major; every cell nonempty.
  class HyperOpTable {
   public:
    HyperOpTable(std::size_t n, std::vector<ElemSet> cells)
        : _n(n), _cells(std::move(cells)) {
      if (_cells.size() != n * n) {
        throw InvalidStructure("hyperoperation table needs "
                               + std::to_string(n * n) + " cells, found "
                               + std::to_string(_cells.size()));
      }
      auto const all = ElemSet::full(n);
      for (std::size_t i = 0; i < _cells.size(); ++i) {
        auto const where = "(" + std::to_string(i / n) + ","
                           + std::to_string(i % n) + ")";
        if (_cells[i].empty()) {
          throw InvalidStructure("empty hyperoperation cell at " + where);
        }
        if (!_cells[i].subset_of(all)) {
          throw InvalidStructure("hyperoperation cell at " + where
                                 + " leaves the carrier");
        }
      }
    }

    explicit HyperOpTable(std::vector<std::vector<ElemSet>> const& rows)
        : HyperOpTable(rows.size(), flatten(rows)) {}

    template <typename F>
    static HyperOpTable from_function(std::size_t n, F&& f) {
      std::vector<ElemSet> cells;
      cells.reserve(n * n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          cells.push_back(f(x, y));
        }
      }
      return HyperOpTable(n, std::move(cells));
    }

    std::size_t size() const noexcept {
      return _n;
    }
    ElemSet operator()(Element x, Element y) const noexcept {
      return _cells[x * _n + y];
    }
    std::vector<ElemSet> const& cells() const noexcept {
      return _cells;
    }

    bool operator==(HyperOpTable const&) const = default;

   private:
    static std::vector<ElemSet>
    flatten(std::vector<std::vector<ElemSet>> const& rows) {
      std::vector<ElemSet> out;
      for (auto const& r : rows) {
        if (r.size() != rows.size()) {
          throw InvalidStructure("hyperoperation table is not square");
        }
        out.insert(out.end(), r.begin(), r.end());
      }
      return out;
    }

    std::size_t          _n;
    std::vector<ElemSet> _cells;
  };

  // (L, join, bot). Only the shape is validated here; the semilattice axioms
  // are decided by check_bjoin.
  class BJoinSemilattice {
   public:
    BJoinSemilattice(Carrier carrier, BinOpTable join, Element bot)
        : _carrier(std::move(carrier)), _join(std::move(join)), _bot(bot) {
      if (_join.size() != _carrier.size()) {
        throw InvalidStructure("join table size does not match carrier");
      }
      if (_bot >= _carrier.size()) {
        throw InvalidStructure("bot " + std::to_string(_bot)
                               + " is outside the carrier");
      }
    }

    BJoinSemilattice(BinOpTable join, Element bot)
        : BJoinSemilattice(Carrier(join.size()), std::move(join), bot) {}

    Carrier const& carrier() const noexcept {
      return _carrier;
    }
    std::size_t size() const noexcept {
      return _carrier.size();
    }
    BinOpTable const& table() const noexcept {
      return _join;
    }
    Element join(Element x, Element y) const noexcept {
      return _join(x, y);
    }
    Element bot() const noexcept {
      return _bot;
    }

    bool operator==(BJoinSemilattice const&) const = default;

   private:
    Carrier    _carrier;
    BinOpTable _join;
    Element    _bot;
  };

  // (A, hyperoperation, e, rho). Shape-validated only; see check_lmosaic.
  class LMosaic {
   public:
    LMosaic(Carrier carrier, HyperOpTable hyp, Element e,
            std::vector<Element> rho)
        : _carrier(std::move(carrier)),
          _hyp(std::move(hyp)),
          _e(e),
          _rho(std::move(rho)) {
      auto const n = _carrier.size();
      if (_hyp.size() != n) {
        throw InvalidStructure(
            "hyperoperation table size does not match carrier");
      }
      if (_e >= n) {
        throw InvalidStructure("e " + std::to_string(_e)
                               + " is outside the carrier");
      }
      if (_rho.size() != n) {
        throw InvalidStructure("rho needs " + std::to_string(n)
                               + " entries, found "
                               + std::to_string(_rho.size()));
      }
      for (Element r : _rho) {
        if (r >= n) {
          throw InvalidStructure("rho entry " + std::to_string(r)
                                 + " is outside the carrier");
        }
      }
    }

    // rho = identity
    LMosaic(HyperOpTable hyp, Element e)
        : LMosaic(Carrier(hyp.size()), hyp, e, identity_map(hyp.size())) {}

    static std::vector<Element> identity_map(std::size_t n) {
      std::vector<Element> id(n);
      for (Element x = 0; x < n; ++x) {
        id[x] = x;
      }
      return id;
    }

    Carrier const& carrier() const noexcept {
      return _carrier;
    }
    std::size_t size() const noexcept {
      return _carrier.size();
    }
    HyperOpTable const& table() const noexcept {
      return _hyp;
    }
    ElemSet hyper(Element x, Element y) const noexcept {
      return _hyp(x, y);
    }
    Element e() const noexcept {
      return _e;
    }
    std::vector<Element> const& rho() const noexcept {
      return _rho;
    }
    Element rho(Element x) const noexcept {
      return _rho[x];
    }

    bool operator==(LMosaic const&) const = default;

   private:
    Carrier              _carrier;
    HyperOpTable         _hyp;
    Element              _e;
    std::vector<Element> _rho;
  };

  ////////////////////////////////////////////////////////////////////////
  // Elementwise extensions of the hyperoperation
  ////////////////////////////////////////////////////////////////////////

  inline ElemSet hyper(LMosaic const& m, Element x, Element y) {
    detail::check_index(x, m.size(), "left");
    detail::check_index(y, m.size(), "right");
    return m.hyper(x, y);
  }

  // Union of x (+) y over x in X, y in Y.
  inline ElemSet set_mul(LMosaic const& m, ElemSet xs, ElemSet ys) {
    detail::check_subset(xs, m.size());
    detail::check_subset(ys, m.size());
    ElemSet out;
    for (Element x : xs) {
      for (Element y : ys) {
        out |= m.hyper(x, y);
      }
    }
    return out;
  }

  inline ElemSet right_mul(LMosaic const& m, Element x, ElemSet ys) {
    detail::check_index(x, m.size(), "left");
    return set_mul(m, ElemSet::singleton(x), ys);
  }

  inline ElemSet left_mul(LMosaic const& m, ElemSet xs, Element y) {
    detail::check_index(y, m.size(), "right");
    return set_mul(m, xs, ElemSet::singleton(y));
  }

}  // namespace hyperkit
