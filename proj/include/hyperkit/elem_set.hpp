#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperkit {

  // Carrier elements are dense indices 0..n-1.
  using Element = std::uint32_t;

  inline constexpr std::size_t kMaxCarrier = 64;

  // A subset of a carrier of at most 64 elements, stored as one word.
  class ElemSet {
   public:
    class iterator {
     public:
      using value_type      = Element;
      using difference_type = std::ptrdiff_t;

      constexpr iterator() = default;
      constexpr explicit iterator(std::uint64_t rest) : _rest(rest) {}

      constexpr Element operator*() const {
        return static_cast<Element>(std::countr_zero(_rest));
      }
      constexpr iterator& operator++() {
        _rest &= _rest - 1;
        return *this;
      }
      constexpr iterator operator++(int) {
        iterator tmp = *this;
        ++*this;
        return tmp;
      }
      constexpr bool operator==(iterator const&) const = default;

     private:
      std::uint64_t _rest = 0;
    };

    constexpr ElemSet() = default;

    static constexpr ElemSet from_bits(std::uint64_t bits) {
      ElemSet s;
      s._bits = bits;
      return s;
    }
    static constexpr ElemSet singleton(Element x) {
      return from_bits(std::uint64_t{1} << x);
    }
    // {0, ..., n-1}
    static constexpr ElemSet full(std::size_t n) {
      return from_bits(n >= 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElemSet of(std::initializer_list<Element> xs) {
      ElemSet s;
      for (Element x : xs) {
        s.insert(x);
      }
      return s;
    }
    template <typename Range>
    static ElemSet of_range(Range const& xs) {
      ElemSet s;
      for (auto x : xs) {
        s.insert(static_cast<Element>(x));
      }
      return s;
    }

    constexpr std::uint64_t bits() const noexcept {
      return _bits;
    }
    constexpr bool contains(Element x) const noexcept {
      return x < 64 && ((_bits >> x) & 1U) != 0;
    }
    constexpr void insert(Element x) noexcept {
      _bits |= std::uint64_t{1} << x;
    }
    constexpr void erase(Element x) noexcept {
      _bits &= ~(std::uint64_t{1} << x);
    }
    constexpr bool empty() const noexcept {
      return _bits == 0;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(_bits));
    }
    constexpr bool subset_of(ElemSet other) const noexcept {
      return (_bits & ~other._bits) == 0;
    }
    // Smallest member; undefined on the empty set.
    constexpr Element front() const noexcept {
      return static_cast<Element>(std::countr_zero(_bits));
    }

    constexpr iterator begin() const noexcept {
      return iterator(_bits);
    }
    constexpr iterator end() const noexcept {
      return iterator(0);
    }

    std::vector<Element> to_vector() const {
      return std::vector<Element>(begin(), end());
    }

    constexpr ElemSet& operator|=(ElemSet o) noexcept {
      _bits |= o._bits;
      return *this;
    }
    constexpr ElemSet& operator&=(ElemSet o) noexcept {
      _bits &= o._bits;
      return *this;
    }

    friend constexpr ElemSet operator|(ElemSet a, ElemSet b) noexcept {
      return from_bits(a._bits | b._bits);
    }
    friend constexpr ElemSet operator&(ElemSet a, ElemSet b) noexcept {
      return from_bits(a._bits & b._bits);
    }
    // set difference
    friend constexpr ElemSet operator-(ElemSet a, ElemSet b) noexcept {
      return from_bits(a._bits & ~b._bits);
    }
    friend constexpr bool operator==(ElemSet, ElemSet) = default;

   private:
    std::uint64_t _bits = 0;
  };

  // "{0,1,3}"
  inline std::string to_string(ElemSet s) {
    std::string out = "{";
    bool        first = true;
    for (Element x : s) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += std::to_string(x);
    }
    out += '}';
    return out;
  }

}  // namespace hyperkit
