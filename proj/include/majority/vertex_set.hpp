#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace majority {

inline constexpr int kMaxVertices = 64;

// A subset of [0, 64) stored as a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> members) {
    for (int v : members) bits_ |= bit(v);
  }

  static VertexSet of(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
  }
  // {lo, ..., hi - 1}
  static constexpr VertexSet range(int lo, int hi) {
    if (hi <= lo) return VertexSet{};
    const std::uint64_t upto_hi = hi >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << hi) - 1;
    const std::uint64_t upto_lo = (std::uint64_t{1} << lo) - 1;
    return VertexSet(upto_hi & ~upto_lo);
  }
  static constexpr VertexSet all(int n) { return range(0, n); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Smallest / largest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_); }
  constexpr int max() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(int v) { bits_ |= bit(v); }
  constexpr void erase(int v) { bits_ &= ~bit(v); }

  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;
  constexpr std::strong_ordering operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<int> members() const { return {begin(), end()}; }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

}  // namespace majority
