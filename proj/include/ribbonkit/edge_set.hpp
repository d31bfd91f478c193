#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>

namespace ribbonkit {

// Subset of a diagram's edges, indexed by position in the diagram's label list.
class EdgeSet {
 public:
  static constexpr int kCapacity = 64;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr EdgeSet() = default;
  constexpr explicit EdgeSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSet single(int i) { return EdgeSet(std::uint64_t{1} << i); }
  static constexpr EdgeSet first(int n) {
    return EdgeSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(EdgeSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(EdgeSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr EdgeSet with(int i) const { return EdgeSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr EdgeSet without(int i) const { return EdgeSet(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr EdgeSet toggled(int i) const { return EdgeSet(bits_ ^ (std::uint64_t{1} << i)); }

  constexpr EdgeSet operator|(EdgeSet o) const { return EdgeSet(bits_ | o.bits_); }
  constexpr EdgeSet operator&(EdgeSet o) const { return EdgeSet(bits_ & o.bits_); }
  constexpr EdgeSet operator^(EdgeSet o) const { return EdgeSet(bits_ ^ o.bits_); }
  constexpr EdgeSet operator-(EdgeSet o) const { return EdgeSet(bits_ & ~o.bits_); }
  constexpr EdgeSet& operator|=(EdgeSet o) { bits_ |= o.bits_; return *this; }
  constexpr EdgeSet& operator&=(EdgeSet o) { bits_ &= o.bits_; return *this; }
  constexpr EdgeSet& operator^=(EdgeSet o) { bits_ ^= o.bits_; return *this; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  constexpr auto operator<=>(const EdgeSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace ribbonkit
