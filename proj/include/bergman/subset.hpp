#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace bergman {

/// Subset of ground-set positions, stored as a bitmask. Positions are
/// 0-based element indices; ground sets are capped well below 32 bits.
class Subset {
 public:
  constexpr Subset() = default;
  static constexpr Subset from_bits(std::uint32_t bits) { return Subset(bits); }
  static constexpr Subset single(int i) { return Subset(1u << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~0u : (1u << n) - 1u);
  }
  static Subset of(std::initializer_list<int> elems) {
    Subset s;
    for (int e : elems) s.bits_ |= 1u << e;
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int count() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool contains(Subset other) const {
    return (other.bits_ & ~bits_) == 0;
  }
  /// Smallest element; undefined on the empty set.
  constexpr int min_element() const { return std::countr_zero(bits_); }

  constexpr Subset with(int i) const { return Subset(bits_ | (1u << i)); }
  constexpr Subset without(int i) const { return Subset(bits_ & ~(1u << i)); }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  /// Iterates set positions in increasing order.
  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t bits) : bits_(bits) {}
    constexpr int operator*() const { return std::countr_zero(bits_); }
    constexpr iterator& operator++() {
      bits_ &= bits_ - 1;
      return *this;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint32_t bits_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int e : *this) out.push_back(e);
    return out;
  }

 private:
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

/// The set holding the smallest element outside the intersection comes
/// first, so {0,2} < {1,2} and {0,1,2} < {0,1}. This is the tie-break
/// order used whenever a deterministic "first" circuit, cocircuit or flat
/// is reported.
constexpr bool lex_less(Subset a, Subset b) {
  if (a == b) return false;
  std::uint32_t diff = a.bits() ^ b.bits();
  std::uint32_t low = diff & (~diff + 1);
  return (a.bits() & low) != 0;
}

struct SubsetLexLess {
  constexpr bool operator()(Subset a, Subset b) const { return lex_less(a, b); }
};

}  // namespace bergman
