#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shiftlab {

inline constexpr int kMaxVertex = 64;

/// A finite set of vertex labels in [1, 64], stored as a bitset (label v is
/// bit v-1). Ordering via <=> is on the raw bits and only meant for keys;
/// use lex_less for presentation order.
class Face {
 public:
  constexpr Face() = default;
  Face(std::initializer_list<int> vertices);
  explicit Face(std::span<const int> vertices);

  static constexpr Face from_bits(std::uint64_t bits) {
    Face f;
    f.bits_ = bits;
    return f;
  }
  /// [lo, hi]; empty when lo > hi.
  static Face interval(int lo, int hi);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1U; }
  constexpr bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool disjoint(Face other) const { return (bits_ & other.bits_) == 0; }

  Face with(int v) const;
  constexpr Face without(int v) const { return from_bits(bits_ & ~(std::uint64_t{1} << (v - 1))); }

  /// Smallest / largest label; only valid for nonempty faces.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return 64 - std::countl_zero(bits_); }

  std::vector<int> vertices() const;
  std::string to_string() const;

  constexpr Face operator|(Face o) const { return from_bits(bits_ | o.bits_); }
  constexpr Face operator&(Face o) const { return from_bits(bits_ & o.bits_); }
  constexpr Face operator-(Face o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr Face operator^(Face o) const { return from_bits(bits_ ^ o.bits_); }

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face a, Face b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the increasing vertex lists.
bool lex_less(Face a, Face b);

/// Cardinality first, then lexicographic.
bool graded_less(Face a, Face b);

/// Calls fn on every subset of f (including the empty set and f itself).
template <class Fn>
void for_each_subset(Face f, Fn&& fn) {
  const std::uint64_t full = f.bits();
  std::uint64_t sub = full;
  while (true) {
    fn(Face::from_bits(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// Calls fn on every k-subset of f.
template <class Fn>
void for_each_subset_of_size(Face f, int k, Fn&& fn) {
  for_each_subset(f, [&](Face s) {
    if (s.size() == k) fn(s);
  });
}

/// All k-subsets of [n] in lexicographic order.
std::vector<Face> k_subsets(int n, int k);

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::Face> {
  std::size_t operator()(shiftlab::Face f) const noexcept { return std::hash<std::uint64_t>{}(f.bits()); }
};
