#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace shiftlab {

/// Residues modulo a prime p < 2^62. The Mersenne prime 2^61 - 1 (the
/// default) takes a shift-and-add reduction path.
class PrimeField {
 public:
  using Element = std::uint64_t;

  static constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

  /// Throws InvalidParameters unless p is a prime below 2^62.
  explicit PrimeField(std::uint64_t p = kMersenne61);

  std::uint64_t modulus() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }

  Element from_int(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }

  Element add(Element a, Element b) const {
    const Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }

  Element mul(Element a, Element b) const {
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    if (mersenne_) {
      Element r = (static_cast<Element>(z) & kMersenne61) + static_cast<Element>(z >> 61);
      if (r >= kMersenne61) r -= kMersenne61;
      if (r >= kMersenne61) r -= kMersenne61;
      return r;
    }
    return static_cast<Element>(z % p_);
  }

  Element pow(Element a, std::uint64_t e) const;
  /// Multiplicative inverse of a nonzero element.
  Element inv(Element a) const { return pow(a, p_ - 2); }

  template <class Rng>
  Element random(Rng& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, p_ - 1)(rng);
  }

  std::string to_string(Element a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
  bool mersenne_;
};

/// Exact arithmetic in Q. Random elements are integers in [-kRandomRange, kRandomRange].
class RationalField {
 public:
  using Element = boost::multiprecision::cpp_rational;

  static constexpr int kRandomRange = 1000;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return a == 0; }
  Element from_int(std::int64_t v) const { return Element(v); }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const { return 1 / a; }

  template <class Rng>
  Element random(Rng& rng) const {
    return Element(std::uniform_int_distribution<int>(-kRandomRange, kRandomRange)(rng));
  }

  std::string to_string(const Element& a) const { return a.str(); }
};

bool is_prime(std::uint64_t p);

}  // namespace shiftlab
