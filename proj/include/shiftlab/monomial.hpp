#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shiftlab/face.hpp"

namespace shiftlab {

inline constexpr int kMaxVariables = 16;

/// A monomial x_1^{a_1} ... x_16^{a_16}; the default value is 1.
class Monomial {
 public:
  constexpr Monomial() = default;

  /// exponents[k] is the exponent of x_{k+1}.
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(int i);
  /// x_F = prod_{i in F} x_i.
  static Monomial squarefree(Face f);
  /// x_{i_1} ... x_{i_k} from an index list (repetitions allowed).
  static Monomial from_indices(std::span<const int> indices);

  int exponent(int i) const { return exps_[i - 1]; }
  int degree() const;
  Face support() const;
  bool is_squarefree() const;
  /// Largest variable index with nonzero exponent; 0 for the monomial 1.
  int last_variable() const;

  Monomial times(int i) const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// o / this, assuming divides(o).
  Monomial quotient_of(const Monomial& o) const;
  std::optional<Monomial> divide_by_variable(int i) const;

  /// i_1 <= i_2 <= ... <= i_k with multiplicity.
  std::vector<int> indices() const;
  /// Exponent vector of the first m variables.
  std::vector<int> exponents(int m) const;

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Key order only; use degrevlex() for the monomial order.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
};

/// Degree reverse lexicographic order with x_1 > x_2 > ... : u > v iff
/// deg u > deg v, or the degrees agree and the last nonzero entry of
/// exp(u) - exp(v) is negative.
std::strong_ordering degrevlex(const Monomial& u, const Monomial& v);

/// Reverse lexicographic order on squarefree monomials induced by
/// 1 > 2 > ... ; graded by cardinality; for equal cardinality S > T iff
/// max(S △ T) ∈ T.
std::strong_ordering revlex_squarefree(Face s, Face t);

struct MonomialOrder {
  enum class Kind { DegrevlexPoly, RevlexSquarefree };
  Kind kind = Kind::DegrevlexPoly;
  int num_variables = 0;

  std::strong_ordering compare(const Monomial& u, const Monomial& v) const;
  std::strong_ordering compare(Face s, Face t) const;
};

/// All degree-k monomials in x_1..x_n, sorted descending in degrevlex.
std::vector<Monomial> monomials_of_degree(int n, int k);

/// All k-subsets of [n], sorted descending in revlex.
std::vector<Face> squarefree_of_degree(int n, int k);

/// x_{i_1} x_{i_2} ... x_{i_k} -> x_{i_1} x_{i_2+1} ... x_{i_k+k-1}.
/// Throws InvalidParameters if an index would exceed kMaxVariables.
Monomial squarefree_phi(const Monomial& u);

/// A monomial ideal of K[x_1..x_n] held by its minimal generators.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Minimalizes the given generators.
  MonomialIdeal(int num_variables, std::vector<Monomial> generators);

  int num_variables() const { return n_; }
  /// Minimal generators, ordered by degree then descending degrevlex.
  const std::vector<Monomial>& generators() const { return gens_; }
  bool contains(const Monomial& m) const;
  int max_degree() const;
  bool is_squarefree() const;
  /// Exchange x_j -> x_i (i < j) keeps membership, checked on generators.
  bool is_borel_fixed() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

}  // namespace shiftlab

template <>
struct std::hash<shiftlab::Monomial> {
  std::size_t operator()(const shiftlab::Monomial& m) const noexcept { return m.hash(); }
};
