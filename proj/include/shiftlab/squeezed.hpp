#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/monomial.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {

/// A finite set of monomials in x_1..x_m; not necessarily valid (see
/// validate_order_ideal). Monomials are kept sorted by degree, then
/// descending degrevlex, without duplicates.
struct OrderIdeal {
  int m = 0;
  std::vector<Monomial> monomials;

  OrderIdeal() = default;
  OrderIdeal(int m_, std::vector<Monomial> monomials_);
  bool contains(const Monomial& u) const;
  int max_degree() const;
  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

struct OrderIdealCheck {
  bool valid = false;
  std::string reason;
  explicit operator bool() const { return valid; }
};

/// Contains 1, x_1..x_m; divisor closed; shifted; every degree <= max_degree.
OrderIdealCheck validate_order_ideal(const OrderIdeal& u, int m, double max_degree);

/// Every shifted order ideal on [m] with degrees at most max_degree.
std::vector<OrderIdeal> enumerate_order_ideals(int m, int max_degree);

/// F_d(u) ⊂ [n]. Throws DegreeTooLarge or SupportOutOfRange.
Face facet_of_monomial(const Monomial& u, int d, int n);

/// Complex generated by F_d(u), u in the given set (no validation of the set).
SimplicialComplex ball_of_monomials(const std::vector<Monomial>& us, int d, int n);

/// B_d(U). Throws InvalidOrderIdeal unless U is valid on [n-d-1].
SimplicialComplex squeezed_ball(const OrderIdeal& u, int d, int n);

/// Faces of codimension one contained in exactly one facet. Throws
/// NotAPseudomanifoldWithBoundary.
SimplicialComplex ball_boundary(const SimplicialComplex& b);

/// S_d(U) = boundary of B_d(U).
SimplicialComplex squeezed_sphere(const OrderIdeal& u, int d, int n);

struct SplitIdeal {
  OrderIdeal hat;    ///< U ∩ K[x_2..x_m]
  OrderIdeal tilde;  ///< {u : x_1 u ∈ U}
};
SplitIdeal split_U(const OrderIdeal& u);

/// Generated by F_d(x_1 u) - {1,2}, u ∈ Ũ, on the original labels.
SimplicialComplex tilde_ball(const OrderIdeal& tilde, int d, int n);

struct Lemma52Sides {
  SimplicialComplex sphere = SimplicialComplex::empty_face();        ///< S_d(U)
  SimplicialComplex hat_sphere = SimplicialComplex::empty_face();    ///< S_d(Û)
  SimplicialComplex tilde_sphere = SimplicialComplex::empty_face();  ///< S̃_{d-2}(Ũ)
  std::vector<Face> shifted_faces;  ///< faces of Shift_12(S_d(U)), graded_less
  std::vector<Face> union_faces;    ///< S_d(Û) ∪ { {1} ∪ F : F ∈ {2} * S̃ }, graded_less
};
/// Both sides of the Shift_12 decomposition of S_d(U); requires m >= 1.
Lemma52Sides lemma52_sides(const OrderIdeal& u, int d, int n);

/// U(C) for a (d-1)-dimensional C on [n]: monomials in x_1..x_{n-d-1} outside
/// Gin(I_C). Throws GinUnavailable or NonTerminating.
OrderIdeal extract_U(const SimplicialComplex& c, int d, const ShiftOptions& opts = {});

/// L(C): monomials in x_1..x_{n-d} outside Gin(I_C).
std::vector<Monomial> extract_L(const SimplicialComplex& c, int d, const ShiftOptions& opts = {});

/// {u x_{m+1}^t : u ∈ U, 0 <= t <= d - 2 deg u}.
std::vector<Monomial> L_from_U(const OrderIdeal& u, int d);

/// Facets {i_1, i_2+1, ..., i_k+k-1} ∪ [n-d+1+k, n] for x_{i_1}...x_{i_k} ∈ L.
std::vector<Face> facets_from_L(const std::vector<Monomial>& l, int n, int d);

/// Shiftedness on [n]: is_shifted and the ground set is a final segment of [n].
bool is_shifted_on(const SimplicialComplex& c, int n);

struct Realization {
  OrderIdeal u;
  SimplicialComplex sphere = SimplicialComplex::empty_face();
};

/// For Σ shifted, pure, (d-1)-dimensional, with symmetric h and Σ ⊂ Δ(V,d):
/// the squeezed sphere S_d(U(Σ)) carried onto V, verified to have
/// Δ^s = Δ^e = Σ. Throws HypothesesViolated or IdentityViolated.
Realization realize_squeezed(const SimplicialComplex& sigma, int d, const ShiftOptions& opts = {});

/// Every Σ generated by facets of Δ(n,d) that is shifted on [n] and has a
/// symmetric h-vector.
std::vector<SimplicialComplex> squeezed_targets(int n, int d);

}  // namespace shiftlab
