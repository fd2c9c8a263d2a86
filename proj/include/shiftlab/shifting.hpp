#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/dense.hpp"
#include "shiftlab/field.hpp"
#include "shiftlab/monomial.hpp"

namespace shiftlab {

/// I_C in K[x_1..x_n]; n defaults to the largest label. Vertices of [n]
/// outside the ground set contribute linear generators.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c, std::optional<int> n = std::nullopt);

/// Support sets of the minimal generators of J_C in the exterior algebra on
/// e_1..e_n (the same sets as for I_C).
std::vector<Face> exterior_face_ideal(const SimplicialComplex& c, std::optional<int> n = std::nullopt);

struct ShiftOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  std::uint64_t prime = PrimeField::kMersenne61;
  bool exact = false;
  /// Vertex set the complex lives on; defaults to its ground set. Computation
  /// happens on [|V|] and is carried back onto V order-isomorphically.
  std::optional<Face> vertex_set;
  /// Largest Gin degree computed; defaults to the largest face cardinality,
  /// which already fixes every face of the shifted complex.
  std::optional<int> degree_bound;
  /// Extra batches of `trials` runs before giving up with RandomnessSuspect.
  int retry_batches = 2;
};

struct DegreeData {
  int degree = 0;
  int ideal_dimension = 0;
  int total_dimension = 0;
  bool dual_route = false;
};

struct ShiftReport {
  SimplicialComplex input = SimplicialComplex::empty_face();
  SimplicialComplex shifted = SimplicialComplex::empty_face();
  std::vector<DegreeData> degrees;
  /// Symmetric: minimal generators of Gin(I_C) up to the degree bound.
  /// Exterior: supports of the minimal generators of Gin(J_C).
  /// Labels refer to [|V|].
  std::vector<Monomial> gin_generators;
  std::vector<std::uint64_t> seeds;
  bool agreement = false;
  std::uint64_t prime = 0;
  bool exact = false;
};

/// Δ^e(C) with J_{Δ^e C} = Gin(J_C) in revlex. Throws RandomnessSuspect.
ShiftReport exterior_shift(const SimplicialComplex& c, const ShiftOptions& opts = {});

/// Δ^s(C) = complex of Φ(Gin(I_C)) in degrevlex. Throws RandomnessSuspect
/// or PhiNotSquarefree.
ShiftReport symmetric_shift(const SimplicialComplex& c, const ShiftOptions& opts = {});

/// Δ_φ(C) with J_{Δ_φ C} = in(φ(J_C)) for an explicit φ over F_p acting on
/// [n], n = phi.rows(); C must live on [n]. Throws SingularMatrix.
SimplicialComplex nongeneric_shift(const SimplicialComplex& c, const DenseMatrix<PrimeField>& phi,
                                   std::uint64_t prime = PrimeField::kMersenne61);

/// I + E(i,j): e_j ↦ e_i + e_j on n variables.
DenseMatrix<PrimeField> elementary_map(int n, int i, int j);

/// Gin(I) in degrevlex up to degree_bound, Borel-fixedness asserted. Throws
/// RandomnessSuspect or DegreeBoundTooSmall.
MonomialIdeal gin_polynomial(const MonomialIdeal& ideal, int degree_bound, const ShiftOptions& opts = {});

/// Minimal generators of in(φ_ij(I_C)) in degrevlex over F_p up to
/// degree_bound (default dim C + 2), C on [n] with n = max label or given.
MonomialIdeal initial_ideal_of_elementary_map(const SimplicialComplex& c, int i, int j,
                                              std::optional<int> n = std::nullopt,
                                              std::optional<int> degree_bound = std::nullopt);

/// For C on [m, n]: Δ^e computed on [n] (that is Gin(J_C + (e_1..e_{m-1})))
/// against Δ^e computed on [m, n]. Returns the generator supports of the
/// common Gin on [n]. Throws IdentityViolated if the two differ.
MonomialIdeal gin_with_extra_variables(const SimplicialComplex& c, int m, int n, const ShiftOptions& opts = {});

/// Δ^e of the cone with apex n+1 (n = largest label, or 0 for {∅}), checked
/// against the cone over Δ^e(C). Throws IdentityViolated.
SimplicialComplex shift_of_cone(const SimplicialComplex& c, const ShiftOptions& opts = {});

/// The complex on [n] whose faces of cardinality <= max_card are the
/// squarefree sets outside the ideal.
SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& ideal, int n, int max_card);

}  // namespace shiftlab
