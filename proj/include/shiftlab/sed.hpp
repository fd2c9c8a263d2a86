#pragma once

#include <memory>
#include <optional>
#include <string>

#include "shiftlab/complex.hpp"

namespace shiftlab {

/// One node of a strong edge decomposition.
struct SedWitness {
  enum class Kind { SimplexBoundary, EmptyFace, Edge };
  Kind kind = Kind::EmptyFace;
  int i = 0;
  int j = 0;
  std::shared_ptr<const SedWitness> contraction;
  std::shared_ptr<const SedWitness> link;
};

/// A witness when C is strongly edge decomposable. Non-pure input yields
/// nullopt. Edges are tried in lexicographic order; the first success is kept.
std::optional<std::shared_ptr<const SedWitness>> is_sed(const SimplicialComplex& c);

/// Replays a witness: the Link condition, purity and the dimension drop
/// (contraction keeps the dimension, the link loses two) at every node, and
/// the leaves are simplex boundaries or {∅}.
bool verify_witness(const SimplicialComplex& c, const SedWitness& w);

/// ∂ of a simplex on at least two vertices.
bool is_simplex_boundary(const SimplicialComplex& c);

/// h symmetric and h_0 <= h_1 <= ... <= h_{floor(d/2)}.
bool h_conditions(const SimplicialComplex& c);

/// Number of nodes in the witness tree.
int witness_size(const SedWitness& w);

}  // namespace shiftlab
