#pragma once

#include <optional>
#include <vector>

#include "shiftlab/complex.hpp"

namespace shiftlab {

/// A d-subset F of [n] such that n-k ∉ F implies [n-d+k, n-k-1] ⊆ F.
/// Throws WrongCardinality unless F ⊆ [n] and |F| = d.
bool is_admissible(Face f, int n, int d);

/// The families W_0(n,d), ..., W_d(n,d); by_index[i] holds W_i.
struct AdmissibleFamily {
  int n = 0;
  int d = 0;
  std::vector<std::vector<Face>> by_index;

  /// Union over all indices, duplicates removed, lex order.
  std::vector<Face> all() const;
};

AdmissibleFamily witness_families(int n, int d);

/// Every admissible d-subset of [n] by exhaustive search, lex order.
std::vector<Face> admissible_sets(int n, int d);

/// Δ(n,d), generated by the W_i(n,d); Δ(n,0) = {∅}. Throws InvalidParameters
/// unless n > d >= 0.
SimplicialComplex build_delta(int n, int d);

/// Δ(V,d): Δ(|V|,d) carried onto V order-isomorphically.
SimplicialComplex build_delta_on(Face vertices, int d);

struct ContainmentResult {
  bool contained = false;
  std::optional<Face> offending;  ///< a facet of C outside Δ(n,d)
  explicit operator bool() const { return contained; }
};

ContainmentResult contained_in_delta(const SimplicialComplex& c, int n, int d);

}  // namespace shiftlab
