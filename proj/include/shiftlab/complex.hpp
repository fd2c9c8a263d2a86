#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/face.hpp"

namespace shiftlab {

/// An immutable simplicial complex stored by its facets.
///
/// The ground set is always the union of the facets, so a complex never has
/// ghost vertices. The complex {∅} is a legal value (facets = [∅], empty
/// ground); the void complex with no faces at all is rejected.
class SimplicialComplex {
 public:
  /// Generated by the given faces; non-maximal and duplicate generators are
  /// dropped. Throws VoidComplex when `generators` is empty.
  static SimplicialComplex generated_by(std::vector<Face> generators);

  /// The complex {∅}.
  static SimplicialComplex empty_face();

  Face ground() const { return ground_; }
  int num_vertices() const { return ground_.size(); }
  /// Facets in graded_less order.
  const std::vector<Face>& facets() const { return facets_; }

  bool contains(Face f) const;
  /// Largest facet cardinality minus one; -1 for {∅}.
  int dim() const { return facets_.back().size() - 1; }
  bool is_empty_face() const { return facets_.size() == 1 && facets_.front().empty(); }

  /// All faces, graded_less order.
  std::vector<Face> faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex() = default;
  Face ground_;
  std::vector<Face> facets_;
};

/// Number of faces with k vertices, k = 0..dim+1 (entry k is f_{k-1}).
struct FVector {
  std::vector<std::int64_t> counts;
  int d() const { return static_cast<int>(counts.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// h_0..h_d.
struct HVector {
  std::vector<std::int64_t> h;
  int d() const { return static_cast<int>(h.size()) - 1; }
  friend bool operator==(const HVector&, const HVector&) = default;
};

std::vector<Face> faces_of_card(const SimplicialComplex& c, int k);

FVector f_vector(const SimplicialComplex& c);
HVector h_vector(const SimplicialComplex& c);
HVector f_to_h(const FVector& f);
FVector h_to_f(const HVector& h);

std::int64_t binomial(int n, int k);

/// All proper subsets of `vertices`; {∅} for a single vertex.
SimplicialComplex simplex_boundary(Face vertices);
/// The full simplex on `vertices`.
SimplicialComplex simplex(Face vertices);

/// Throws OverlappingGroundSets if the ground sets meet.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(int apex, const SimplicialComplex& c);

/// Boundary of the cyclic d-polytope on [n], by Gale's evenness condition.
SimplicialComplex cyclic_boundary(int n, int d);

bool is_pure(const SimplicialComplex& c);

/// Shiftedness relative to the complex's own ground set: F ∈ C, i ∈ F and
/// j ∈ ground with j > i, j ∉ F imply (F - i) + j ∈ C.
bool is_shifted(const SimplicialComplex& c);

/// Relabels vertices through `map` (map[v] is the new label of v; must be
/// injective on the ground set).
SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& map);

/// Order-preserving relabeling of `c` from the vertex set `from` onto [|from|].
/// `from` must contain the ground set.
SimplicialComplex compress_labels(const SimplicialComplex& c, Face from);
/// Inverse of compress_labels: [|onto|] -> onto, order preserving.
SimplicialComplex expand_labels(const SimplicialComplex& c, Face onto);

/// The sub-family of faces of dimension at most k.
SimplicialComplex skeleton(const SimplicialComplex& c, int k);

/// Union of two complexes.
SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

/// Facet-wise containment a ⊆ b.
bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace shiftlab

namespace shiftlab {

/// Minimal non-faces of `c` regarded as a complex on `vertex_set` (which must
/// contain the ground set). Vertices of `vertex_set` outside the ground set
/// show up as singleton non-faces. Sorted graded_less.
std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, Face vertex_set);

}  // namespace shiftlab
