#pragma once

#include <optional>
#include <vector>

#include "shiftlab/complex.hpp"

namespace shiftlab {

enum class MoveKind { Contraction, Shift, StellarInverse };

/// An ordered vertex pair i < j together with what is being done along it.
struct EdgeMove {
  int i = 0;
  int j = 0;
  MoveKind kind = MoveKind::Contraction;

  EdgeMove(int i_, int j_, MoveKind k = MoveKind::Contraction);
  Face edge() const { return Face{i, j}; }
  friend bool operator==(const EdgeMove&, const EdgeMove&) = default;
};

/// lk_C(F) on ground(C) - F. Throws FaceNotInComplex.
SimplicialComplex link(const SimplicialComplex& c, Face f);

/// Identify i with j (i < j), keeping the label j.
SimplicialComplex contraction(const SimplicialComplex& c, int i, int j);

struct LinkConditionResult {
  bool holds = false;
  /// When the condition fails: a face of lk(i) ∩ lk(j) that is not in
  /// lk({i,j}). For {i,j} ∉ C this is ∅.
  std::optional<Face> witness;
  explicit operator bool() const { return holds; }
};

/// lk(i) ∩ lk(j) = lk({i,j}); false whenever {i,j} is not a face.
LinkConditionResult link_condition(const SimplicialComplex& c, int i, int j);

/// No minimal non-face of C contains both i and j.
bool link_condition_via_ideal(const SimplicialComplex& c, int i, int j);

/// Erdős–Ko–Rado compression: every face F with i ∈ F, j ∉ F whose image
/// (F - i) + j is missing gets replaced by that image.
SimplicialComplex shift_ij(const SimplicialComplex& c, int i, int j);

/// All faces of Shift_ij(C), sorted graded_less.
std::vector<Face> shift_ij_faces(const SimplicialComplex& c, int i, int j);

/// Faces of C_C(ij) ∪ { {i} ∪ F : F ∈ {j} * lk({i,j}) }, sorted graded_less.
/// When {i,j} ∉ C the second part is empty.
std::vector<Face> contraction_link_union_faces(const SimplicialComplex& c, int i, int j);

struct ShiftDecomposition {
  SimplicialComplex contraction_part;
  SimplicialComplex link_part;  ///< {j} * lk({i,j})
};

/// Splits Shift_ij(C) into its contraction and link parts and checks that
/// their union reproduces the shift. Throws LinkConditionViolated.
ShiftDecomposition decompose_shift(const SimplicialComplex& c, int i, int j);

/// Stellar subdivision at F with the new vertex max(ground) + 1.
SimplicialComplex stellar_subdivision(const SimplicialComplex& c, Face f);

}  // namespace shiftlab
