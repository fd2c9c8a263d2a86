#include "shiftlab/local_moves.hpp"

#include <algorithm>
#include <unordered_set>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

void require_vertices(const SimplicialComplex& c, int i, int j) {
  if (i >= j) throw Error(ErrorKind::InvalidParameters, "edge moves need i < j");
  for (int v : {i, j}) {
    if (v < 1 || v > kMaxVertex || !c.ground().contains(v)) {
      throw Error(ErrorKind::VertexNotPresent, "vertex " + std::to_string(v) + " is not in the complex");
    }
  }
}

std::vector<Face> sorted_faces(std::unordered_set<Face>&& set) {
  std::vector<Face> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

}  // namespace

EdgeMove::EdgeMove(int i_, int j_, MoveKind k) : i(i_), j(j_), kind(k) {
  if (!(1 <= i && i < j && j <= kMaxVertex)) {
    throw Error(ErrorKind::InvalidParameters, "edge moves need 1 <= i < j <= 64");
  }
}

SimplicialComplex link(const SimplicialComplex& c, Face f) {
  std::vector<Face> gens;
  for (Face g : c.facets())
    if (f.subset_of(g)) gens.push_back(g - f);
  if (gens.empty()) throw Error(ErrorKind::FaceNotInComplex, f.to_string());
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex contraction(const SimplicialComplex& c, int i, int j) {
  require_vertices(c, i, j);
  std::vector<Face> gens;
  gens.reserve(c.facets().size());
  for (Face g : c.facets()) gens.push_back(g.contains(i) ? g.without(i).with(j) : g);
  return SimplicialComplex::generated_by(std::move(gens));
}

LinkConditionResult link_condition(const SimplicialComplex& c, int i, int j) {
  require_vertices(c, i, j);
  const Face ij{i, j};
  if (!c.contains(ij)) return {false, Face{}};
  // G ∈ lk(i) ∩ lk(j) means G ∌ i,j with G+i and G+j faces.
  for (Face f : c.faces()) {
    if (!f.contains(i) || f.contains(j)) continue;
    const Face g = f.without(i);
    if (c.contains(g.with(j)) && !c.contains(g | ij)) return {false, g};
  }
  return {true, std::nullopt};
}

bool link_condition_via_ideal(const SimplicialComplex& c, int i, int j) {
  const Face ij{i, j};
  const std::vector<Face> gens = minimal_nonfaces(c, c.ground() | ij);
  return std::none_of(gens.begin(), gens.end(), [ij](Face g) { return ij.subset_of(g); });
}

std::vector<Face> shift_ij_faces(const SimplicialComplex& c, int i, int j) {
  require_vertices(c, i, j);
  std::unordered_set<Face> out;
  for (Face f : c.faces()) {
    if (f.contains(i) && !f.contains(j)) {
      const Face moved = f.without(i).with(j);
      out.insert(c.contains(moved) ? f : moved);
    } else {
      out.insert(f);
    }
  }
  return sorted_faces(std::move(out));
}

SimplicialComplex shift_ij(const SimplicialComplex& c, int i, int j) {
  return SimplicialComplex::generated_by(shift_ij_faces(c, i, j));
}

std::vector<Face> contraction_link_union_faces(const SimplicialComplex& c, int i, int j) {
  const SimplicialComplex contracted = contraction(c, i, j);
  std::unordered_set<Face> out;
  for (Face f : contracted.faces()) out.insert(f);
  const Face ij{i, j};
  if (c.contains(ij)) {
    for (Face g : link(c, ij).faces()) {
      out.insert(g.with(i));
      out.insert(g | ij);
    }
  }
  return sorted_faces(std::move(out));
}

ShiftDecomposition decompose_shift(const SimplicialComplex& c, int i, int j) {
  const LinkConditionResult lc = link_condition(c, i, j);
  if (!lc) {
    throw Error(ErrorKind::LinkConditionViolated,
                "edge {" + std::to_string(i) + "," + std::to_string(j) + "}, witness " +
                    lc.witness.value_or(Face{}).to_string());
  }
  ShiftDecomposition parts{contraction(c, i, j), join(simplex(Face{j}), link(c, Face{i, j}))};
  if (contraction_link_union_faces(c, i, j) != shift_ij_faces(c, i, j)) {
    throw Error(ErrorKind::IdentityViolated, "contraction and link parts do not reassemble Shift_ij");
  }
  return parts;
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& c, Face f) {
  if (f.empty() || !c.contains(f)) throw Error(ErrorKind::FaceNotInComplex, f.to_string());
  const int apex = c.ground().max() + 1;
  if (apex > kMaxVertex) throw Error(ErrorKind::InvalidParameters, "no free vertex label left");
  std::vector<Face> gens;
  for (Face g : c.faces())
    if (!f.subset_of(g)) gens.push_back(g);
  const SimplicialComplex lk = link(c, f);
  for (Face l : lk.facets())
    for (int v : f.vertices()) gens.push_back(f.without(v) | l.with(apex));
  return SimplicialComplex::generated_by(std::move(gens));
}

}  // namespace shiftlab
