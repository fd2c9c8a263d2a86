#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "shiftlab/complex.hpp"

namespace shiftlab {

/// The (dim-1)-skeleton of the simplex on [n] together with a random
/// `density` fraction of its dim-faces (at least one).
SimplicialComplex random_complex(int n, int dim, double density, std::uint64_t seed);

/// Generated by a random number (1..max_facets) of random faces of [n] with
/// 1..max_size vertices; mixed dimensions are common.
SimplicialComplex random_generated(int n, int max_facets, int max_size, std::uint64_t seed);

/// The shifted closure of random d-subsets of [n]: pure and shifted.
SimplicialComplex random_shifted_pure(int n, int d, int generators, std::uint64_t seed);

struct LabeledComplex {
  std::string recipe;
  SimplicialComplex complex = SimplicialComplex::empty_face();
};

/// A Cohen–Macaulay complex on at most max_vertices vertices, drawn from
/// shifted pure closures, stellar subdivisions of polytope boundaries,
/// cones, joins and squeezed balls and spheres.
LabeledComplex random_cm_complex(int max_vertices, std::uint64_t seed);

/// Relabels the ground set of c by a uniformly random permutation of itself.
SimplicialComplex random_relabel(const SimplicialComplex& c, std::uint64_t seed);

}  // namespace shiftlab
