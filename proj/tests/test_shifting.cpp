#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "shiftlab/delta.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/local_moves.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/shifting.hpp"

using namespace shiftlab;

namespace {

SimplicialComplex four_cycle() {
  return SimplicialComplex::generated_by({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
}

Monomial mono(std::initializer_list<int> e) {
  const std::vector<int> v(e);
  return Monomial::from_exponents(v);
}

Monomial sq(Face f) { return Monomial::squarefree(f); }

}  // namespace

TEST_CASE("Stanley-Reisner ideals") {
  CHECK(stanley_reisner_ideal(four_cycle()).generators() == std::vector<Monomial>{sq(Face{1, 3}), sq(Face{2, 4})});
  CHECK(stanley_reisner_ideal(simplex(Face::interval(1, 4))).generators().empty());
  const SimplicialComplex sigma = unite(four_cycle(), SimplicialComplex::generated_by({Face{1, 3}}));
  const MonomialIdeal is = stanley_reisner_ideal(sigma);
  const std::vector<Monomial> expected{sq(Face{2, 4}), sq(Face{1, 2, 3}), sq(Face{1, 3, 4})};
  CHECK(is.generators().size() == 3);
  for (const Monomial& g : expected) CHECK(std::find(is.generators().begin(), is.generators().end(), g) != is.generators().end());
  CHECK(stanley_reisner_ideal(four_cycle(), 5).generators().front() == Monomial::variable(5));
}

TEST_CASE("exterior shift of the 4-cycle") {
  const ShiftReport r = exterior_shift(four_cycle());
  CHECK(r.shifted == build_delta(4, 2));
  CHECK(r.agreement);
  CHECK(r.seeds.size() == 3);
  ShiftOptions exact;
  exact.exact = true;
  CHECK(exterior_shift(four_cycle(), exact).shifted == build_delta(4, 2));
  CHECK(symmetric_shift(four_cycle(), exact).shifted == build_delta(4, 2));
  ShiftOptions small;
  small.prime = 2147483647;
  CHECK(exterior_shift(four_cycle(), small).shifted == build_delta(4, 2));
}

TEST_CASE("shifts of cyclic polytopes") {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 3}}) {
    CHECK(exterior_shift(cyclic_boundary(n, d)).shifted == build_delta(n, d));
    CHECK(symmetric_shift(cyclic_boundary(n, d)).shifted == build_delta(n, d));
  }
}

TEST_CASE("shifted complexes are fixed") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const SimplicialComplex s = random_shifted_pure(6, 1 + static_cast<int>(seed % 4), 2, seed);
    REQUIRE(is_shifted(s));
    CHECK(exterior_shift(s).shifted == s);
    CHECK(symmetric_shift(s).shifted == s);
  }
}

TEST_CASE("Hilbert bookkeeping of the Gin computation") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SimplicialComplex c = random_generated(6, 5, 4, seed);
    const ShiftReport r = symmetric_shift(c);
    const MonomialIdeal ideal = stanley_reisner_ideal(compress_labels(c, c.ground()));
    for (const DegreeData& d : r.degrees) {
      int count = 0;
      const std::vector<Monomial> ms = monomials_of_degree(c.num_vertices(), d.degree);
      for (const Monomial& m : ms) count += ideal.contains(m);
      CHECK(d.ideal_dimension == count);
      CHECK(d.total_dimension == static_cast<int>(ms.size()));
    }
    CHECK(f_vector(r.shifted) == f_vector(c));
    CHECK(is_shifted(r.shifted));
  }
  ShiftOptions o;
  o.degree_bound = 1;
  CHECK_THROWS_AS(exterior_shift(four_cycle(), o), Error);
}

TEST_CASE("generic initial ideals") {
  const MonomialIdeal ideal(4, {sq(Face{1, 3}), sq(Face{2, 4})});
  const MonomialIdeal gin = gin_polynomial(ideal, 3);
  CHECK(gin.generators() == std::vector<Monomial>{mono({2, 0, 0, 0}), mono({1, 1, 0, 0}), mono({0, 3, 0, 0})});
  std::vector<Monomial> phi;
  for (const Monomial& g : gin.generators()) phi.push_back(squarefree_phi(g));
  CHECK(complex_of_squarefree_ideal(MonomialIdeal(4, phi), 4, 2) == build_delta(4, 2));
  CHECK(MonomialIdeal(4, phi) == stanley_reisner_ideal(build_delta(4, 2)));
  CHECK(gin_polynomial(MonomialIdeal(3, {}), 3).generators().empty());
  const MonomialIdeal cubic(1, {mono({3})});
  CHECK(gin_polynomial(cubic, 3) == cubic);
  CHECK_THROWS_AS(gin_polynomial(cubic, 2), Error);
}

TEST_CASE("nongeneric shifting") {
  const PrimeField f;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const SimplicialComplex c = random_generated(5, 5, 4, seed);
    const int n = c.ground().max();
    CHECK(nongeneric_shift(c, identity_matrix(f, n)) == c);
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (!c.ground().contains(i) || !c.ground().contains(j)) continue;
        CHECK(nongeneric_shift(c, elementary_map(n, i, j)) == shift_ij(c, i, j));
      }
    }
    if (c.ground() == Face::interval(1, n)) {
      CHECK(nongeneric_shift(c, random_invertible(f, n, seed)) == exterior_shift(c).shifted);
    }
  }
}

TEST_CASE("initial ideal under an elementary map") {
  const SimplicialComplex gamma = four_cycle();
  CHECK(initial_ideal_of_elementary_map(gamma, 1, 2) == stanley_reisner_ideal(shift_ij(gamma, 1, 2)));
  const SimplicialComplex sigma = unite(gamma, SimplicialComplex::generated_by({Face{1, 3}}));
  const MonomialIdeal in_sigma = initial_ideal_of_elementary_map(sigma, 1, 2);
  const auto& gens = in_sigma.generators();
  CHECK(std::find(gens.begin(), gens.end(), mono({2, 0, 1, 0})) != gens.end());
  for (int n = 3; n <= 5; ++n) {
    const SimplicialComplex b = simplex_boundary(Face::interval(1, n));
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Monomial expected = sq(Face::interval(1, n) - Face{i, j}) * Monomial::variable(i) * Monomial::variable(i);
        const MonomialIdeal init = initial_ideal_of_elementary_map(b, i, j);
        const auto& g = init.generators();
        CHECK(std::find(g.begin(), g.end(), expected) != g.end());
      }
    }
  }
}

TEST_CASE("extra variables and cones") {
  const SimplicialComplex edge = SimplicialComplex::generated_by({Face{2, 3}});
  CHECK_NOTHROW(gin_with_extra_variables(edge, 2, 4));
  const SimplicialComplex shifted_edge = SimplicialComplex::generated_by({Face{3, 4}});
  CHECK(exterior_shift(edge, ShiftOptions{.vertex_set = Face::interval(1, 4)}).shifted == shifted_edge);
  CHECK(shift_of_cone(four_cycle()) == cone(5, build_delta(4, 2)));
  CHECK(shift_of_cone(SimplicialComplex::empty_face()) == SimplicialComplex::generated_by({Face{1}}));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SimplicialComplex c = random_generated(5, 4, 3, seed);
    CHECK_NOTHROW(shift_of_cone(c));
  }
}

TEST_CASE("containment after an elementary move") {
  // If the exterior shift of Shift_ij(C) lies in Δ(n,d) then so does the
  // exterior shift of C.
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const int n = 6, d = 3;
    const SimplicialComplex c = random_complex(n, d - 1, 0.5, seed);
    if (c.ground() != Face::interval(1, n)) continue;
    const ShiftOptions o{.vertex_set = Face::interval(1, n)};
    const bool moved = contained_in_delta(exterior_shift(shift_ij(c, 1, 2), o).shifted, n, d).contained;
    const bool original = contained_in_delta(exterior_shift(c, o).shifted, n, d).contained;
    if (moved) CHECK(original);
  }
}

TEST_CASE("relabeled inputs shift identically") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const SimplicialComplex c = random_generated(6, 5, 4, seed);
    const SimplicialComplex p = random_relabel(c, seed);
    CHECK(compress_labels(exterior_shift(c).shifted, c.ground()) == compress_labels(exterior_shift(p).shifted, p.ground()));
  }
}
