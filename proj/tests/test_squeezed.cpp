#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "shiftlab/delta.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/local_moves.hpp"
#include "shiftlab/squeezed.hpp"

using namespace shiftlab;

namespace {

Monomial mono(std::initializer_list<int> e) {
  const std::vector<int> v(e);
  return Monomial::from_exponents(v);
}

std::vector<Face> sorted(std::vector<Face> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

std::set<Monomial> as_set(const std::vector<Monomial>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("order ideal validation") {
  CHECK(validate_order_ideal(OrderIdeal(1, {Monomial{}, mono({1}), mono({2})}), 1, 2).valid);
  CHECK_FALSE(validate_order_ideal(OrderIdeal(2, {Monomial{}, mono({1, 0}), mono({1, 1})}), 2, 2).valid);
  CHECK(validate_order_ideal(OrderIdeal(0, {Monomial{}}), 0, 0).valid);
  CHECK_FALSE(validate_order_ideal(OrderIdeal(1, {Monomial{}, mono({1}), mono({2})}), 1, 1).valid);
}

TEST_CASE("order ideal enumeration matches brute force") {
  for (int m = 0; m <= 4; ++m) {
    for (int cap = 1; cap <= 3; ++cap) {
      std::vector<Monomial> optional;
      for (int k = 2; k <= cap; ++k)
        for (const Monomial& w : monomials_of_degree(m, k)) optional.push_back(w);
      if (optional.size() > 20) continue;
      std::set<std::set<Monomial>> expected;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
        std::set<Monomial> u{Monomial{}};
        for (int i = 1; i <= m; ++i) u.insert(Monomial::variable(i));
        for (std::size_t b = 0; b < optional.size(); ++b)
          if ((mask >> b) & 1U) u.insert(optional[b]);
        if (oracle::valid_order_ideal(u, m)) expected.insert(u);
      }
      std::set<std::set<Monomial>> got;
      for (const OrderIdeal& u : enumerate_order_ideals(m, cap)) {
        CHECK(validate_order_ideal(u, m, cap).valid);
        got.insert(as_set(u.monomials));
      }
      CHECK(got == expected);
    }
  }
}

TEST_CASE("facets of monomials") {
  CHECK(facet_of_monomial(Monomial{}, 3, 5) == Face{2, 3, 4, 5});
  CHECK(facet_of_monomial(mono({1}), 3, 5) == Face{1, 2, 4, 5});
  CHECK(facet_of_monomial(mono({2}), 3, 5) == Face{1, 2, 3, 4});
  CHECK_THROWS_AS(facet_of_monomial(mono({3}), 3, 5), Error);
  CHECK_THROWS_AS(facet_of_monomial(mono({0, 0, 1}), 3, 5), Error);
}

TEST_CASE("squeezed balls and spheres") {
  for (int d = 1; d <= 5; ++d) {
    CHECK(squeezed_ball(OrderIdeal(0, {Monomial{}}), d, d + 1) == simplex(Face::interval(1, d + 1)));
    CHECK(squeezed_sphere(OrderIdeal(0, {Monomial{}}), d, d + 1) == simplex_boundary(Face::interval(1, d + 1)));
  }
  const OrderIdeal u(1, {Monomial{}, mono({1}), mono({2})});
  const SimplicialComplex b = squeezed_ball(u, 3, 5);
  CHECK(sorted(b.facets()) == sorted({Face{2, 3, 4, 5}, Face{1, 2, 4, 5}, Face{1, 2, 3, 4}}));
  const SimplicialComplex s = ball_boundary(b);
  CHECK(f_vector(s).counts == std::vector<std::int64_t>{1, 5, 9, 6});
  CHECK(h_vector(s).h == std::vector<std::int64_t>{1, 2, 2, 1});
  const SimplicialComplex glued = SimplicialComplex::generated_by({Face{1, 2, 3}, Face{2, 3, 4}});
  CHECK(sorted(ball_boundary(glued).facets()) == sorted({Face{1, 2}, Face{1, 3}, Face{2, 4}, Face{3, 4}}));
  CHECK_THROWS_AS(squeezed_ball(OrderIdeal(1, {Monomial{}}), 3, 5), Error);
}

TEST_CASE("h-vectors of squeezed balls and spheres") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = d + 1; n <= 9; ++n) {
      for (const OrderIdeal& u : enumerate_order_ideals(n - d - 1, (d + 1) / 2)) {
        const SimplicialComplex b = squeezed_ball(u, d, n);
        const SimplicialComplex s = squeezed_sphere(u, d, n);
        const std::vector<std::int64_t> hb = oracle::h_of(b), hs = oracle::h_of(s);
        for (int i = 0; i <= d + 1; ++i) {
          std::int64_t count = 0;
          for (const Monomial& w : u.monomials) count += w.degree() == i;
          REQUIRE(hb[i] == count);
        }
        for (int i = 0; i <= d / 2; ++i) REQUIRE(hs[i] - (i ? hs[i - 1] : 0) == hb[i]);
        for (int i = 0; i <= d; ++i) REQUIRE(hs[i] == hs[d - i]);
        for (Face ridge : faces_of_card(s, d - 1)) {
          int count = 0;
          for (Face f : s.facets()) count += ridge.subset_of(f);
          REQUIRE(count == 2);
        }
      }
    }
  }
}

TEST_CASE("splitting an order ideal") {
  const SplitIdeal a = split_U(OrderIdeal(1, {Monomial{}, mono({1}), mono({2})}));
  CHECK(as_set(a.hat.monomials) == std::set<Monomial>{Monomial{}});
  CHECK(as_set(a.tilde.monomials) == std::set<Monomial>{Monomial{}, mono({1})});
  const SplitIdeal b = split_U(OrderIdeal(2, {Monomial{}, mono({1, 0}), mono({0, 1})}));
  CHECK(as_set(b.hat.monomials) == std::set<Monomial>{Monomial{}, mono({0, 1})});
  CHECK(as_set(b.tilde.monomials) == std::set<Monomial>{Monomial{}});
}

TEST_CASE("Shift_12 of squeezed spheres decomposes") {
  for (int d = 2; d <= 5; ++d) {
    for (int n = d + 2; n <= 9; ++n) {
      for (const OrderIdeal& u : enumerate_order_ideals(n - d - 1, (d + 1) / 2)) {
        const Lemma52Sides sides = lemma52_sides(u, d, n);
        std::vector<Face> brute;
        for (Face f : oracle::shift_ij(sides.sphere, 1, 2)) brute.push_back(f);
        std::sort(brute.begin(), brute.end(), graded_less);
        REQUIRE(sides.shifted_faces == brute);
        REQUIRE(sides.shifted_faces == sides.union_faces);
        REQUIRE(oracle::link_condition(sides.sphere, 1, 2));
      }
    }
  }
}

TEST_CASE("U and L from a complex") {
  const OrderIdeal got = extract_U(build_delta(6, 3), 3);
  CHECK(as_set(got.monomials) == as_set(OrderIdeal(2, {Monomial{}, mono({1}), mono({0, 1})}).monomials));
  for (int d = 2; d <= 4; ++d) {
    CHECK(extract_U(simplex_boundary(Face::interval(1, d + 1)), d).monomials == std::vector<Monomial>{Monomial{}});
  }
  const OrderIdeal u(2, {Monomial{}, mono({1}), mono({0, 1})});
  const std::vector<Monomial> l = L_from_U(u, 3);
  CHECK(as_set(l) == std::set<Monomial>{Monomial{}, mono({0, 0, 1}), mono({0, 0, 2}), mono({0, 0, 3}), mono({1}),
                                        mono({1, 0, 1}), mono({0, 1}), mono({0, 1, 1})});
  CHECK(sorted(facets_from_L(l, 6, 3)) == sorted(build_delta(6, 3).facets()));
  CHECK(as_set(extract_L(squeezed_sphere(u, 3, 6), 3)) == as_set(l));
}

TEST_CASE("realizing shifted complexes by squeezed spheres") {
  const Realization r = realize_squeezed(build_delta(6, 3), 3);
  CHECK(r.sphere.num_vertices() == 6);
  CHECK(as_set(r.u.monomials) == std::set<Monomial>{Monomial{}, mono({1}), mono({0, 1})});
  CHECK(symmetric_shift(r.sphere).shifted == build_delta(6, 3));
  for (int d = 2; d <= 4; ++d) {
    const SimplicialComplex b = simplex_boundary(Face::interval(1, d + 1));
    CHECK(realize_squeezed(b, d).sphere == b);
  }
  const Realization one = realize_squeezed(build_delta(5, 2), 2);
  CHECK(one.sphere.num_vertices() == 5);
  CHECK(one.sphere.dim() == 1);
  CHECK(exterior_shift(one.sphere).shifted == build_delta(5, 2));
  CHECK_THROWS_AS(realize_squeezed(SimplicialComplex::generated_by({Face{1, 2, 3}}), 3), Error);
}

TEST_CASE("targets match brute-force enumeration") {
  for (auto [n, d] : {std::pair{5, 2}, std::pair{6, 3}, std::pair{7, 3}, std::pair{7, 4}}) {
    const std::vector<Face> facets = build_delta(n, d).facets();
    std::set<std::vector<Face>> expected;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << facets.size()); ++mask) {
      std::vector<Face> chosen;
      for (std::size_t b = 0; b < facets.size(); ++b)
        if ((mask >> b) & 1U) chosen.push_back(facets[b]);
      const SimplicialComplex c = SimplicialComplex::generated_by(chosen);
      if (!oracle::shifted_on(oracle::faces(c), n)) continue;
      const std::vector<std::int64_t> h = oracle::h_of(c);
      bool symmetric = true;
      for (int i = 0; i <= d; ++i) symmetric = symmetric && h[i] == h[d - i];
      if (symmetric) expected.insert(c.facets());
    }
    std::set<std::vector<Face>> got;
    for (const SimplicialComplex& c : squeezed_targets(n, d)) got.insert(c.facets());
    CHECK(got == expected);
  }
}
