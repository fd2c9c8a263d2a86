#include <doctest.h>

#include "oracles.hpp"
#include "shiftlab/delta.hpp"
#include "shiftlab/error.hpp"

using namespace shiftlab;

namespace {

std::vector<Face> sorted(std::vector<Face> v) {
  std::sort(v.begin(), v.end(), lex_less);
  return v;
}

// Admissibility straight from the definition, over k = 0..d-1.
bool admissible_by_definition(Face f, int n, int d) {
  for (int k = 0; k < d; ++k) {
    if (f.contains(n - k)) continue;
    for (int v = n - d + k; v <= n - k - 1; ++v)
      if (v >= 1 && !f.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("admissible sets") {
  CHECK(is_admissible(Face{4, 5, 6}, 6, 3));
  CHECK_FALSE(is_admissible(Face{1, 2, 3}, 6, 3));
  for (int n = 2; n <= 9; ++n)
    for (int d = 1; d < n; ++d) CHECK(is_admissible(Face::interval(n - d + 1, n), n, d));
  CHECK_THROWS_AS(is_admissible(Face{1, 2}, 6, 3), Error);
  for (int n = 2; n <= 10; ++n) {
    for (int d = 1; d < n; ++d) {
      std::vector<Face> expected;
      for (Face f : k_subsets(n, d))
        if (admissible_by_definition(f, n, d)) expected.push_back(f);
      CHECK(admissible_sets(n, d) == expected);
      CHECK(witness_families(n, d).all() == expected);
    }
  }
}

TEST_CASE("Delta(n,d) examples") {
  CHECK(sorted(build_delta(4, 2).facets()) == sorted({Face{3, 4}, Face{2, 3}, Face{1, 4}, Face{2, 4}}));
  const SimplicialComplex d63 = build_delta(6, 3);
  CHECK(sorted(d63.facets()) == sorted({Face{4, 5, 6}, Face{3, 4, 5}, Face{1, 5, 6}, Face{2, 5, 6}, Face{3, 5, 6},
                                        Face{1, 4, 6}, Face{2, 4, 6}, Face{3, 4, 6}}));
  CHECK(f_vector(d63).counts == std::vector<std::int64_t>{1, 6, 12, 8});
  CHECK(build_delta(5, 0).is_empty_face());
  CHECK_THROWS_AS(build_delta(3, 3), Error);
}

TEST_CASE("Delta(n,d) invariants") {
  for (int n = 2; n <= 9; ++n) {
    for (int d = 1; d < n; ++d) {
      const SimplicialComplex delta = build_delta(n, d);
      CHECK(is_shifted(delta));
      CHECK(is_pure(delta));
      CHECK(delta.dim() == d - 1);
      const HVector h = h_vector(delta);
      for (int i = 0; i <= d; ++i) CHECK(h.h[i] == h.h[d - i]);
      if (d >= 2) CHECK(f_vector(delta) == f_vector(cyclic_boundary(n, d)));
    }
  }
}

TEST_CASE("Delta on a vertex set and the containments") {
  for (int n = 2; n <= 9; ++n) {
    CHECK(build_delta_on(Face::interval(1, n), 1) == build_delta(n, 1));
    for (int d = 0; d < n - 1; ++d) {
      const SimplicialComplex inner = build_delta_on(Face::interval(2, n), d);
      CHECK(contained_in_delta(inner, n, d).contained);
      if (d == 0) continue;
      const SimplicialComplex outer = join(simplex(Face{1, n + 1}), inner);
      CHECK(contained_in_delta(outer, n + 1, d + 2).contained);
    }
  }
}

TEST_CASE("containment certificates") {
  CHECK(contained_in_delta(build_delta(6, 3), 6, 3).contained);
  const ContainmentResult bad = contained_in_delta(SimplicialComplex::generated_by({Face{1, 2, 3}}), 6, 3);
  CHECK_FALSE(bad.contained);
  REQUIRE(bad.offending.has_value());
  CHECK(*bad.offending == Face{1, 2, 3});
}
