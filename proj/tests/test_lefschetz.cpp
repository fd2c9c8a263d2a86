#include <doctest.h>

#include "oracles.hpp"
#include "shiftlab/delta.hpp"
#include "shiftlab/lefschetz.hpp"
#include "shiftlab/local_moves.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/sed.hpp"
#include "shiftlab/verify.hpp"

using namespace shiftlab;

namespace {

SimplicialComplex four_cycle() {
  return SimplicialComplex::generated_by({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
}

Monomial mono(std::initializer_list<int> e) {
  const std::vector<int> v(e);
  return Monomial::from_exponents(v);
}

SimplicialComplex s3_stacked() { return squeezed_sphere(OrderIdeal(1, {Monomial{}, mono({1}), mono({2})}), 3, 5); }

void check_sed_nodes(const SimplicialComplex& c, const SedWitness& w) {
  if (w.kind != SedWitness::Kind::Edge) return;
  const SimplicialComplex con = contraction(c, w.i, w.j);
  const SimplicialComplex lk = link(c, Face{w.i, w.j});
  const SlpResult parent = check_slp_direct(c);
  if (check_slp_direct(con).verdict == Verdict::True && check_slp_direct(lk).verdict == Verdict::True) {
    CHECK(parent.verdict == Verdict::True);
    CHECK(is_cm_via_shift(c, ShiftMode::Symmetric));
  }
  check_sed_nodes(con, *w.contraction);
  check_sed_nodes(lk, *w.link);
}

}  // namespace

TEST_CASE("Cohen-Macaulay test through the shift") {
  CHECK(is_cm_via_shift(four_cycle(), ShiftMode::Exterior));
  CHECK(is_cm_via_shift(four_cycle(), ShiftMode::Symmetric));
  const SimplicialComplex mixed = SimplicialComplex::generated_by({Face{1, 2}, Face{3, 4}, Face{5, 6, 7}});
  CHECK_FALSE(is_cm_via_shift(mixed, ShiftMode::Exterior));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(is_cm_via_shift(random_shifted_pure(6, 3, 2, seed), ShiftMode::Symmetric));
  }
}

TEST_CASE("direct strong Lefschetz check") {
  for (int d = 1; d <= 5; ++d) {
    const SlpResult r = check_slp_direct(simplex_boundary(Face::interval(1, d + 1)));
    CHECK(r.verdict == Verdict::True);
    CHECK(std::vector<std::int64_t>(r.profile.dims.begin(), r.profile.dims.begin() + d + 1) == std::vector<std::int64_t>(d + 1, 1));
  }
  const SlpResult s = check_slp_direct(s3_stacked());
  CHECK(s.verdict == Verdict::True);
  CHECK(s.profile.ranks == std::vector<int>{1, 2});

  std::vector<int> shift(65, 0);
  for (int v = 1; v <= 3; ++v) shift[v] = v + 3;
  const SimplicialComplex two = unite(simplex_boundary(Face{1, 2, 3}), relabel(simplex_boundary(Face{1, 2, 3}), shift));
  CHECK(check_slp_direct(two).verdict == Verdict::False);
  CHECK(check_slp_via_shift(two).verdict == Verdict::False);
}

TEST_CASE("strong Lefschetz check through the shift") {
  for (const SqueezedInstance& s : squeezed_spheres({2, 3}, 7, true)) CHECK(check_slp_via_shift(s.sphere).verdict == Verdict::True);
  const SlpResult cone_result = check_slp_via_shift(cone(9, four_cycle()));
  CHECK(cone_result.verdict == Verdict::False);
  CHECK_FALSE(cone_result.reason.empty());
  for (int n = 4; n <= 7; ++n) CHECK(check_slp_via_shift(build_delta(n, 3)).verdict == Verdict::True);
  CHECK(check_slp_via_shift(SimplicialComplex::empty_face()).verdict == Verdict::True);
}

TEST_CASE("quotient dimensions follow the h-vector") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const LabeledComplex lc = random_cm_complex(7, seed);
    INFO(lc.recipe);
    const SlpResult r = check_slp_direct(lc.complex);
    const std::vector<std::int64_t> h = oracle::h_of(lc.complex);
    for (std::size_t k = 0; k < h.size(); ++k) CHECK((k < r.profile.dims.size() ? r.profile.dims[k] : 0) == h[k]);
  }
}

TEST_CASE("Lefschetz through the edge decomposition") {
  for (const SqueezedInstance& s : squeezed_spheres({2, 3, 4}, 7, true)) {
    const auto w = is_sed(s.sphere);
    REQUIRE(w.has_value());
    check_sed_nodes(s.sphere, **w);
    CHECK(check_slp_direct(s.sphere).verdict == Verdict::True);
    CHECK(is_cm_via_shift(s.sphere, ShiftMode::Exterior));
  }
}

TEST_CASE("initial ideal spot checks") {
  std::vector<WiebeInstance> cases;
  cases.push_back({four_cycle(), 1, 2});
  for (const SqueezedInstance& s : squeezed_spheres({2, 3}, 6, true))
    if (s.n >= s.d + 2) cases.push_back({s.sphere, 1, 2});
  const std::vector<WiebeInstance> out = wiebe_spotcheck(cases);
  int complete = 0;
  for (const WiebeInstance& w : out) {
    CHECK(w.consistent);
    complete += w.initial_complete;
  }
  CHECK(complete > 0);
  CHECK(out.front().initial_complete);
  CHECK(out.front().initial_slp);
  CHECK(out.front().original_slp);
}
