#include <doctest.h>

#include "shiftlab/error.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/verify.hpp"

using namespace shiftlab;

TEST_CASE("complex JSON round trip") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const SimplicialComplex c = random_generated(8, 5, 4, seed);
    CHECK(complex_from_json(Json::parse(to_json(c).dump())) == c);
  }
  CHECK(complex_from_json(Json::parse(R"({"facets": [[]]})")).is_empty_face());
  CHECK(to_json(SimplicialComplex::empty_face()).dump() == R"({"ground":[],"facets":[[]]})");
  const SimplicialComplex c = complex_from_json(Json::parse(R"({"ground": [1,2,3], "facets": [[1,2],[2,3]]})"));
  CHECK(c.facets().size() == 2);
}

TEST_CASE("malformed complexes") {
  for (const char* text : {R"({"ground": [1,2,3,4], "facets": [[1,2],[2,3]]})", R"({"facets": []})", R"({"facets": [[0,1]]})",
                           R"({"facets": [[1,65]]})", R"({"facets": [[1,1]]})", R"({"facets": "x"})", R"([1,2])",
                           R"({"ground": [1]})"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(complex_from_json(Json::parse(text)), Error);
  }
}

TEST_CASE("order ideal JSON") {
  const OrderIdeal u = order_ideal_from_json(Json::parse(R"({"m": 2, "monomials": [[0,0],[1,0],[0,1]]})"));
  CHECK(u.m == 2);
  CHECK(u.monomials.size() == 3);
  CHECK(order_ideal_from_json(to_json(u)) == u);
  CHECK_THROWS_AS(order_ideal_from_json(Json::parse(R"({"m": 2, "monomials": [[0,0,1]]})")), Error);
}

TEST_CASE("reports carry seeds and primes") {
  const ShiftReport r = exterior_shift(SimplicialComplex::generated_by({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}}));
  const Json j = to_json(r);
  CHECK(j["agreement"] == true);
  CHECK(j["prime"] == PrimeField::kMersenne61);
  CHECK(j["seeds"].size() == 3);
  CHECK(j["shifted"]["facets"].size() == 4);

  const VerifyReport v = run_suite("example12");
  const Json jv = to_json(v);
  CHECK(jv["suite"] == "example12");
  CHECK(jv["instances"] == 3);
  CHECK(jv["failures"] == 0);
  CHECK(jv["seeds"].size() == 1);
  CHECK_THROWS_AS(run_suite("nope"), Error);
}
