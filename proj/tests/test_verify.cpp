#include <doctest.h>

#include "shiftlab/verify.hpp"

using namespace shiftlab;

namespace {

void check_suite(const std::string& name, const SuiteOptions& o) {
  const VerifyReport r = run_suite(name, o);
  CAPTURE(name);
  for (const InstanceResult& i : r.instances) {
    CAPTURE(i.name);
    CAPTURE(i.detail);
    CHECK(i.pass);
  }
  CHECK(r.passed());
}

}  // namespace

TEST_CASE("suites at reduced scale") {
  SuiteOptions o;
  o.max_n = 6;
  o.sizes = {4, 6};
  o.cases = 25;
  o.cm_cases = 8;
  o.max_sphere_n = 6;
  o.n = 5;
  o.d = 2;
  for (const std::string& name : suite_names()) check_suite(name, o);
}

TEST_CASE("squeezed sphere catalogue") {
  const std::vector<SqueezedInstance> half = squeezed_spheres({2, 3, 4}, 8, true);
  const std::vector<SqueezedInstance> full = squeezed_spheres({2, 3, 4}, 8, false);
  CHECK(half.size() < full.size());
  for (const SqueezedInstance& s : half) CHECK(2 * s.u.max_degree() <= s.d);
}

TEST_CASE("suite names") {
  const std::vector<std::string> names = suite_names();
  CHECK(names.size() == 10);
  for (const char* n : {"lemma21", "lemma52", "main1", "main2", "kalai-cyclic", "properties-s1s4", "slp-agreement"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
}
