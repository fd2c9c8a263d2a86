#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/io.hpp"
#include "shiftlab/squeezed.hpp"

namespace shiftlab {

struct InstanceResult {
  std::string name;
  bool pass = false;
  std::string detail;
  /// Enough to replay the instance: input, seed and failing step.
  Json certificate;
};

struct VerifyReport {
  std::string suite;
  std::vector<InstanceResult> instances;
  std::vector<std::uint64_t> seeds;
  std::uint64_t prime = PrimeField::kMersenne61;
  double seconds = 0;

  int failures() const;
  bool passed() const { return !instances.empty() && failures() == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  int trials = 3;
  std::uint64_t prime = PrimeField::kMersenne61;
  int max_n = 7;            ///< kalai-cyclic
  int n = 6;                ///< main2
  int d = 3;                ///< main2
  std::vector<int> sizes;   ///< lemma21 vertex counts; default {4,5,6,7}
  int cases = 500;          ///< random instances per size (lemma21, properties, elementary)
  int cm_cases = 100;       ///< slp-agreement random CM complexes
  int max_sphere_n = 8;     ///< squeezed-sphere suites
  std::vector<int> sphere_dims;  ///< default {2,3,4}

  ShiftOptions shift_options() const;
};

struct SqueezedInstance {
  OrderIdeal u;
  int d = 0;
  int n = 0;
  SimplicialComplex sphere = SimplicialComplex::empty_face();
};

/// Every S_d(U) with d in `dims`, d+1 <= n <= max_n and U of degree at most
/// cap(d) (d/2 when `half`, else (d+1)/2).
std::vector<SqueezedInstance> squeezed_spheres(const std::vector<int>& dims, int max_n, bool half);

std::vector<std::string> suite_names();

/// Throws InvalidParameters for an unknown suite.
VerifyReport run_suite(const std::string& name, const SuiteOptions& opts = {});

Json to_json(const VerifyReport& r);

}  // namespace shiftlab
