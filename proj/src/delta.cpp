#include "shiftlab/delta.hpp"

#include <algorithm>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

void check_params(int n, int d) {
  if (!(n > d && d >= 0) || n > kMaxVertex) {
    throw Error(ErrorKind::InvalidParameters, "Δ(n,d) needs n > d >= 0");
  }
}

std::vector<Face> sorted_unique(std::vector<Face> v) {
  std::sort(v.begin(), v.end(), lex_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

bool is_admissible(Face f, int n, int d) {
  if (f.size() != d || !f.subset_of(Face::interval(1, n))) {
    throw Error(ErrorKind::WrongCardinality, f.to_string() + " is not a " + std::to_string(d) +
                                                 "-subset of [" + std::to_string(n) + "]");
  }
  for (int k = 0; k < n; ++k) {
    if (f.contains(n - k)) continue;
    if (!Face::interval(n - d + k, n - k - 1).subset_of(f)) return false;
  }
  return true;
}

std::vector<Face> AdmissibleFamily::all() const {
  std::vector<Face> out;
  for (const auto& w : by_index) out.insert(out.end(), w.begin(), w.end());
  return sorted_unique(std::move(out));
}

AdmissibleFamily witness_families(int n, int d) {
  check_params(n, d);
  AdmissibleFamily fam{n, d, std::vector<std::vector<Face>>(d + 1)};
  if (d == 0) {
    fam.by_index[0] = {Face{}};
    return fam;
  }
  for (int i = 0; 2 * i <= d; ++i) {
    const Face top = Face::interval(n - d + i, n);
    const std::vector<Face> tails = k_subsets(n - d + i - 1, i);
    std::vector<Face> low, high;
    for (Face t : tails) {
      low.push_back(top.without(n - d + i) | t);
      high.push_back(top.without(n - i) | t);
    }
    fam.by_index[i] = sorted_unique(std::move(low));
    // For d even and i = d/2 both formulas coincide.
    fam.by_index[d - i] = sorted_unique(std::move(high));
  }
  return fam;
}

std::vector<Face> admissible_sets(int n, int d) {
  check_params(n, d);
  std::vector<Face> out;
  for (Face f : k_subsets(n, d))
    if (is_admissible(f, n, d)) out.push_back(f);
  return out;
}

SimplicialComplex build_delta(int n, int d) {
  check_params(n, d);
  if (d == 0) return SimplicialComplex::empty_face();
  std::vector<Face> facets = witness_families(n, d).all();
  if (facets != admissible_sets(n, d)) {
    throw Error(ErrorKind::IdentityViolated, "W_i(n,d) union differs from the admissible sets");
  }
  return SimplicialComplex::generated_by(std::move(facets));
}

SimplicialComplex build_delta_on(Face vertices, int d) {
  check_params(vertices.size(), d);
  return expand_labels(build_delta(vertices.size(), d), vertices);
}

ContainmentResult contained_in_delta(const SimplicialComplex& c, int n, int d) {
  if (!c.ground().subset_of(Face::interval(1, n))) return {false, c.facets().back()};
  const SimplicialComplex delta = build_delta(n, d);
  for (Face f : c.facets()) {
    if (!delta.contains(f)) return {false, f};
  }
  return {true, std::nullopt};
}

}  // namespace shiftlab
