#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here works on explicit face sets and avoids the library's
// algorithms.

#include <algorithm>
#include <set>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/monomial.hpp"

namespace oracle {

using shiftlab::Face;
using shiftlab::SimplicialComplex;

inline std::set<Face> faces(const SimplicialComplex& c) {
  std::set<Face> out;
  for (Face f : c.facets()) shiftlab::for_each_subset(f, [&](Face s) { out.insert(s); });
  return out;
}

inline std::set<Face> link(const std::set<Face>& fs, Face f) {
  std::set<Face> out;
  for (Face g : fs)
    if (g.disjoint(f) && fs.count(g | f)) out.insert(g);
  return out;
}

inline bool link_condition(const SimplicialComplex& c, int i, int j) {
  const std::set<Face> fs = faces(c);
  if (!fs.count(Face{i, j})) return false;
  const std::set<Face> li = link(fs, Face{i}), lj = link(fs, Face{j}), lij = link(fs, Face{i, j});
  std::set<Face> both;
  std::set_intersection(li.begin(), li.end(), lj.begin(), lj.end(), std::inserter(both, both.end()));
  return both == lij;
}

inline std::set<Face> shift_ij(const SimplicialComplex& c, int i, int j) {
  const std::set<Face> fs = faces(c);
  std::set<Face> out;
  for (Face f : fs) {
    const Face g = f.without(i).with(j);
    out.insert(f.contains(i) && !f.contains(j) && !fs.count(g) ? g : f);
  }
  return out;
}

/// Gale evenness: a d-subset F of [n] is a facet of the cyclic polytope iff
/// every two elements of [n] - F enclose an even number of elements of F.
inline std::vector<Face> gale_facets(int n, int d) {
  std::vector<Face> out;
  for (Face f : shiftlab::k_subsets(n, d)) {
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a) {
      for (int b = a + 1; b <= n && ok; ++b) {
        if (f.contains(a) || f.contains(b)) continue;
        int between = 0;
        for (int v = a + 1; v < b; ++v) between += f.contains(v);
        ok = between % 2 == 0;
      }
    }
    if (ok) out.push_back(f);
  }
  return out;
}

/// Replacement closure on [n]: F ∈ C, i ∈ F, i < j <= n, j ∉ F implies
/// (F - i) + j ∈ C.
inline bool shifted_on(const std::set<Face>& fs, int n) {
  for (Face f : fs)
    for (int i : f.vertices())
      for (int j = i + 1; j <= n; ++j)
        if (!f.contains(j) && !fs.count(f.without(i).with(j))) return false;
  return true;
}

inline std::vector<std::int64_t> h_of(const SimplicialComplex& c) {
  const std::set<Face> fs = faces(c);
  const int d = c.dim() + 1;
  std::vector<std::int64_t> f(d + 1, 0);
  for (Face g : fs) ++f[g.size()];
  std::vector<std::int64_t> h(d + 1, 0);
  for (int k = 0; k <= d; ++k) {
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = (k - i) % 2 == 0 ? 1 : -1;
      h[k] += sign * shiftlab::binomial(d - i, k - i) * f[i];
    }
  }
  return h;
}

// Divisor-closed, contains every variable, shifted: checked from scratch.
inline bool valid_order_ideal(const std::set<shiftlab::Monomial>& u, int m) {
  if (!u.count(shiftlab::Monomial{})) return false;
  for (int i = 1; i <= m; ++i)
    if (!u.count(shiftlab::Monomial::variable(i))) return false;
  for (const shiftlab::Monomial& w : u) {
    for (int i = 1; i <= m; ++i) {
      if (w.exponent(i) == 0) continue;
      const shiftlab::Monomial v = *w.divide_by_variable(i);
      if (!u.count(v)) return false;
      for (int j = i + 1; j <= m; ++j)
        if (!u.count(v.times(j))) return false;
    }
  }
  return true;
}

/// All valid order ideals on [m] of degree at most cap, by subset search.
inline std::vector<std::set<shiftlab::Monomial>> order_ideals(int m, int cap) {
  std::vector<shiftlab::Monomial> optional;
  for (int k = 2; k <= cap; ++k)
    for (const shiftlab::Monomial& w : shiftlab::monomials_of_degree(m, k)) optional.push_back(w);
  std::vector<std::set<shiftlab::Monomial>> out;
  if (cap < 1 && m > 0) return out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    std::set<shiftlab::Monomial> u{shiftlab::Monomial{}};
    for (int i = 1; i <= m; ++i) u.insert(shiftlab::Monomial::variable(i));
    for (std::size_t b = 0; b < optional.size(); ++b)
      if ((mask >> b) & 1U) u.insert(optional[b]);
    if (valid_order_ideal(u, m)) out.push_back(u);
  }
  return out;
}

}  // namespace oracle
