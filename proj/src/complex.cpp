#include "shiftlab/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

void check_label(int v) {
  if (v < 1 || v > kMaxVertex) {
    throw Error(ErrorKind::InvalidParameters, "vertex label " + std::to_string(v) + " outside [1, 64]");
  }
}

}  // namespace

Face::Face(std::initializer_list<int> vertices) {
  for (int v : vertices) {
    check_label(v);
    bits_ |= std::uint64_t{1} << (v - 1);
  }
}

Face::Face(std::span<const int> vertices) {
  for (int v : vertices) {
    check_label(v);
    bits_ |= std::uint64_t{1} << (v - 1);
  }
}

Face Face::interval(int lo, int hi) {
  Face f;
  for (int v = lo; v <= hi; ++v) f = f.with(v);
  return f;
}

Face Face::with(int v) const {
  check_label(v);
  return from_bits(bits_ | (std::uint64_t{1} << (v - 1)));
}

std::vector<int> Face::vertices() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Face::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

bool lex_less(Face a, Face b) {
  std::uint64_t x = a.bits(), y = b.bits();
  while (x != 0 && y != 0) {
    const int vx = std::countr_zero(x), vy = std::countr_zero(y);
    if (vx != vy) return vx < vy;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

bool graded_less(Face a, Face b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

std::vector<Face> k_subsets(int n, int k) {
  std::vector<Face> out;
  if (k < 0 || k > n) return out;
  for_each_subset(Face::interval(1, n), [&](Face s) {
    if (s.size() == k) out.push_back(s);
  });
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

SimplicialComplex SimplicialComplex::generated_by(std::vector<Face> generators) {
  if (generators.empty()) throw Error(ErrorKind::VoidComplex, "a complex needs at least one face");
  // Larger faces first so each candidate only needs checking against kept ones.
  std::sort(generators.begin(), generators.end(), [](Face a, Face b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.bits() < b.bits();
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  SimplicialComplex c;
  for (Face g : generators) {
    const bool covered =
        std::any_of(c.facets_.begin(), c.facets_.end(), [g](Face f) { return g.subset_of(f); });
    if (!covered) {
      c.facets_.push_back(g);
      c.ground_ = c.ground_ | g;
    }
  }
  std::sort(c.facets_.begin(), c.facets_.end(), graded_less);
  return c;
}

SimplicialComplex SimplicialComplex::empty_face() { return generated_by({Face{}}); }

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> seen;
  for (Face g : facets_) for_each_subset(g, [&](Face s) { seen.insert(s); });
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

std::vector<Face> faces_of_card(const SimplicialComplex& c, int k) {
  std::unordered_set<Face> seen;
  for (Face g : c.facets()) {
    if (g.size() >= k) for_each_subset_of_size(g, k, [&](Face s) { seen.insert(s); });
  }
  std::vector<Face> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FVector f_vector(const SimplicialComplex& c) {
  FVector f;
  f.counts.assign(c.dim() + 2, 0);
  for (Face s : c.faces()) ++f.counts[s.size()];
  return f;
}

HVector f_to_h(const FVector& f) {
  const int d = f.d();
  HVector h;
  h.h.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) {
      const std::int64_t term = binomial(d - j, d - i) * f.counts[j];
      h.h[i] += ((i - j) % 2 == 0) ? term : -term;
    }
  }
  return h;
}

FVector h_to_f(const HVector& h) {
  const int d = h.d();
  FVector f;
  f.counts.assign(d + 1, 0);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= i; ++j) f.counts[i] += binomial(d - j, d - i) * h.h[j];
  }
  return f;
}

HVector h_vector(const SimplicialComplex& c) { return f_to_h(f_vector(c)); }

SimplicialComplex simplex_boundary(Face vertices) {
  if (vertices.empty()) throw Error(ErrorKind::InvalidParameters, "simplex boundary needs a vertex");
  std::vector<Face> gens;
  for (int v : vertices.vertices()) gens.push_back(vertices.without(v));
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex simplex(Face vertices) { return SimplicialComplex::generated_by({vertices}); }

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!a.ground().disjoint(b.ground())) {
    throw Error(ErrorKind::OverlappingGroundSets,
                a.ground().to_string() + " meets " + b.ground().to_string());
  }
  std::vector<Face> gens;
  gens.reserve(a.facets().size() * b.facets().size());
  for (Face f : a.facets())
    for (Face g : b.facets()) gens.push_back(f | g);
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex cone(int apex, const SimplicialComplex& c) {
  if (c.ground().contains(apex)) {
    throw Error(ErrorKind::OverlappingGroundSets, "apex " + std::to_string(apex) + " already a vertex");
  }
  return join(simplex(Face{apex}), c);
}

SimplicialComplex cyclic_boundary(int n, int d) {
  if (d < 1 || n < d + 1 || n > kMaxVertex) {
    throw Error(ErrorKind::InvalidParameters, "cyclic polytope needs n >= d+1 >= 2");
  }
  std::vector<Face> gens;
  for (Face f : k_subsets(n, d)) {
    const std::vector<int> outside = (Face::interval(1, n) - f).vertices();
    bool even = true;
    for (std::size_t a = 0; a + 1 < outside.size() && even; ++a) {
      for (std::size_t b = a + 1; b < outside.size() && even; ++b) {
        const int between = (f & Face::interval(outside[a] + 1, outside[b] - 1)).size();
        even = between % 2 == 0;
      }
    }
    if (even) gens.push_back(f);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

bool is_pure(const SimplicialComplex& c) {
  const int k = c.facets().front().size();
  return std::all_of(c.facets().begin(), c.facets().end(), [k](Face f) { return f.size() == k; });
}

bool is_shifted(const SimplicialComplex& c) {
  const std::vector<int> ground = c.ground().vertices();
  for (Face f : c.faces()) {
    for (int i : f.vertices()) {
      for (int j : ground) {
        if (j <= i || f.contains(j)) continue;
        if (!c.contains(f.without(i).with(j))) return false;
      }
    }
  }
  return true;
}

SimplicialComplex relabel(const SimplicialComplex& c, const std::vector<int>& map) {
  std::vector<Face> gens;
  gens.reserve(c.facets().size());
  for (Face f : c.facets()) {
    Face g;
    for (int v : f.vertices()) g = g.with(map.at(v));
    gens.push_back(g);
  }
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex compress_labels(const SimplicialComplex& c, Face from) {
  if (!c.ground().subset_of(from)) {
    throw Error(ErrorKind::InvalidParameters, "vertex set does not contain the ground set");
  }
  std::vector<int> map(kMaxVertex + 1, 0);
  int next = 1;
  for (int v : from.vertices()) map[v] = next++;
  return relabel(c, map);
}

SimplicialComplex expand_labels(const SimplicialComplex& c, Face onto) {
  std::vector<int> map(kMaxVertex + 1, 0);
  int next = 1;
  for (int v : onto.vertices()) map[next++] = v;
  if (!c.ground().subset_of(Face::interval(1, onto.size()))) {
    throw Error(ErrorKind::InvalidParameters, "complex uses labels beyond the target vertex set");
  }
  return relabel(c, map);
}

SimplicialComplex skeleton(const SimplicialComplex& c, int k) {
  std::vector<Face> gens;
  for (Face f : c.faces())
    if (f.size() <= k + 1) gens.push_back(f);
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return SimplicialComplex::generated_by(std::move(gens));
}

bool is_subcomplex(const SimplicialComplex& a, const SimplicialComplex& b) {
  return std::all_of(a.facets().begin(), a.facets().end(), [&](Face f) { return b.contains(f); });
}

}  // namespace shiftlab

namespace shiftlab {

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c, Face vertex_set) {
  if (!c.ground().subset_of(vertex_set)) {
    throw Error(ErrorKind::InvalidParameters, "vertex set does not contain the ground set");
  }
  const std::vector<int> verts = vertex_set.vertices();
  std::unordered_set<Face> found;
  for (Face f : c.faces()) {
    for (int v : verts) {
      if (f.contains(v)) continue;
      const Face g = f.with(v);
      if (found.contains(g) || c.contains(g)) continue;
      bool minimal = true;
      for (int w : g.vertices()) {
        if (!c.contains(g.without(w))) {
          minimal = false;
          break;
        }
      }
      if (minimal) found.insert(g);
    }
  }
  std::vector<Face> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), graded_less);
  return out;
}

}  // namespace shiftlab
