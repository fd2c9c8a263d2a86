#include "shiftlab/random_complex.hpp"

#include <algorithm>
#include <cmath>

#include "shiftlab/error.hpp"
#include "shiftlab/local_moves.hpp"
#include "shiftlab/squeezed.hpp"

namespace shiftlab {

namespace {

template <class Rng>
int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class Rng>
Face random_subset(Rng& rng, int n, int k) {
  std::vector<int> labels(n);
  for (int v = 1; v <= n; ++v) labels[v - 1] = v;
  std::shuffle(labels.begin(), labels.end(), rng);
  Face f;
  for (int a = 0; a < k; ++a) f = f.with(labels[a]);
  return f;
}

template <class Rng>
SimplicialComplex random_subdivisions(SimplicialComplex c, int max_vertices, Rng& rng) {
  const int steps = uniform(rng, 0, std::max(0, max_vertices - c.num_vertices()));
  for (int s = 0; s < steps; ++s) {
    const std::vector<Face> faces = c.faces();
    std::vector<Face> nonempty;
    for (Face f : faces)
      if (!f.empty()) nonempty.push_back(f);
    c = stellar_subdivision(c, nonempty[uniform(rng, 0, static_cast<int>(nonempty.size()) - 1)]);
  }
  return c;
}

}  // namespace

SimplicialComplex random_complex(int n, int dim, double density, std::uint64_t seed) {
  if (n < 1 || dim < 0 || dim >= n || n > kMaxVertex || density < 0 || density > 1) {
    throw Error(ErrorKind::InvalidParameters, "random complex needs 0 <= dim < n and density in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<Face> top = k_subsets(n, dim + 1);
  std::shuffle(top.begin(), top.end(), rng);
  const std::size_t keep = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(density * top.size())));
  top.resize(std::min(keep, top.size()));
  std::vector<Face> gens = k_subsets(n, dim);
  gens.insert(gens.end(), top.begin(), top.end());
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex random_generated(int n, int max_facets, int max_size, std::uint64_t seed) {
  if (n < 1 || max_facets < 1 || max_size < 1 || max_size > n) {
    throw Error(ErrorKind::InvalidParameters, "random_generated needs 1 <= max_size <= n and max_facets >= 1");
  }
  std::mt19937_64 rng(seed);
  const int count = uniform(rng, 1, max_facets);
  std::vector<Face> gens;
  for (int a = 0; a < count; ++a) gens.push_back(random_subset(rng, n, uniform(rng, 1, max_size)));
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex random_shifted_pure(int n, int d, int generators, std::uint64_t seed) {
  if (d < 1 || d > n || generators < 1) throw Error(ErrorKind::InvalidParameters, "random_shifted_pure needs 1 <= d <= n");
  std::mt19937_64 rng(seed);
  std::vector<Face> family;
  for (int a = 0; a < generators; ++a) family.push_back(random_subset(rng, n, d));
  // Shifted closure: every d-set dominating a generator componentwise.
  std::vector<Face> closure;
  for (Face f : k_subsets(n, d)) {
    const std::vector<int> fv = f.vertices();
    for (Face g : family) {
      const std::vector<int> gv = g.vertices();
      bool dominates = true;
      for (int t = 0; t < d && dominates; ++t) dominates = fv[t] >= gv[t];
      if (dominates) {
        closure.push_back(f);
        break;
      }
    }
  }
  return SimplicialComplex::generated_by(std::move(closure));
}

LabeledComplex random_cm_complex(int max_vertices, std::uint64_t seed) {
  if (max_vertices < 5) throw Error(ErrorKind::InvalidParameters, "need at least five vertices");
  std::mt19937_64 rng(seed);
  const int kind = uniform(rng, 0, 5);
  switch (kind) {
    case 0: {
      const int n = uniform(rng, 3, max_vertices);
      const int d = uniform(rng, 1, std::min(4, n - 1));
      return {"shifted-pure", random_shifted_pure(n, d, uniform(rng, 1, 3), rng())};
    }
    case 1: {
      const int d = uniform(rng, 2, std::min(4, max_vertices - 1));
      const int n = uniform(rng, d + 1, std::min(max_vertices, d + 3));
      const SimplicialComplex base = n == d + 1 ? simplex_boundary(Face::interval(1, n)) : cyclic_boundary(n, d);
      return {"stellar-cyclic", random_subdivisions(base, max_vertices, rng)};
    }
    case 2: {
      const int n = max_vertices - 1;
      LabeledComplex inner = n >= 5 ? random_cm_complex(n, rng())
                                    : LabeledComplex{"shifted-pure", random_shifted_pure(n, 2, 2, rng())};
      const int apex = inner.complex.ground().max() + 1;
      return {"cone(" + inner.recipe + ")", cone(apex, inner.complex)};
    }
    case 3: {
      const int a = uniform(rng, 2, std::max(2, max_vertices / 2));
      const int b = uniform(rng, 2, std::max(2, max_vertices - a));
      const SimplicialComplex left = simplex_boundary(Face::interval(1, a));
      SimplicialComplex right = simplex_boundary(Face::interval(a + 1, a + b));
      if (b >= 4 && uniform(rng, 0, 1) == 1) {
        right = expand_labels(cyclic_boundary(b, 2), Face::interval(a + 1, a + b));
      }
      return {"join", join(left, right)};
    }
    case 4: {
      const int d = uniform(rng, 2, std::min(4, max_vertices - 2));
      const int n = uniform(rng, d + 2, std::min(max_vertices, d + 4));
      const std::vector<OrderIdeal> us = enumerate_order_ideals(n - d - 1, (d + 1) / 2);
      const OrderIdeal& u = us[uniform(rng, 0, static_cast<int>(us.size()) - 1)];
      return {"squeezed-ball", squeezed_ball(u, d, n)};
    }
    default: {
      const int d = uniform(rng, 2, std::min(4, max_vertices - 2));
      const int n = uniform(rng, d + 2, std::min(max_vertices, d + 4));
      const std::vector<OrderIdeal> us = enumerate_order_ideals(n - d - 1, d / 2);
      const OrderIdeal& u = us[uniform(rng, 0, static_cast<int>(us.size()) - 1)];
      return {"stellar-squeezed", random_subdivisions(squeezed_sphere(u, d, n), max_vertices, rng)};
    }
  }
}

SimplicialComplex random_relabel(const SimplicialComplex& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> labels = c.ground().vertices();
  std::vector<int> image = labels;
  std::shuffle(image.begin(), image.end(), rng);
  std::vector<int> map(kMaxVertex + 1, 0);
  for (std::size_t a = 0; a < labels.size(); ++a) map[labels[a]] = image[a];
  return relabel(c, map);
}

}  // namespace shiftlab
