#include "shiftlab/shifting.hpp"

#include <algorithm>
#include <unordered_set>

#include "shiftlab/error.hpp"
#include "shiftlab/gin.hpp"

namespace shiftlab {

namespace {

struct TrialResult {
  SimplicialComplex shifted = SimplicialComplex::empty_face();
  std::vector<DegreeData> degrees;
  std::vector<Monomial> generators;
};

int max_face_size(const SimplicialComplex& c) { return c.dim() + 1; }

template <class Term>
DegreeData degree_data(const DegreeComponent<Term>& comp) {
  return DegreeData{comp.degree, comp.ideal_dimension, comp.total_dimension, comp.route == GinRoute::Dual};
}

template <class Field>
TrialResult exterior_with_map(const Field& field, const SimplicialComplex& c, int n, int bound,
                              DenseMatrix<Field> g) {
  InitialIdealEngine<ExteriorAlgebra, Field> engine(field, ExteriorAlgebra{n}, std::move(g),
                                                    [&c](const Face& t) { return !c.contains(t); });
  TrialResult out;
  std::vector<Face> faces{Face{}};
  std::unordered_set<Face> previous;
  for (int k = 1; k <= bound; ++k) {
    const DegreeComponent<Face> comp = engine.component(k);
    out.degrees.push_back(degree_data(comp));
    const std::unordered_set<Face> lead(comp.leading.begin(), comp.leading.end());
    for (Face t : squarefree_of_degree(n, k)) {
      if (!lead.count(t)) {
        faces.push_back(t);
        continue;
      }
      bool minimal = true;
      for (int v : t.vertices()) {
        if (k > 1 && previous.count(t.without(v))) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.generators.push_back(Monomial::squarefree(t));
    }
    previous = lead;
  }
  out.shifted = SimplicialComplex::generated_by(std::move(faces));
  return out;
}

std::vector<Monomial> minimal_generators(const std::vector<std::vector<Monomial>>& leading) {
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < leading.size(); ++k) {
    std::unordered_set<Monomial> lower;
    if (k > 0) lower.insert(leading[k - 1].begin(), leading[k - 1].end());
    for (const Monomial& m : leading[k]) {
      bool minimal = true;
      for (int v : m.support().vertices()) {
        if (lower.count(*m.divide_by_variable(v))) {
          minimal = false;
          break;
        }
      }
      if (minimal) gens.push_back(m);
    }
  }
  return gens;
}

// leading[k-1] holds degree-k leading monomials, k = 1..bound.
template <class Field>
std::vector<std::vector<Monomial>> polynomial_leading(const Field& field, int n, int bound, DenseMatrix<Field> g,
                                                      const MonomialIdeal& ideal, std::vector<DegreeData>* data) {
  InitialIdealEngine<PolynomialRing, Field> engine(field, PolynomialRing{n}, std::move(g),
                                                   [&ideal](const Monomial& m) { return ideal.contains(m); });
  std::vector<std::vector<Monomial>> leading;
  for (int k = 1; k <= bound; ++k) {
    DegreeComponent<Monomial> comp = engine.component(k);
    if (data) data->push_back(degree_data(comp));
    leading.push_back(std::move(comp.leading));
  }
  return leading;
}

template <class Field>
TrialResult symmetric_trial(const Field& field, const SimplicialComplex& c, int n, int bound, std::uint64_t seed) {
  const MonomialIdeal ideal = stanley_reisner_ideal(c, n);
  TrialResult out;
  const auto leading = polynomial_leading(field, n, bound, random_invertible(field, n, seed), ideal, &out.degrees);
  out.generators = minimal_generators(leading);
  MonomialIdeal gin(n, out.generators);
  if (!gin.is_borel_fixed()) throw Error(ErrorKind::RandomnessSuspect, "computed Gin is not Borel-fixed");
  std::vector<Monomial> phi;
  for (const Monomial& u : out.generators) {
    Monomial v = squarefree_phi(u);
    if (v.last_variable() > n) {
      throw Error(ErrorKind::PhiNotSquarefree, "Φ(" + u.to_string() + ") leaves the " + std::to_string(n) +
                                                   " available variables");
    }
    phi.push_back(v);
  }
  out.shifted = complex_of_squarefree_ideal(MonomialIdeal(n, phi), n, bound);
  return out;
}

template <class Field>
TrialResult exterior_trial(const Field& field, const SimplicialComplex& c, int n, int bound, std::uint64_t seed) {
  return exterior_with_map(field, c, n, bound, random_invertible(field, n, seed));
}

bool certificates_hold(const SimplicialComplex& input, const SimplicialComplex& shifted) {
  return is_shifted(shifted) && f_vector(shifted) == f_vector(input);
}

struct Prepared {
  Face vertex_set;
  int n = 0;
  SimplicialComplex compressed = SimplicialComplex::empty_face();
  int bound = 0;
};

Prepared prepare(const SimplicialComplex& c, const ShiftOptions& opts) {
  Prepared p;
  p.vertex_set = opts.vertex_set.value_or(c.ground());
  if (!c.ground().subset_of(p.vertex_set)) {
    throw Error(ErrorKind::InvalidParameters, "vertex set must contain the ground set");
  }
  p.n = p.vertex_set.size();
  if (p.n > kMaxVariables) throw Error(ErrorKind::InvalidParameters, "shifting supports at most 16 vertices");
  if (opts.trials < 1) throw Error(ErrorKind::InvalidParameters, "trials must be positive");
  p.compressed = compress_labels(c, p.vertex_set);
  p.bound = opts.degree_bound.value_or(max_face_size(c));
  if (p.bound < max_face_size(c)) {
    throw Error(ErrorKind::DegreeBoundTooSmall, "degree bound below the largest face cardinality");
  }
  return p;
}

template <class TrialFn>
ShiftReport run_trials(const SimplicialComplex& c, const ShiftOptions& opts, const Prepared& p, TrialFn&& trial) {
  ShiftReport report;
  report.input = c;
  report.prime = opts.exact ? 0 : opts.prime;
  report.exact = opts.exact;
  if (p.n == 0) {
    report.agreement = true;
    return report;
  }
  for (int batch = 0; batch <= opts.retry_batches; ++batch) {
    std::vector<TrialResult> results;
    std::vector<std::uint64_t> seeds;
    bool ok = true;
    for (int t = 0; t < opts.trials && ok; ++t) {
      const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(batch * opts.trials + t);
      seeds.push_back(seed);
      try {
        TrialResult r = trial(seed);
        ok = certificates_hold(p.compressed, r.shifted) && (results.empty() || results.front().shifted == r.shifted);
        results.push_back(std::move(r));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::RandomnessSuspect) throw;
        ok = false;
      }
    }
    if (!ok) continue;
    report.shifted = expand_labels(results.front().shifted, p.vertex_set);
    report.degrees = std::move(results.front().degrees);
    report.gin_generators = std::move(results.front().generators);
    report.seeds = std::move(seeds);
    report.agreement = true;
    return report;
  }
  throw Error(ErrorKind::RandomnessSuspect, "trials disagree or certificates fail after the retry budget");
}

template <class Fn>
auto with_field(const ShiftOptions& opts, Fn&& fn) {
  if (opts.exact) return fn(RationalField{});
  return fn(PrimeField(opts.prime));
}

}  // namespace

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c, std::optional<int> n) {
  const int vars = n.value_or(c.ground().empty() ? 0 : c.ground().max());
  if (vars > kMaxVariables) throw Error(ErrorKind::InvalidParameters, "at most 16 variables");
  std::vector<Monomial> gens;
  for (Face f : exterior_face_ideal(c, vars)) gens.push_back(Monomial::squarefree(f));
  return MonomialIdeal(vars, std::move(gens));
}

std::vector<Face> exterior_face_ideal(const SimplicialComplex& c, std::optional<int> n) {
  const int vars = n.value_or(c.ground().empty() ? 0 : c.ground().max());
  const Face v = Face::interval(1, vars);
  if (!c.ground().subset_of(v)) throw Error(ErrorKind::InvalidParameters, "complex does not live on [n]");
  return minimal_nonfaces(c, v);
}

ShiftReport exterior_shift(const SimplicialComplex& c, const ShiftOptions& opts) {
  const Prepared p = prepare(c, opts);
  return with_field(opts, [&](const auto& field) {
    return run_trials(c, opts, p, [&](std::uint64_t seed) {
      return exterior_trial(field, p.compressed, p.n, p.bound, seed);
    });
  });
}

ShiftReport symmetric_shift(const SimplicialComplex& c, const ShiftOptions& opts) {
  const Prepared p = prepare(c, opts);
  return with_field(opts, [&](const auto& field) {
    return run_trials(c, opts, p, [&](std::uint64_t seed) {
      return symmetric_trial(field, p.compressed, p.n, p.bound, seed);
    });
  });
}

SimplicialComplex nongeneric_shift(const SimplicialComplex& c, const DenseMatrix<PrimeField>& phi,
                                   std::uint64_t prime) {
  const int n = static_cast<int>(phi.rows());
  if (phi.cols() != n) throw Error(ErrorKind::InvalidParameters, "φ must be square");
  if (!c.ground().subset_of(Face::interval(1, n))) {
    throw Error(ErrorKind::InvalidParameters, "complex does not live on [n]");
  }
  const PrimeField field(prime);
  if (rank(field, phi) < n) throw Error(ErrorKind::SingularMatrix, "φ is not invertible");
  if (n == 0) return SimplicialComplex::empty_face();
  return exterior_with_map(field, c, n, max_face_size(c), phi).shifted;
}

DenseMatrix<PrimeField> elementary_map(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw Error(ErrorKind::InvalidParameters, "bad elementary map");
  DenseMatrix<PrimeField> m = identity_matrix(PrimeField{}, n);
  m(i - 1, j - 1) = 1;
  return m;
}

MonomialIdeal gin_polynomial(const MonomialIdeal& ideal, int degree_bound, const ShiftOptions& opts) {
  if (degree_bound < ideal.max_degree()) {
    throw Error(ErrorKind::DegreeBoundTooSmall, "degree bound below the largest generator degree");
  }
  const int n = ideal.num_variables();
  if (n == 0 || ideal.generators().empty()) return ideal;
  return with_field(opts, [&](const auto& field) {
    for (int batch = 0; batch <= opts.retry_batches; ++batch) {
      std::optional<MonomialIdeal> agreed;
      bool ok = true;
      for (int t = 0; t < opts.trials && ok; ++t) {
        const std::uint64_t seed = opts.seed + static_cast<std::uint64_t>(batch * opts.trials + t);
        const auto leading = polynomial_leading(field, n, degree_bound, random_invertible(field, n, seed), ideal, nullptr);
        MonomialIdeal gin(n, minimal_generators(leading));
        ok = gin.is_borel_fixed() && (!agreed || *agreed == gin);
        if (!agreed) agreed = std::move(gin);
      }
      if (ok) return *agreed;
    }
    throw Error(ErrorKind::RandomnessSuspect, "Gin trials disagree after the retry budget");
  });
}

MonomialIdeal initial_ideal_of_elementary_map(const SimplicialComplex& c, int i, int j, std::optional<int> n,
                                              std::optional<int> degree_bound) {
  const int vars = n.value_or(c.ground().empty() ? 0 : c.ground().max());
  const MonomialIdeal ideal = stanley_reisner_ideal(c, vars);
  const int bound = degree_bound.value_or(max_face_size(c) + 1);
  const PrimeField field;
  const auto leading = polynomial_leading(field, vars, bound, elementary_map(vars, i, j), ideal, nullptr);
  return MonomialIdeal(vars, minimal_generators(leading));
}

MonomialIdeal gin_with_extra_variables(const SimplicialComplex& c, int m, int n, const ShiftOptions& opts) {
  if (m < 1 || m > n || !c.ground().subset_of(Face::interval(m, n))) {
    throw Error(ErrorKind::InvalidParameters, "complex must live on [m, n] with 1 <= m <= n");
  }
  ShiftOptions whole = opts;
  whole.vertex_set = Face::interval(1, n);
  ShiftOptions upper = opts;
  upper.vertex_set = Face::interval(m, n);
  const SimplicialComplex left = exterior_shift(c, whole).shifted;
  const SimplicialComplex right = exterior_shift(c, upper).shifted;
  if (!(left == right)) {
    throw Error(ErrorKind::IdentityViolated, "Gin(J + (e_1..e_{m-1})) differs from Gin(J) + (e_1..e_{m-1})");
  }
  return stanley_reisner_ideal(left, n);
}

SimplicialComplex shift_of_cone(const SimplicialComplex& c, const ShiftOptions& opts) {
  const int n = c.ground().empty() ? 0 : c.ground().max();
  ShiftOptions base_opts = opts;
  base_opts.vertex_set = Face::interval(1, n);
  ShiftOptions cone_opts = opts;
  cone_opts.vertex_set = Face::interval(1, n + 1);
  const SimplicialComplex base = exterior_shift(c, base_opts).shifted;
  const SimplicialComplex coned = exterior_shift(cone(n + 1, c), cone_opts).shifted;
  if (!(coned == cone(n + 1, base))) {
    throw Error(ErrorKind::IdentityViolated, "Δ^e of the cone differs from the cone over Δ^e");
  }
  return coned;
}

SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& ideal, int n, int max_card) {
  std::vector<Face> faces;
  for (int k = 0; k <= std::min(max_card, n); ++k) {
    for (Face f : k_subsets(n, k))
      if (!ideal.contains(Monomial::squarefree(f))) faces.push_back(f);
  }
  return SimplicialComplex::generated_by(std::move(faces));
}

}  // namespace shiftlab
