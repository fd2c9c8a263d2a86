#include "shiftlab/lefschetz.hpp"

#include <random>
#include <unordered_map>

#include "shiftlab/delta.hpp"
#include "shiftlab/dense.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/local_moves.hpp"

namespace shiftlab {

namespace {

using Element = PrimeField::Element;

struct Graded {
  std::vector<Monomial> basis;
  std::unordered_map<Monomial, int> index;
};

Graded standard_basis(const MonomialIdeal& ideal, int n, int k) {
  Graded g;
  for (const Monomial& u : monomials_of_degree(n, k)) {
    if (ideal.contains(u)) continue;
    g.index.emplace(u, static_cast<int>(g.basis.size()));
    g.basis.push_back(u);
  }
  return g;
}

// (linear form) · v, v ∈ A_k, landing in A_{k+1}.
std::vector<Element> multiply(const PrimeField& field, const std::vector<Element>& form, const Graded& from,
                              const Graded& to, const std::vector<Element>& v) {
  std::vector<Element> out(to.basis.size(), 0);
  for (std::size_t a = 0; a < v.size(); ++a) {
    if (v[a] == 0) continue;
    for (std::size_t r = 0; r < form.size(); ++r) {
      if (form[r] == 0) continue;
      const auto it = to.index.find(from.basis[a].times(static_cast<int>(r) + 1));
      if (it == to.index.end()) continue;
      out[it->second] = field.add(out[it->second], field.mul(v[a], form[r]));
    }
  }
  return out;
}

// h-polynomial coefficients of S/I, (1-t)^d times the Hilbert series.
std::vector<std::int64_t> h_polynomial(const MonomialIdeal& ideal, int n, int d, int up_to) {
  std::vector<std::int64_t> hilbert;
  for (int k = 0; k <= up_to; ++k) hilbert.push_back(static_cast<std::int64_t>(standard_basis(ideal, n, k).basis.size()));
  std::vector<std::int64_t> h(up_to + 1, 0);
  for (int k = 0; k <= up_to; ++k) {
    for (int j = 0; j <= std::min(k, d); ++j) {
      const std::int64_t term = binomial(d, j) * hilbert[k - j];
      h[k] += (j % 2 == 0) ? term : -term;
    }
  }
  return h;
}

std::int64_t dim_at(const ArtinianProfile& p, int k) {
  return k < static_cast<int>(p.dims.size()) ? p.dims[k] : 0;
}

bool matches_h(const ArtinianProfile& p, const std::vector<std::int64_t>& h) {
  for (int k = 0; k < static_cast<int>(h.size()); ++k)
    if (dim_at(p, k) != h[k]) return false;
  return true;
}

struct Attempt {
  ArtinianProfile profile;
  bool cm = false;
  bool slp = false;
};

Attempt attempt(const MonomialIdeal& ideal, int d, std::uint64_t seed, std::uint64_t prime) {
  Attempt a;
  const int cap = d + std::max(1, ideal.max_degree());
  try {
    a.profile = artinian_profile(ideal, d, seed, cap, prime);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DimensionMismatch) throw;
    a.profile.seed = seed;
    return a;
  }
  const int upto = std::max(static_cast<int>(a.profile.dims.size()) - 1, d);
  a.cm = matches_h(a.profile, h_polynomial(ideal, ideal.num_variables(), d, upto));
  a.slp = a.cm && profile_is_slp(a.profile);
  return a;
}

SlpResult decide(const MonomialIdeal& ideal, int d, std::uint64_t seed, std::uint64_t prime, bool need_top_h) {
  SlpResult out;
  Attempt first = attempt(ideal, d, seed, prime);
  out.seeds.push_back(seed);
  if (!first.cm) {
    Attempt second = attempt(ideal, d, seed + 1, prime);
    out.seeds.push_back(seed + 1);
    if (!second.cm) {
      out.verdict = Verdict::False;
      out.reason = "quotient dimensions differ from the h-vector: not Cohen-Macaulay";
      out.profile = first.profile;
      return out;
    }
    first = second;
  }
  out.profile = first.profile;
  if (need_top_h && dim_at(first.profile, d) == 0) {
    out.verdict = Verdict::False;
    out.reason = "h_d = 0";
    return out;
  }
  if (first.slp) {
    out.verdict = Verdict::True;
    return out;
  }
  const std::uint64_t retry = out.seeds.back() + 1;
  const Attempt again = attempt(ideal, d, retry, prime);
  out.seeds.push_back(retry);
  if (again.slp) {
    out.verdict = Verdict::Indeterminate;
    out.reason = "Lefschetz maps bijective for one seed only";
    return out;
  }
  out.verdict = Verdict::False;
  out.reason = "some ω^{s-2i} is not bijective";
  return out;
}

bool h_symmetric(const HVector& h) {
  for (int i = 0; i <= h.d(); ++i)
    if (h.h[i] != h.h[h.d() - i]) return false;
  return true;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Indeterminate: return "indeterminate";
  }
  return "?";
}

bool is_cm_via_shift(const SimplicialComplex& c, ShiftMode mode, const ShiftOptions& opts) {
  const ShiftReport r = mode == ShiftMode::Exterior ? exterior_shift(c, opts) : symmetric_shift(c, opts);
  return is_pure(r.shifted);
}

ArtinianProfile artinian_profile(const MonomialIdeal& ideal, int krull_dim, std::uint64_t seed, int max_degree,
                                 std::uint64_t prime) {
  const PrimeField field(prime);
  const int n = ideal.num_variables();
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Element>> theta(krull_dim, std::vector<Element>(n));
  for (auto& t : theta)
    for (auto& x : t) x = field.random(rng);
  std::vector<Element> omega(n);
  for (auto& x : omega) x = field.random(rng);

  ArtinianProfile p;
  p.seed = seed;
  std::vector<Graded> graded;
  std::vector<IncrementalBasis<PrimeField>> relations;
  for (int k = 0;; ++k) {
    if (k > max_degree) throw Error(ErrorKind::DimensionMismatch, "quotient does not vanish by the degree cap");
    graded.push_back(standard_basis(ideal, n, k));
    IncrementalBasis<PrimeField> rel(field, static_cast<Eigen::Index>(graded[k].basis.size()));
    if (k > 0) {
      for (std::size_t a = 0; a < graded[k - 1].basis.size(); ++a) {
        std::vector<Element> unit(graded[k - 1].basis.size(), 0);
        unit[a] = 1;
        for (const auto& t : theta) rel.insert(multiply(field, t, graded[k - 1], graded[k], unit));
      }
    }
    const std::int64_t dim = static_cast<std::int64_t>(graded[k].basis.size()) - rel.rank();
    relations.push_back(std::move(rel));
    p.dims.push_back(dim);
    if (dim == 0) break;
  }
  p.socle_degree = static_cast<int>(p.dims.size()) - 2;
  const int s = p.socle_degree;
  if (s < 0) return p;

  auto standard_columns = [&](int k) {
    std::vector<char> pivot(graded[k].basis.size(), 0);
    for (Eigen::Index c : relations[k].pivots()) pivot[c] = 1;
    std::vector<int> cols;
    for (std::size_t c = 0; c < pivot.size(); ++c)
      if (!pivot[c]) cols.push_back(static_cast<int>(c));
    return cols;
  };
  for (int i = 0; 2 * i <= s; ++i) {
    const std::vector<int> src = standard_columns(i);
    const std::vector<int> dst = standard_columns(s - i);
    DenseMatrix<PrimeField> m = zero_matrix(field, static_cast<Eigen::Index>(dst.size()), static_cast<Eigen::Index>(src.size()));
    for (std::size_t b = 0; b < src.size(); ++b) {
      std::vector<Element> v(graded[i].basis.size(), 0);
      v[src[b]] = 1;
      for (int k = i; k < s - i; ++k) {
        v = multiply(field, omega, graded[k], graded[k + 1], v);
        relations[k + 1].reduce(v);
      }
      for (std::size_t r = 0; r < dst.size(); ++r) m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(b)) = v[dst[r]];
    }
    p.ranks.push_back(m.size() == 0 ? 0 : rank(field, m));
  }
  return p;
}

bool profile_is_slp(const ArtinianProfile& p) {
  const int s = p.socle_degree;
  if (s < 0) return true;
  for (int i = 0; 2 * i <= s; ++i) {
    if (p.dims[i] != p.dims[s - i] || p.ranks[i] != p.dims[i]) return false;
  }
  return true;
}

SlpResult check_slp_direct(const SimplicialComplex& c, std::uint64_t seed, std::uint64_t prime) {
  const SimplicialComplex local = compress_labels(c, c.ground());
  const int n = local.num_vertices();
  return decide(stanley_reisner_ideal(local, n), c.dim() + 1, seed, prime, true);
}

SlpResult check_slp_ideal(const MonomialIdeal& ideal, int krull_dim, std::uint64_t seed, std::uint64_t prime) {
  return decide(ideal, krull_dim, seed, prime, false);
}

SlpResult check_slp_via_shift(const SimplicialComplex& c, const ShiftOptions& opts) {
  SlpResult out;
  out.seeds.push_back(opts.seed);
  if (c.is_empty_face()) {
    out.verdict = Verdict::True;
    return out;
  }
  const ShiftReport r = symmetric_shift(c, opts);
  if (!is_pure(r.shifted)) {
    out.reason = "Δ^s is not pure: not Cohen-Macaulay";
    return out;
  }
  const HVector h = h_vector(c);
  const int d = c.dim() + 1;
  if (h.h[d] == 0) {
    out.reason = "h_d = 0";
    return out;
  }
  if (!h_symmetric(h)) {
    out.reason = "h-vector is not symmetric";
    return out;
  }
  const ContainmentResult inside = contained_in_delta(compress_labels(r.shifted, c.ground()), c.num_vertices(), d);
  if (!inside) {
    out.reason = "Δ^s contains " + inside.offending->to_string() + " outside Δ(n,d)";
    return out;
  }
  out.verdict = Verdict::True;
  return out;
}

std::vector<WiebeInstance> wiebe_spotcheck(std::vector<WiebeInstance> cases, std::uint64_t seed) {
  for (WiebeInstance& w : cases) {
    const SimplicialComplex& c = w.complex;
    const int n = c.ground().empty() ? 0 : c.ground().max();
    const int d = c.dim() + 1;
    const MonomialIdeal original = stanley_reisner_ideal(c, n);
    const MonomialIdeal initial = initial_ideal_of_elementary_map(c, w.i, w.j, n);
    // The initial ideal is only known up to a degree bound; compare Hilbert
    // functions over the range the Lefschetz check looks at.
    const int cap = d + std::max(1, original.max_degree()) + 1;
    w.initial_complete = h_polynomial(initial, n, d, cap) == h_polynomial(original, n, d, cap);
    if (!w.initial_complete) continue;
    w.initial_slp = check_slp_ideal(initial, d, seed).verdict == Verdict::True;
    w.original_slp = check_slp_ideal(original, d, seed).verdict == Verdict::True;
    w.consistent = !w.initial_slp || w.original_slp;
  }
  return cases;
}

}  // namespace shiftlab
