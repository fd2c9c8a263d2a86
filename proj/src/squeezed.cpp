#include "shiftlab/squeezed.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_set>

#include "shiftlab/delta.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/local_moves.hpp"

namespace shiftlab {

namespace {

bool by_degree_then_degrevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return degrevlex(a, b) > 0;
}

bool h_symmetric(const HVector& h) {
  const int d = h.d();
  for (int i = 0; i <= d; ++i)
    if (h.h[i] != h.h[d - i]) return false;
  return true;
}

int top_vertex(const SimplicialComplex& c) { return c.ground().empty() ? 0 : c.ground().max(); }

MonomialIdeal gin_of(const SimplicialComplex& c, int n, int bound, const ShiftOptions& opts) {
  ShiftOptions o = opts;
  o.vertex_set = Face::interval(1, n);
  o.degree_bound = bound;
  try {
    return MonomialIdeal(n, symmetric_shift(c, o).gin_generators);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::RandomnessSuspect) throw Error(ErrorKind::GinUnavailable, e.what());
    throw;
  }
}

// Monomials in x_1..x_vars of degree <= cap outside gin, plus whether any
// survived in degree cap.
std::pair<std::vector<Monomial>, bool> standard_monomials(const MonomialIdeal& gin, int vars, int cap) {
  std::vector<Monomial> out;
  bool top = false;
  for (int k = 0; k <= cap; ++k) {
    for (const Monomial& u : monomials_of_degree(vars, k)) {
      if (gin.contains(u)) continue;
      if (k == cap) top = true;
      out.push_back(u);
    }
  }
  return {out, top};
}

}  // namespace

OrderIdeal::OrderIdeal(int m_, std::vector<Monomial> monomials_) : m(m_), monomials(std::move(monomials_)) {
  std::sort(monomials.begin(), monomials.end(), by_degree_then_degrevlex);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
}

bool OrderIdeal::contains(const Monomial& u) const {
  return std::binary_search(monomials.begin(), monomials.end(), u, by_degree_then_degrevlex);
}

int OrderIdeal::max_degree() const { return monomials.empty() ? -1 : monomials.back().degree(); }

OrderIdealCheck validate_order_ideal(const OrderIdeal& u, int m, double max_degree) {
  auto fail = [](std::string why) { return OrderIdealCheck{false, std::move(why)}; };
  if (m < 0 || m > kMaxVariables) return fail("variable count out of range");
  if (!u.contains(Monomial{})) return fail("1 is missing");
  for (int i = 1; i <= m; ++i)
    if (!u.contains(Monomial::variable(i))) return fail("x" + std::to_string(i) + " is missing");
  for (const Monomial& w : u.monomials) {
    if (w.last_variable() > m) return fail(w.to_string() + " uses a variable beyond x" + std::to_string(m));
    if (w.degree() > max_degree) return fail(w.to_string() + " exceeds the degree cap");
    for (int i : w.support().vertices()) {
      const Monomial v = *w.divide_by_variable(i);
      if (!u.contains(v)) return fail(v.to_string() + " divides " + w.to_string() + " but is missing");
      for (int j = i + 1; j <= m; ++j) {
        if (!u.contains(v.times(j))) {
          return fail("not shifted: " + w.to_string() + " present, " + v.times(j).to_string() + " missing");
        }
      }
    }
  }
  return OrderIdealCheck{true, {}};
}

std::vector<OrderIdeal> enumerate_order_ideals(int m, int max_degree) {
  if (m < 0 || m > kMaxVariables) throw Error(ErrorKind::InvalidParameters, "variable count out of range");
  std::vector<Monomial> base{Monomial{}};
  for (int i = 1; i <= m; ++i) base.push_back(Monomial::variable(i));
  if (max_degree < 1) return m == 0 ? std::vector<OrderIdeal>{OrderIdeal(0, base)} : std::vector<OrderIdeal>{};
  std::vector<OrderIdeal> out;
  // Extend degree by degree; `current` holds the chosen monomials.
  std::function<void(std::vector<Monomial>, const std::vector<Monomial>&, int)> grow =
      [&](std::vector<Monomial> current, const std::vector<Monomial>& last_degree, int k) {
        out.emplace_back(m, current);
        if (k > max_degree || last_degree.empty()) return;
        const std::unordered_set<Monomial> prev(last_degree.begin(), last_degree.end());
        std::vector<Monomial> candidates;
        for (const Monomial& w : monomials_of_degree(m, k)) {
          bool ok = true;
          for (int i : w.support().vertices()) ok = ok && prev.count(*w.divide_by_variable(i));
          if (ok) candidates.push_back(w);
        }
        const std::size_t c = candidates.size();
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << c); ++mask) {
          std::vector<Monomial> chosen;
          for (std::size_t b = 0; b < c; ++b)
            if ((mask >> b) & 1U) chosen.push_back(candidates[b]);
          const std::unordered_set<Monomial> now(chosen.begin(), chosen.end());
          bool shifted = true;
          for (const Monomial& w : chosen) {
            for (int i : w.support().vertices()) {
              const Monomial v = *w.divide_by_variable(i);
              for (int j = i + 1; j <= m && shifted; ++j) shifted = now.count(v.times(j)) > 0;
            }
            if (!shifted) break;
          }
          if (!shifted) continue;
          std::vector<Monomial> next = current;
          next.insert(next.end(), chosen.begin(), chosen.end());
          grow(std::move(next), chosen, k + 1);
        }
      };
  std::vector<Monomial> degree_one(base.begin() + 1, base.end());
  grow(base, degree_one, 2);
  return out;
}

Face facet_of_monomial(const Monomial& u, int d, int n) {
  const int k = u.degree();
  if (2 * k > d + 1) throw Error(ErrorKind::DegreeTooLarge, u.to_string() + " has degree above (d+1)/2");
  if (u.last_variable() > n - d - 1) {
    throw Error(ErrorKind::SupportOutOfRange, u.to_string() + " uses a variable beyond x_{n-d-1}");
  }
  const std::vector<int> idx = u.indices();
  Face f;
  for (int t = 1; t <= k; ++t) {
    const int i = idx[t - 1];
    f = f.with(i + 2 * (t - 1)).with(i + 2 * t - 1);
  }
  return f | Face::interval(n + 2 * k - d, n);
}

SimplicialComplex ball_of_monomials(const std::vector<Monomial>& us, int d, int n) {
  std::vector<Face> gens;
  for (const Monomial& u : us) gens.push_back(facet_of_monomial(u, d, n));
  return SimplicialComplex::generated_by(std::move(gens));
}

SimplicialComplex squeezed_ball(const OrderIdeal& u, int d, int n) {
  if (d < 1 || n <= d) throw Error(ErrorKind::InvalidParameters, "squeezed balls need n > d >= 1");
  const int m = n - d - 1;
  if (u.m != m) throw Error(ErrorKind::InvalidOrderIdeal, "U must live on [n-d-1]");
  const OrderIdealCheck check = validate_order_ideal(u, m, (d + 1) / 2.0);
  if (!check) throw Error(ErrorKind::InvalidOrderIdeal, check.reason);
  return ball_of_monomials(u.monomials, d, n);
}

SimplicialComplex ball_boundary(const SimplicialComplex& b) {
  if (!is_pure(b) || b.is_empty_face()) {
    throw Error(ErrorKind::NotAPseudomanifoldWithBoundary, "ball must be pure and nonempty");
  }
  std::map<std::uint64_t, int> incidence;
  for (Face f : b.facets())
    for (int v : f.vertices()) ++incidence[f.without(v).bits()];
  std::vector<Face> boundary;
  for (const auto& [bits, count] : incidence) {
    if (count > 2) {
      throw Error(ErrorKind::NotAPseudomanifoldWithBoundary,
                  Face::from_bits(bits).to_string() + " lies in more than two facets");
    }
    if (count == 1) boundary.push_back(Face::from_bits(bits));
  }
  if (boundary.empty()) throw Error(ErrorKind::NotAPseudomanifoldWithBoundary, "boundary is empty");
  return SimplicialComplex::generated_by(std::move(boundary));
}

SimplicialComplex squeezed_sphere(const OrderIdeal& u, int d, int n) { return ball_boundary(squeezed_ball(u, d, n)); }

SplitIdeal split_U(const OrderIdeal& u) {
  std::vector<Monomial> hat, tilde;
  for (const Monomial& w : u.monomials) {
    if (w.exponent(1) == 0) hat.push_back(w);
    if (auto v = w.divide_by_variable(1)) tilde.push_back(*v);
  }
  return SplitIdeal{OrderIdeal(u.m, std::move(hat)), OrderIdeal(u.m, std::move(tilde))};
}

SimplicialComplex tilde_ball(const OrderIdeal& tilde, int d, int n) {
  std::vector<Face> gens;
  for (const Monomial& w : tilde.monomials) gens.push_back(facet_of_monomial(w.times(1), d, n) - Face{1, 2});
  return SimplicialComplex::generated_by(std::move(gens));
}

Lemma52Sides lemma52_sides(const OrderIdeal& u, int d, int n) {
  if (n - d - 1 < 1) throw Error(ErrorKind::InvalidParameters, "the split needs m >= 1");
  const SimplicialComplex sphere = squeezed_sphere(u, d, n);
  const SplitIdeal parts = split_U(u);
  Lemma52Sides out;
  out.sphere = sphere;
  out.hat_sphere = ball_boundary(ball_of_monomials(parts.hat.monomials, d, n));
  out.tilde_sphere = ball_boundary(tilde_ball(parts.tilde, d, n));
  out.shifted_faces = shift_ij_faces(sphere, 1, 2);
  out.union_faces = out.hat_sphere.faces();
  for (Face f : cone(2, out.tilde_sphere).faces()) out.union_faces.push_back(f.with(1));
  std::sort(out.union_faces.begin(), out.union_faces.end(), graded_less);
  out.union_faces.erase(std::unique(out.union_faces.begin(), out.union_faces.end()), out.union_faces.end());
  return out;
}

OrderIdeal extract_U(const SimplicialComplex& c, int d, const ShiftOptions& opts) {
  const int n = top_vertex(c);
  const int m = n - d - 1;
  if (d < 1 || m < 0 || c.dim() != d - 1) throw Error(ErrorKind::InvalidParameters, "C must be (d-1)-dimensional on [n], n > d");
  const int cap = d / 2 + 1;
  const MonomialIdeal gin = gin_of(c, n, std::max(d, cap), opts);
  auto [u, top] = standard_monomials(gin, m, cap);
  if (top) throw Error(ErrorKind::NonTerminating, "monomials of degree floor(d/2)+1 survive outside Gin");
  return OrderIdeal(m, std::move(u));
}

std::vector<Monomial> extract_L(const SimplicialComplex& c, int d, const ShiftOptions& opts) {
  const int n = top_vertex(c);
  if (d < 1 || n <= d || c.dim() != d - 1) throw Error(ErrorKind::InvalidParameters, "C must be (d-1)-dimensional on [n], n > d");
  const MonomialIdeal gin = gin_of(c, n, d + 1, opts);
  auto [l, top] = standard_monomials(gin, n - d, d + 1);
  if (top) throw Error(ErrorKind::NonTerminating, "monomials of degree d+1 survive outside Gin");
  std::sort(l.begin(), l.end(), by_degree_then_degrevlex);
  return l;
}

std::vector<Monomial> L_from_U(const OrderIdeal& u, int d) {
  std::vector<Monomial> out;
  for (const Monomial& w : u.monomials) {
    Monomial cur = w;
    for (int t = 0; t <= d - 2 * w.degree(); ++t) {
      out.push_back(cur);
      cur = cur.times(u.m + 1);
    }
  }
  std::sort(out.begin(), out.end(), by_degree_then_degrevlex);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Face> facets_from_L(const std::vector<Monomial>& l, int n, int d) {
  std::vector<Face> out;
  for (const Monomial& w : l) {
    const std::vector<int> idx = w.indices();
    const int k = static_cast<int>(idx.size());
    Face f = Face::interval(n - d + 1 + k, n);
    for (int t = 0; t < k; ++t) f = f.with(idx[t] + t);
    out.push_back(f);
  }
  std::sort(out.begin(), out.end(), graded_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_shifted_on(const SimplicialComplex& c, int n) {
  const Face g = c.ground();
  if (!g.subset_of(Face::interval(1, n))) return false;
  return is_shifted(c) && g == Face::interval(n - g.size() + 1, n);
}

Realization realize_squeezed(const SimplicialComplex& sigma, int d, const ShiftOptions& opts) {
  auto violated = [](const std::string& why) { return Error(ErrorKind::HypothesesViolated, why); };
  if (d < 1 || sigma.dim() != d - 1) throw violated("Σ is not (d-1)-dimensional");
  if (!is_pure(sigma)) throw violated("Σ is not pure");
  if (!is_shifted(sigma)) throw violated("Σ is not shifted");
  if (!h_symmetric(h_vector(sigma))) throw violated("h(Σ) is not symmetric");
  const Face v = sigma.ground();
  const int n = v.size();
  const SimplicialComplex local = compress_labels(sigma, v);
  if (n <= d || !contained_in_delta(local, n, d)) throw violated("Σ is not contained in Δ(n,d)");
  Realization out;
  out.u = extract_U(local, d, opts);
  const OrderIdealCheck check = validate_order_ideal(out.u, n - d - 1, d / 2.0);
  if (!check) throw violated("U(Σ) is not a shifted order ideal of degree at most d/2: " + check.reason);
  const SimplicialComplex sphere = squeezed_sphere(out.u, d, n);
  if (!(symmetric_shift(sphere, opts).shifted == local)) {
    throw Error(ErrorKind::IdentityViolated, "Δ^s of the squeezed sphere differs from Σ");
  }
  if (!(exterior_shift(sphere, opts).shifted == local)) {
    throw Error(ErrorKind::IdentityViolated, "Δ^e of the squeezed sphere differs from Σ");
  }
  out.sphere = expand_labels(sphere, v);
  return out;
}

std::vector<SimplicialComplex> squeezed_targets(int n, int d) {
  const std::vector<Face> facets = build_delta(n, d).facets();
  if (facets.size() > 20) throw Error(ErrorKind::InvalidParameters, "Δ(n,d) has too many facets to enumerate");
  std::vector<SimplicialComplex> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << facets.size()); ++mask) {
    std::vector<Face> gens;
    for (std::size_t b = 0; b < facets.size(); ++b)
      if ((mask >> b) & 1U) gens.push_back(facets[b]);
    const SimplicialComplex s = SimplicialComplex::generated_by(std::move(gens));
    if (is_shifted_on(s, n) && h_symmetric(h_vector(s))) out.push_back(s);
  }
  return out;
}

}  // namespace shiftlab
