#include "shiftlab/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "shiftlab/complex.hpp"
#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

void check_index(int i) {
  if (i < 1 || i > kMaxVariables) {
    throw Error(ErrorKind::InvalidParameters, "variable index " + std::to_string(i) + " outside [1, 16]");
  }
}

// Placing k identical balls into n ordered boxes; emits exponent vectors.
void fill_exponents(int n, int k, int var, std::vector<int>& exps, std::vector<Monomial>& out) {
  if (var == n - 1) {
    exps[var] = k;
    out.push_back(Monomial::from_exponents(exps));
    return;
  }
  for (int e = k; e >= 0; --e) {
    exps[var] = e;
    fill_exponents(n, k - e, var + 1, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVariables)) {
    throw Error(ErrorKind::InvalidParameters, "at most 16 variables");
  }
  Monomial m;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] < 0 || exponents[k] > 255) throw Error(ErrorKind::InvalidParameters, "exponent out of range");
    m.exps_[k] = static_cast<std::uint8_t>(exponents[k]);
  }
  return m;
}

Monomial Monomial::variable(int i) {
  check_index(i);
  Monomial m;
  m.exps_[i - 1] = 1;
  return m;
}

Monomial Monomial::squarefree(Face f) {
  Monomial m;
  for (int v : f.vertices()) {
    check_index(v);
    m.exps_[v - 1] = 1;
  }
  return m;
}

Monomial Monomial::from_indices(std::span<const int> indices) {
  Monomial m;
  for (int i : indices) m = m.times(i);
  return m;
}

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Face Monomial::support() const {
  Face f;
  for (int k = 0; k < kMaxVariables; ++k)
    if (exps_[k] != 0) f = f.with(k + 1);
  return f;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint8_t e) { return e <= 1; });
}

int Monomial::last_variable() const {
  for (int k = kMaxVariables - 1; k >= 0; --k)
    if (exps_[k] != 0) return k + 1;
  return 0;
}

Monomial Monomial::times(int i) const {
  check_index(i);
  Monomial m = *this;
  if (m.exps_[i - 1] == 255) throw Error(ErrorKind::InvalidParameters, "exponent overflow");
  ++m.exps_[i - 1];
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial m;
  for (int k = 0; k < kMaxVariables; ++k) {
    const int e = exps_[k] + o.exps_[k];
    if (e > 255) throw Error(ErrorKind::InvalidParameters, "exponent overflow");
    m.exps_[k] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool Monomial::divides(const Monomial& o) const {
  for (int k = 0; k < kMaxVariables; ++k)
    if (exps_[k] > o.exps_[k]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& o) const {
  Monomial m;
  for (int k = 0; k < kMaxVariables; ++k) m.exps_[k] = static_cast<std::uint8_t>(o.exps_[k] - exps_[k]);
  return m;
}

std::optional<Monomial> Monomial::divide_by_variable(int i) const {
  if (i < 1 || i > kMaxVariables || exps_[i - 1] == 0) return std::nullopt;
  Monomial m = *this;
  --m.exps_[i - 1];
  return m;
}

std::vector<int> Monomial::indices() const {
  std::vector<int> out;
  for (int k = 0; k < kMaxVariables; ++k)
    for (int e = 0; e < exps_[k]; ++e) out.push_back(k + 1);
  return out;
}

std::vector<int> Monomial::exponents(int m) const {
  std::vector<int> out(m, 0);
  for (int k = 0; k < m && k < kMaxVariables; ++k) out[k] = exps_[k];
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (int k = 0; k < kMaxVariables; ++k) {
    if (exps_[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(k + 1);
    if (exps_[k] > 1) s += "^" + std::to_string(exps_[k]);
  }
  return s.empty() ? "1" : s;
}

std::size_t Monomial::hash() const {
  std::uint64_t lo = 0, hi = 0;
  for (int k = 0; k < 8; ++k) lo |= std::uint64_t{exps_[k]} << (8 * k);
  for (int k = 0; k < 8; ++k) hi |= std::uint64_t{exps_[k + 8]} << (8 * k);
  return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9E3779B97F4A7C15ULL));
}

std::strong_ordering degrevlex(const Monomial& u, const Monomial& v) {
  const int du = u.degree(), dv = v.degree();
  if (du != dv) return du <=> dv;
  for (int i = kMaxVariables; i >= 1; --i) {
    const int diff = u.exponent(i) - v.exponent(i);
    if (diff != 0) return diff < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering revlex_squarefree(Face s, Face t) {
  if (s.size() != t.size()) return s.size() <=> t.size();
  const Face diff = s ^ t;
  if (diff.empty()) return std::strong_ordering::equal;
  return t.contains(diff.max()) ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::strong_ordering MonomialOrder::compare(const Monomial& u, const Monomial& v) const {
  if (kind == Kind::RevlexSquarefree) return revlex_squarefree(u.support(), v.support());
  return degrevlex(u, v);
}

std::strong_ordering MonomialOrder::compare(Face s, Face t) const {
  if (kind == Kind::DegrevlexPoly) return degrevlex(Monomial::squarefree(s), Monomial::squarefree(t));
  return revlex_squarefree(s, t);
}

std::vector<Monomial> monomials_of_degree(int n, int k) {
  if (n < 0 || n > kMaxVariables || k < 0) throw Error(ErrorKind::InvalidParameters, "bad monomial degree request");
  std::vector<Monomial> out;
  if (n == 0) {
    if (k == 0) out.emplace_back();
    return out;
  }
  std::vector<int> exps(n, 0);
  fill_exponents(n, k, 0, exps, out);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return degrevlex(a, b) > 0; });
  return out;
}

std::vector<Face> squarefree_of_degree(int n, int k) {
  std::vector<Face> out = k_subsets(n, k);
  std::sort(out.begin(), out.end(), [](Face a, Face b) { return revlex_squarefree(a, b) > 0; });
  return out;
}

Monomial squarefree_phi(const Monomial& u) {
  const std::vector<int> idx = u.indices();
  Monomial out;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const int target = idx[k] + static_cast<int>(k);
    if (target > kMaxVariables) throw Error(ErrorKind::InvalidParameters, "Φ leaves the 16 available variables");
    out = out.times(target);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int num_variables, std::vector<Monomial> generators) : n_(num_variables) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return degrevlex(a, b) > 0;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (const Monomial& g : generators) {
    if (g.last_variable() > n_) throw Error(ErrorKind::InvalidParameters, "generator uses a variable beyond n");
    const bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(g);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_borel_fixed() const {
  for (const Monomial& g : gens_) {
    for (int j = 1; j <= n_; ++j) {
      const auto reduced = g.divide_by_variable(j);
      if (!reduced) continue;
      for (int i = 1; i < j; ++i)
        if (!contains(reduced->times(i))) return false;
    }
  }
  return true;
}

}  // namespace shiftlab
