#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shiftlab/dense.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/face.hpp"
#include "shiftlab/monomial.hpp"

namespace shiftlab {

/// The exterior algebra on e_1..e_n; terms are faces, ordered revlex.
struct ExteriorAlgebra {
  using Term = Face;
  int n = 0;

  std::vector<Term> basis(int k) const { return squarefree_of_degree(n, k); }
  static int degree(Term t) { return t.size(); }
  /// t = prefix ∧ e_last.
  static std::pair<Term, int> split_last(Term t) { return {t.without(t.max()), t.max()}; }
  /// e_s ∧ e_i = sign · e_{s ∪ i}, or nothing when i ∈ s.
  static std::optional<std::pair<Term, int>> multiply(Term s, int i) {
    if (s.contains(i)) return std::nullopt;
    const int above = (s - Face::interval(1, i)).size();
    return std::pair{s.with(i), (above % 2 == 0) ? 1 : -1};
  }
};

/// The polynomial ring K[x_1..x_n]; terms are monomials, ordered degrevlex.
struct PolynomialRing {
  using Term = Monomial;
  int n = 0;

  std::vector<Term> basis(int k) const { return monomials_of_degree(n, k); }
  static int degree(const Term& t) { return t.degree(); }
  static std::pair<Term, int> split_last(const Term& t) {
    const int v = t.last_variable();
    return {*t.divide_by_variable(v), v};
  }
  static std::optional<std::pair<Term, int>> multiply(const Term& s, int i) { return std::pair{s.times(i), 1}; }
};

enum class GinRoute { Direct, Dual };

template <class Term>
struct DegreeComponent {
  int degree = 0;
  /// Leading terms of the transformed ideal in this degree, descending.
  std::vector<Term> leading;
  int ideal_dimension = 0;
  int total_dimension = 0;
  GinRoute route = GinRoute::Direct;
};

/// Initial ideal of g(I) degree by degree, for a monomial (or exterior
/// monomial) ideal I given by a membership predicate and an invertible linear
/// change of coordinates g (column v is the image of the v-th variable).
///
/// Direct route: span of the images g(m), m ∈ I_k, echelonized with the
/// columns in descending order; the pivots are the leading terms. Dual route:
/// terms are pushed in ascending order through g^{-1} into the quotient by I;
/// a term whose image depends on the images of smaller terms is a leading
/// term. The route with the smaller elimination is chosen per degree.
template <class Algebra, class Field>
class InitialIdealEngine {
 public:
  using Term = typename Algebra::Term;
  using Element = typename Field::Element;
  using Membership = std::function<bool(const Term&)>;

  InitialIdealEngine(const Field& field, Algebra algebra, DenseMatrix<Field> g, Membership in_ideal)
      : field_(field), algebra_(algebra), g_(std::move(g)), in_ideal_(std::move(in_ideal)) {
    if (g_.rows() != algebra_.n || g_.cols() != algebra_.n) {
      throw Error(ErrorKind::InvalidParameters, "coordinate change size differs from the variable count");
    }
  }

  DegreeComponent<Term> component(int k) {
    DegreeComponent<Term> out;
    out.degree = k;
    const std::vector<Term> all = algebra_.basis(k);
    std::vector<Term> ideal_terms;
    for (const Term& t : all)
      if (in_ideal_(t)) ideal_terms.push_back(t);
    const int total = static_cast<int>(all.size());
    const int r = static_cast<int>(ideal_terms.size());
    out.total_dimension = total;
    out.ideal_dimension = r;
    if (r == 0) return out;
    if (r == total) {
      out.leading = all;
      return out;
    }
    if (r <= total - r) {
      out.route = GinRoute::Direct;
      out.leading = direct(k, all, ideal_terms);
    } else {
      out.route = GinRoute::Dual;
      out.leading = dual(k, all);
    }
    if (static_cast<int>(out.leading.size()) != r) {
      throw Error(ErrorKind::IdentityViolated, "initial ideal dimension differs from the ideal dimension");
    }
    return out;
  }

 private:
  struct Images {
    const DenseMatrix<Field>* map = nullptr;
    bool project = false;
    std::vector<std::vector<Term>> basis;
    std::vector<std::unordered_map<Term, int>> index;
    std::unordered_map<Term, std::vector<Element>> memo;
  };

  void ensure_basis(Images& im, int k) const {
    while (static_cast<int>(im.basis.size()) <= k) {
      const int deg = static_cast<int>(im.basis.size());
      std::vector<Term> b;
      for (const Term& t : algebra_.basis(deg))
        if (!im.project || !in_ideal_(t)) b.push_back(t);
      std::unordered_map<Term, int> idx;
      for (int a = 0; a < static_cast<int>(b.size()); ++a) idx.emplace(b[a], a);
      im.basis.push_back(std::move(b));
      im.index.push_back(std::move(idx));
    }
  }

  const std::vector<Element>& image(Images& im, const Term& t) const {
    if (auto it = im.memo.find(t); it != im.memo.end()) return it->second;
    const int k = Algebra::degree(t);
    ensure_basis(im, k);
    std::vector<Element> out(im.basis[k].size(), field_.zero());
    if (k == 0) {
      if (!out.empty()) out[0] = field_.one();
      return im.memo.emplace(t, std::move(out)).first->second;
    }
    const auto [prefix, v] = Algebra::split_last(t);
    const std::vector<Element>& left = image(im, prefix);
    const std::vector<Term>& lower = im.basis[k - 1];
    for (std::size_t a = 0; a < left.size(); ++a) {
      if (field_.is_zero(left[a])) continue;
      for (int row = 1; row <= algebra_.n; ++row) {
        const Element& coef = (*im.map)(row - 1, v - 1);
        if (field_.is_zero(coef)) continue;
        const auto prod = Algebra::multiply(lower[a], row);
        if (!prod) continue;
        const auto pos = im.index[k].find(prod->first);
        if (pos == im.index[k].end()) continue;
        Element term = field_.mul(left[a], coef);
        if (prod->second < 0) term = field_.neg(term);
        out[pos->second] = field_.add(out[pos->second], term);
      }
    }
    return im.memo.emplace(t, std::move(out)).first->second;
  }

  std::vector<Term> direct(int k, const std::vector<Term>& all, const std::vector<Term>& ideal_terms) {
    if (!forward_.map) forward_.map = &g_;
    ensure_basis(forward_, k);
    DenseMatrix<Field> m(static_cast<Eigen::Index>(ideal_terms.size()), static_cast<Eigen::Index>(all.size()));
    for (std::size_t r = 0; r < ideal_terms.size(); ++r) {
      const std::vector<Element>& row = image(forward_, ideal_terms[r]);
      for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
    }
    const EchelonResult<Field> e = echelonize(field_, m);
    std::vector<Term> lead;
    for (int p : e.pivot_columns) lead.push_back(all[p]);
    return lead;
  }

  std::vector<Term> dual(int k, const std::vector<Term>& all) {
    if (!inverse_) inverse_ = invert(field_, g_);
    if (!backward_.map) {
      backward_.map = &*inverse_;
      backward_.project = true;
    }
    ensure_basis(backward_, k);
    IncrementalBasis<Field> basis(field_, static_cast<Eigen::Index>(backward_.basis[k].size()));
    std::vector<Term> lead;
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
      std::vector<Element> v = image(backward_, *it);
      if (!basis.insert(std::move(v))) lead.push_back(*it);
    }
    std::reverse(lead.begin(), lead.end());
    return lead;
  }

  const Field& field_;
  Algebra algebra_;
  DenseMatrix<Field> g_;
  Membership in_ideal_;
  std::optional<DenseMatrix<Field>> inverse_;
  Images forward_;
  Images backward_;
};

}  // namespace shiftlab
