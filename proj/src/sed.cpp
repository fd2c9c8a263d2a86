#include "shiftlab/sed.hpp"

#include <map>
#include <vector>

#include "shiftlab/local_moves.hpp"

namespace shiftlab {

namespace {

using Key = std::vector<std::uint64_t>;
using Memo = std::map<Key, std::shared_ptr<const SedWitness>>;

Key key_of(const SimplicialComplex& c) {
  Key k;
  for (Face f : c.facets()) k.push_back(f.bits());
  return k;
}

std::shared_ptr<const SedWitness> search(const SimplicialComplex& c, Memo& memo) {
  if (!is_pure(c)) return nullptr;
  if (c.is_empty_face()) return std::make_shared<SedWitness>(SedWitness{SedWitness::Kind::EmptyFace, 0, 0, {}, {}});
  if (is_simplex_boundary(c)) {
    return std::make_shared<SedWitness>(SedWitness{SedWitness::Kind::SimplexBoundary, 0, 0, {}, {}});
  }
  const Key key = key_of(c);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  memo[key] = nullptr;
  std::shared_ptr<const SedWitness> found;
  for (Face e : faces_of_card(c, 2)) {
    const int i = e.min(), j = e.max();
    if (!link_condition(c, i, j)) continue;
    auto con = search(contraction(c, i, j), memo);
    if (!con) continue;
    auto lk = search(link(c, e), memo);
    if (!lk) continue;
    found = std::make_shared<SedWitness>(SedWitness{SedWitness::Kind::Edge, i, j, con, lk});
    break;
  }
  memo[key] = found;
  return found;
}

}  // namespace

bool is_simplex_boundary(const SimplicialComplex& c) {
  const int n = c.num_vertices();
  if (n < 2 || static_cast<int>(c.facets().size()) != n) return false;
  for (Face f : c.facets())
    if (f.size() != n - 1) return false;
  return true;
}

std::optional<std::shared_ptr<const SedWitness>> is_sed(const SimplicialComplex& c) {
  Memo memo;
  auto w = search(c, memo);
  if (!w) return std::nullopt;
  return w;
}

bool verify_witness(const SimplicialComplex& c, const SedWitness& w) {
  switch (w.kind) {
    case SedWitness::Kind::EmptyFace: return c.is_empty_face();
    case SedWitness::Kind::SimplexBoundary: return is_simplex_boundary(c);
    case SedWitness::Kind::Edge: break;
  }
  if (!w.contraction || !w.link || !is_pure(c) || w.i >= w.j) return false;
  const Face e{w.i, w.j};
  if (!c.contains(e) || !link_condition(c, w.i, w.j)) return false;
  const SimplicialComplex con = contraction(c, w.i, w.j);
  const SimplicialComplex lk = link(c, e);
  if (con.dim() != c.dim() || lk.dim() != c.dim() - 2) return false;
  return verify_witness(con, *w.contraction) && verify_witness(lk, *w.link);
}

bool h_conditions(const SimplicialComplex& c) {
  const HVector h = h_vector(c);
  const int d = h.d();
  for (int i = 0; i <= d; ++i)
    if (h.h[i] != h.h[d - i]) return false;
  for (int i = 1; i <= d / 2; ++i)
    if (h.h[i - 1] > h.h[i]) return false;
  return true;
}

int witness_size(const SedWitness& w) {
  if (w.kind != SedWitness::Kind::Edge) return 1;
  return 1 + witness_size(*w.contraction) + witness_size(*w.link);
}

}  // namespace shiftlab
