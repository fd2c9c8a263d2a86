#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/complex.hpp"
#include "shiftlab/monomial.hpp"
#include "shiftlab/shifting.hpp"

namespace shiftlab {

enum class ShiftMode { Exterior, Symmetric };

/// Purity of the shifted complex.
bool is_cm_via_shift(const SimplicialComplex& c, ShiftMode mode, const ShiftOptions& opts = {});

struct ArtinianProfile {
  /// dim (S/(I + θ))_k for k = 0, 1, ... up to the first zero.
  std::vector<std::int64_t> dims;
  /// Largest k with dims[k] != 0.
  int socle_degree = 0;
  /// rank of ω^{s-2i} : Q_i -> Q_{s-i} for i = 0..floor(s/2).
  std::vector<int> ranks;
  std::uint64_t seed = 0;
};

enum class Verdict { True, False, Indeterminate };
std::string to_string(Verdict v);

struct SlpResult {
  Verdict verdict = Verdict::False;
  std::string reason;
  ArtinianProfile profile;
  std::vector<std::uint64_t> seeds;
  explicit operator bool() const { return verdict == Verdict::True; }
};

/// Artinian reduction of S/I by d random linear forms θ over F_p, with the
/// ranks of multiplication by powers of a random ω. Throws DimensionMismatch
/// when the quotient does not vanish by degree max_degree.
ArtinianProfile artinian_profile(const MonomialIdeal& ideal, int krull_dim, std::uint64_t seed, int max_degree,
                                 std::uint64_t prime = PrimeField::kMersenne61);

/// All ω^{s-2i} bijective (equal dimensions and full rank).
bool profile_is_slp(const ArtinianProfile& p);

/// SLP of K[C] over F_p: quotient dims must equal h(C) (certifying that θ is
/// an l.s.o.p. and C is Cohen–Macaulay), h_d > 0, and every ω^{s-2i} must be
/// bijective. A failed check is retried once with a fresh seed; a pass and a
/// fail across the two seeds is reported as Indeterminate.
SlpResult check_slp_direct(const SimplicialComplex& c, std::uint64_t seed = 1,
                           std::uint64_t prime = PrimeField::kMersenne61);

/// CM via purity of Δ^s, then Δ^s(C) ⊂ Δ(n,d), h symmetric and h_d > 0.
SlpResult check_slp_via_shift(const SimplicialComplex& c, const ShiftOptions& opts = {});

/// SLP of S/I for a monomial ideal whose quotient has Krull dimension
/// krull_dim: Cohen–Macaulay (quotient dims equal the h-polynomial of S/I)
/// and all ω^{s-2i} bijective, with the same retry policy as above.
SlpResult check_slp_ideal(const MonomialIdeal& ideal, int krull_dim, std::uint64_t seed = 1,
                          std::uint64_t prime = PrimeField::kMersenne61);

struct WiebeInstance {
  SimplicialComplex complex = SimplicialComplex::empty_face();
  int i = 0;
  int j = 0;
  /// The truncated initial ideal reproduces the Hilbert function of I_C; when
  /// false the instance is skipped.
  bool initial_complete = false;
  bool initial_slp = false;   ///< S/in(φ_ij(I_C)) has SLP
  bool original_slp = false;  ///< S/I_C has SLP
  /// False only if S/in(I) has SLP while S/I does not.
  bool consistent = true;
};

/// Fills in the verdicts of every instance (complex, i, j given).
std::vector<WiebeInstance> wiebe_spotcheck(std::vector<WiebeInstance> cases, std::uint64_t seed = 1);

}  // namespace shiftlab
