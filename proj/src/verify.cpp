#include "shiftlab/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "shiftlab/delta.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/lefschetz.hpp"
#include "shiftlab/local_moves.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/sed.hpp"

namespace shiftlab {

namespace {

struct Checks {
  std::vector<std::string> failed;
  void expect(bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  }
  bool ok() const { return failed.empty(); }
  std::string detail() const {
    std::string s;
    for (const std::string& f : failed) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

void record(VerifyReport& r, std::string name, const Checks& checks, Json cert) {
  r.instances.push_back(InstanceResult{std::move(name), checks.ok(), checks.detail(), std::move(cert)});
}

// Runs body, turning library errors into a failed instance.
void guarded(VerifyReport& r, const std::string& name, Json cert, const std::function<void(Checks&)>& body) {
  Checks checks;
  try {
    body(checks);
  } catch (const Error& e) {
    checks.expect(false, e.what());
  }
  record(r, name, checks, std::move(cert));
}

bool h_symmetric(const SimplicialComplex& c) {
  const HVector h = h_vector(c);
  for (int i = 0; i <= h.d(); ++i)
    if (h.h[i] != h.h[h.d() - i]) return false;
  return true;
}

std::vector<int> or_default(const std::vector<int>& v, std::vector<int> fallback) { return v.empty() ? fallback : v; }

Json sphere_cert(const SqueezedInstance& s) {
  return Json{{"U", to_json(s.u)}, {"d", s.d}, {"n", s.n}};
}

std::string sphere_name(const SqueezedInstance& s) {
  std::string u;
  for (const Monomial& w : s.u.monomials) u += (u.empty() ? "" : ",") + w.to_string();
  return "S_" + std::to_string(s.d) + "({" + u + "}) n=" + std::to_string(s.n);
}

// A random complex for the property suites: alternates the skeleton
// generator and free random generation.
SimplicialComplex random_input(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (rng() % 2 == 0 && n >= 3) {
    const int dim = std::uniform_int_distribution<int>(1, n - 2)(rng);
    const double density = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
    return random_complex(n, dim, density, rng());
  }
  return random_generated(n, 6, std::max(1, n - 1), rng());
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  std::mt19937_64 rng(seq);
  return rng();
}

void suite_cyclic(VerifyReport& r, const SuiteOptions& o) {
  const ShiftOptions so = o.shift_options();
  for (int n = 3; n <= o.max_n; ++n) {
    for (int d = 2; d < n; ++d) {
      guarded(r, "C(" + std::to_string(n) + "," + std::to_string(d) + ")", Json{{"n", n}, {"d", d}}, [&](Checks& c) {
        const SimplicialComplex cyc = cyclic_boundary(n, d);
        const SimplicialComplex delta = build_delta(n, d);
        const SimplicialComplex s = symmetric_shift(cyc, so).shifted;
        const SimplicialComplex e = exterior_shift(cyc, so).shifted;
        c.expect(s == delta, "Δ^s(C(n,d)) != Δ(n,d)");
        c.expect(e == s, "Δ^e(C(n,d)) != Δ^s(C(n,d))");
      });
    }
  }
}

void suite_small_examples(VerifyReport& r, const SuiteOptions&) {
  const SimplicialComplex cycle = SimplicialComplex::generated_by({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{1, 4}});
  const SimplicialComplex gamma2 = SimplicialComplex::generated_by({Face{1, 2}, Face{2, 3}, Face{3, 4}, Face{2, 4}});
  const SimplicialComplex sigma = unite(cycle, SimplicialComplex::generated_by({Face{1, 3}}));
  guarded(r, "4-cycle", to_json(cycle), [&](Checks& c) {
    const auto w = is_sed(cycle);
    c.expect(w.has_value(), "not SED");
    if (!w) return;
    c.expect((*w)->kind == SedWitness::Kind::Edge && (*w)->i == 1 && (*w)->j == 2, "first witness edge is not {1,2}");
    c.expect(verify_witness(cycle, **w), "witness does not replay");
  });
  guarded(r, "{12,23,34,24}", to_json(gamma2), [&](Checks& c) {
    const auto w = is_sed(gamma2);
    c.expect(w.has_value(), "not SED");
    if (w) c.expect(verify_witness(gamma2, **w), "witness does not replay");
  });
  guarded(r, "4-cycle + {13}", to_json(sigma), [&](Checks& c) {
    c.expect(!is_sed(sigma).has_value(), "reported SED");
    for (Face e : faces_of_card(sigma, 2)) {
      c.expect(!link_condition(sigma, e.min(), e.max()), "Link condition holds at " + e.to_string());
    }
  });
}

void suite_main1(VerifyReport& r, const SuiteOptions& o) {
  const ShiftOptions so = o.shift_options();
  for (const SqueezedInstance& s : squeezed_spheres(or_default(o.sphere_dims, {2, 3, 4}), o.max_sphere_n, true)) {
    guarded(r, sphere_name(s), sphere_cert(s), [&](Checks& c) {
      const auto w = is_sed(s.sphere);
      c.expect(w.has_value(), "not SED");
      if (w) c.expect(verify_witness(s.sphere, **w), "witness does not replay");
      const SimplicialComplex e = exterior_shift(s.sphere, so).shifted;
      const SimplicialComplex sym = symmetric_shift(s.sphere, so).shifted;
      c.expect(is_pure(e), "Δ^e not pure");
      c.expect(is_pure(sym), "Δ^s not pure");
      c.expect(h_symmetric(s.sphere), "h not symmetric");
      c.expect(contained_in_delta(e, s.n, s.d).contained, "Δ^e not in Δ(n,d)");
      c.expect(contained_in_delta(sym, s.n, s.d).contained, "Δ^s not in Δ(n,d)");
      c.expect(e == sym, "Δ^e != Δ^s");
    });
  }
}

void suite_main2(VerifyReport& r, const SuiteOptions& o) {
  const ShiftOptions so = o.shift_options();
  for (const SimplicialComplex& sigma : squeezed_targets(o.n, o.d)) {
    Json cert{{"sigma", to_json(sigma)}, {"d", o.d}, {"seed", so.seed}};
    std::string name;
    for (Face f : sigma.facets()) name += f.to_string();
    guarded(r, name, cert, [&](Checks& c) {
      const Realization real = realize_squeezed(sigma, o.d, so);
      c.expect(is_pure(real.sphere) && h_symmetric(real.sphere), "realization is not a pure complex with symmetric h");
      c.expect(exterior_shift(real.sphere, so).shifted == sigma, "Δ^e(realization) != Σ");
      c.expect(symmetric_shift(real.sphere, so).shifted == sigma, "Δ^s(realization) != Σ");
    });
  }
}

void suite_lemma21(VerifyReport& r, const SuiteOptions& o) {
  for (int n : or_default(o.sizes, {4, 5, 6, 7})) {
    for (int t = 0; t < o.cases; ++t) {
      const std::uint64_t seed = mix(o.seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t));
      const SimplicialComplex cx = random_input(n, seed);
      guarded(r, "n=" + std::to_string(n) + " #" + std::to_string(t), Json{{"complex", to_json(cx)}, {"seed", seed}},
              [&](Checks& c) {
                const std::vector<int> vs = cx.ground().vertices();
                for (std::size_t a = 0; a < vs.size(); ++a) {
                  for (std::size_t b = a + 1; b < vs.size(); ++b) {
                    const int i = vs[a], j = vs[b];
                    const bool one = link_condition(cx, i, j).holds;
                    const bool two = shift_ij_faces(cx, i, j) == contraction_link_union_faces(cx, i, j);
                    const bool three = link_condition_via_ideal(cx, i, j);
                    const std::string pair = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
                    c.expect(one == two && two == three, "conditions disagree at " + pair);
                    if (one) c.expect(link_condition(shift_ij(cx, i, j), i, j).holds, "Shift loses the Link condition at " + pair);
                  }
                }
              });
    }
  }
}

void suite_lemma52(VerifyReport& r, const SuiteOptions& o) {
  for (int d : or_default(o.sphere_dims, {2, 3, 4})) {
    for (int n = d + 1; n <= o.max_sphere_n; ++n) {
      for (const OrderIdeal& u : enumerate_order_ideals(n - d - 1, (d + 1) / 2)) {
        const SqueezedInstance s{u, d, n, squeezed_sphere(u, d, n)};
        guarded(r, sphere_name(s), sphere_cert(s), [&](Checks& c) {
          const SimplicialComplex ball = squeezed_ball(u, d, n);
          const HVector hb = h_vector(ball);
          for (int i = 0; i <= d + 1; ++i) {
            std::int64_t count = 0;
            for (const Monomial& w : u.monomials) count += w.degree() == i;
            c.expect(hb.h[i] == count, "h_" + std::to_string(i) + "(B) != #{deg u = i}");
          }
          const HVector hs = h_vector(s.sphere);
          for (int i = 0; i <= d / 2; ++i) {
            const std::int64_t prev = i == 0 ? 0 : hs.h[i - 1];
            c.expect(hs.h[i] - prev == hb.h[i], "h_i(S) - h_{i-1}(S) != h_i(B) at i=" + std::to_string(i));
          }
          for (int k = 0; 2 * k <= d; ++k) {
            c.expect(faces_of_card(ball, k) == faces_of_card(s.sphere, k), "small faces of B and S differ, k=" + std::to_string(k));
          }
          if (n - d - 1 < 1) return;
          const Lemma52Sides sides = lemma52_sides(u, d, n);
          c.expect(sides.shifted_faces == sides.union_faces, "Shift_12 decomposition fails");
          c.expect(link_condition(s.sphere, 1, 2).holds, "Link condition fails at {1,2}");
          c.expect(contraction(s.sphere, 1, 2) == sides.hat_sphere, "contraction != S_d(Û)");
          c.expect(link(s.sphere, Face{1, 2}) == sides.tilde_sphere, "lk{1,2} != S̃_{d-2}(Ũ)");
        });
      }
    }
  }
}

void suite_elementary(VerifyReport& r, const SuiteOptions& o) {
  for (int t = 0; t < o.cases; ++t) {
    const std::uint64_t seed = mix(o.seed, 77, static_cast<std::uint64_t>(t));
    const int n = 3 + static_cast<int>(seed % 4);
    const SimplicialComplex cx = random_input(n, seed);
    const int top = cx.ground().max();
    guarded(r, "#" + std::to_string(t), Json{{"complex", to_json(cx)}, {"seed", seed}}, [&](Checks& c) {
      const MonomialIdeal ideal = stanley_reisner_ideal(cx, top);
      const std::vector<int> vs = cx.ground().vertices();
      for (std::size_t a = 0; a < vs.size(); ++a) {
        for (std::size_t b = a + 1; b < vs.size(); ++b) {
          const int i = vs[a], j = vs[b];
          const std::string pair = "{" + std::to_string(i) + "," + std::to_string(j) + "}";
          const MonomialIdeal init = initial_ideal_of_elementary_map(cx, i, j, top);
          if (link_condition_via_ideal(cx, i, j)) {
            c.expect(init == stanley_reisner_ideal(shift_ij(cx, i, j), top), "in(φ_ij(I)) != I_Shift at " + pair);
            continue;
          }
          const Monomial xij = Monomial::variable(i) * Monomial::variable(j);
          for (const Monomial& g : ideal.generators()) {
            if (!xij.divides(g)) continue;
            const Monomial expected = g.divide_by_variable(j)->times(i);
            const auto& gens = init.generators();
            c.expect(std::find(gens.begin(), gens.end(), expected) != gens.end(),
                     expected.to_string() + " is not a generator at " + pair);
          }
        }
      }
    });
  }
}

void suite_properties(VerifyReport& r, const SuiteOptions& o) {
  ShiftOptions so = o.shift_options();
  for (int t = 0; t < o.cases; ++t) {
    const std::uint64_t seed = mix(o.seed, 99, static_cast<std::uint64_t>(t));
    std::mt19937_64 rng(seed);
    const int n = std::uniform_int_distribution<int>(3, 6)(rng);
    const SimplicialComplex cx = random_input(n, rng());
    std::vector<Face> sub;
    for (Face f : cx.facets())
      if (rng() % 2 == 0) sub.push_back(f);
    if (sub.empty()) sub.push_back(cx.facets().front().without(cx.facets().front().max()));
    const SimplicialComplex sigma = SimplicialComplex::generated_by(sub);
    const int d1 = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const int d2 = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const SimplicialComplex shifted_input =
        unite(random_shifted_pure(n, d1, 1 + static_cast<int>(rng() % 2), rng()), random_shifted_pure(n, d2, 1, rng()));
    Json cert{{"complex", to_json(cx)}, {"subcomplex", to_json(sigma)}, {"shifted", to_json(shifted_input)}, {"seed", seed}};
    guarded(r, "#" + std::to_string(t), cert, [&](Checks& c) {
      for (ShiftMode mode : {ShiftMode::Exterior, ShiftMode::Symmetric}) {
        const std::string tag = mode == ShiftMode::Exterior ? "Δ^e " : "Δ^s ";
        auto shift = [&](const SimplicialComplex& x, std::optional<Face> v) {
          ShiftOptions opt = so;
          opt.vertex_set = v;
          return mode == ShiftMode::Exterior ? exterior_shift(x, opt).shifted : symmetric_shift(x, opt).shifted;
        };
        const SimplicialComplex dc = shift(cx, std::nullopt);
        c.expect(is_shifted(dc), tag + "S1 fails");
        c.expect(f_vector(dc) == f_vector(cx), tag + "S3 fails");
        c.expect(shift(dc, std::nullopt) == dc, tag + "idempotence fails");
        c.expect(shift(shifted_input, std::nullopt) == shifted_input, tag + "S2 fails");
        c.expect(is_subcomplex(shift(sigma, cx.ground()), shift(cx, cx.ground())), tag + "S4 fails (randomness suspect)");
      }
    });
  }
}

void suite_slp(VerifyReport& r, const SuiteOptions& o) {
  const ShiftOptions so = o.shift_options();
  std::vector<LabeledComplex> inputs;
  for (const SqueezedInstance& s : squeezed_spheres(or_default(o.sphere_dims, {2, 3, 4}), o.max_sphere_n, true)) {
    inputs.push_back({sphere_name(s), s.sphere});
  }
  for (int t = 0; t < o.cm_cases; ++t) {
    LabeledComplex lc = random_cm_complex(8, mix(o.seed, 55, static_cast<std::uint64_t>(t)));
    lc.recipe += " #" + std::to_string(t);
    inputs.push_back(std::move(lc));
  }
  for (const LabeledComplex& in : inputs) {
    guarded(r, in.recipe, Json{{"complex", to_json(in.complex)}, {"seed", so.seed}}, [&](Checks& c) {
      const SlpResult direct = check_slp_direct(in.complex, so.seed, so.prime);
      const SlpResult via = check_slp_via_shift(in.complex, so);
      c.expect(direct.verdict != Verdict::Indeterminate, "direct check indeterminate");
      c.expect((direct.verdict == Verdict::True) == (via.verdict == Verdict::True),
               "direct says " + to_string(direct.verdict) + ", shift says " + to_string(via.verdict));
      c.expect(is_cm_via_shift(in.complex, ShiftMode::Symmetric, so), "not Cohen-Macaulay by the shift test");
      const HVector h = h_vector(in.complex);
      for (int k = 0; k <= h.d(); ++k) {
        const std::int64_t dim = k < static_cast<int>(direct.profile.dims.size()) ? direct.profile.dims[k] : 0;
        c.expect(dim == h.h[k], "quotient dimension differs from h_" + std::to_string(k));
      }
    });
  }
}

void suite_facets(VerifyReport& r, const SuiteOptions& o) {
  const ShiftOptions so = o.shift_options();
  for (const SqueezedInstance& s : squeezed_spheres(or_default(o.sphere_dims, {2, 3, 4}), o.max_sphere_n, true)) {
    guarded(r, sphere_name(s), sphere_cert(s), [&](Checks& c) {
      const std::vector<Monomial> l = L_from_U(s.u, s.d);
      const SimplicialComplex shifted = symmetric_shift(s.sphere, so).shifted;
      c.expect(facets_from_L(l, s.n, s.d) == shifted.facets(), "facets from L differ from Δ^s facets");
      c.expect(extract_U(s.sphere, s.d, so) == s.u, "U(S_d(U)) != U");
      c.expect(extract_L(s.sphere, s.d, so) == l, "L(S_d(U)) differs from the U-formula");
    });
  }
}

using SuiteFn = void (*)(VerifyReport&, const SuiteOptions&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"kalai-cyclic", suite_cyclic},     {"example12", suite_small_examples},     {"main1", suite_main1},
      {"main2", suite_main2},            {"lemma21", suite_lemma21},         {"lemma52", suite_lemma52},
      {"elementary-ideal", suite_elementary}, {"properties-s1s4", suite_properties}, {"slp-agreement", suite_slp},
      {"facet-formulas", suite_facets},
  };
  return suites;
}

}  // namespace

int VerifyReport::failures() const {
  int f = 0;
  for (const InstanceResult& i : instances) f += !i.pass;
  return f;
}

ShiftOptions SuiteOptions::shift_options() const {
  ShiftOptions so;
  so.seed = seed;
  so.trials = trials;
  so.prime = prime;
  return so;
}

std::vector<SqueezedInstance> squeezed_spheres(const std::vector<int>& dims, int max_n, bool half) {
  std::vector<SqueezedInstance> out;
  for (int d : dims) {
    for (int n = d + 1; n <= max_n; ++n) {
      for (const OrderIdeal& u : enumerate_order_ideals(n - d - 1, half ? d / 2 : (d + 1) / 2)) {
        out.push_back(SqueezedInstance{u, d, n, squeezed_sphere(u, d, n)});
      }
    }
  }
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

VerifyReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::InvalidParameters, "unknown suite " + name);
  VerifyReport r;
  r.suite = name;
  r.seeds = {opts.seed};
  r.prime = opts.prime;
  const auto start = std::chrono::steady_clock::now();
  it->second(r, opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Json to_json(const VerifyReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["instances"] = r.instances.size();
  j["failures"] = r.failures();
  j["seeds"] = r.seeds;
  j["prime"] = r.prime;
  j["seconds"] = r.seconds;
  Json fails = Json::array();
  for (const InstanceResult& i : r.instances) {
    if (i.pass) continue;
    fails.push_back({{"name", i.name}, {"detail", i.detail}, {"certificate", i.certificate}});
  }
  j["failed"] = fails;
  j["passed"] = r.passed();
  return j;
}

}  // namespace shiftlab
