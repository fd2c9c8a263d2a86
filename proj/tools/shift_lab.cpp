#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "shiftlab/delta.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/lefschetz.hpp"
#include "shiftlab/local_moves.hpp"
#include "shiftlab/random_complex.hpp"
#include "shiftlab/sed.hpp"
#include "shiftlab/shifting.hpp"
#include "shiftlab/squeezed.hpp"
#include "shiftlab/verify.hpp"

using namespace shiftlab;

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIndeterminate = 3 };

std::string format = "pretty";

int emit(const Json& j, int code) {
  std::cout << (format == "compact" ? j.dump() : j.dump(2)) << '\n';
  return code;
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RandomnessSuspect:
    case ErrorKind::GinUnavailable:
    case ErrorKind::NonTerminating: return kIndeterminate;
    default: return kUsage;
  }
}

struct GenArgs {
  std::string kind;
  int n = 0, d = 0, k = 0, dim = 1;
  double density = 0.5;
  std::uint64_t seed = 1;
  std::string ideal;
};

int run_gen(const GenArgs& a) {
  if (a.kind == "cyclic") return emit(to_json(cyclic_boundary(a.n, a.d)), kPass);
  if (a.kind == "delta") return emit(to_json(build_delta(a.n, a.d)), kPass);
  if (a.kind == "simplex") {
    if (a.k < 1 || a.k > 63) throw Error(ErrorKind::InvalidParameters, "--k must lie in [1,63]");
    return emit(to_json(simplex_boundary(Face::interval(1, a.k + 1))), kPass);
  }
  if (a.kind == "random") return emit(to_json(random_complex(a.n, a.dim, a.density, a.seed)), kPass);
  if (a.kind == "squeezed") {
    if (a.ideal.empty()) throw Error(ErrorKind::InvalidParameters, "gen squeezed needs --ideal");
    return emit(to_json(squeezed_sphere(order_ideal_from_json(read_json(a.ideal)), a.d, a.n)), kPass);
  }
  throw Error(ErrorKind::InvalidParameters, "unknown generator " + a.kind);
}

struct CheckArgs {
  std::string kind;
  std::string input = "-";
  int i = 0, j = 0, n = 0, d = 0;
  std::string method = "direct";
  std::string mode = "symmetric";
};

int run_check(const CheckArgs& a, const ShiftOptions& so) {
  const SimplicialComplex c = complex_from_json(read_json(a.input));
  if (a.kind == "sed") {
    const auto w = is_sed(c);
    if (w) return emit(Json{{"sed", true}, {"witness", to_json(**w)}}, kPass);
    Json blocked = Json::array();
    if (is_pure(c)) {
      for (Face e : faces_of_card(c, 2)) {
        const LinkConditionResult lc = link_condition(c, e.min(), e.max());
        if (!lc.holds) blocked.push_back({{"edge", e.vertices()}, {"witness", lc.witness ? lc.witness->vertices() : std::vector<int>{}}});
      }
    }
    return emit(Json{{"sed", false}, {"pure", is_pure(c)}, {"link_condition_failures", blocked}}, kFail);
  }
  if (a.kind == "link-condition") {
    const LinkConditionResult lc = link_condition(c, a.i, a.j);
    Json j{{"i", a.i}, {"j", a.j}, {"holds", lc.holds}};
    if (lc.witness) j["witness"] = lc.witness->vertices();
    return emit(j, lc.holds ? kPass : kFail);
  }
  if (a.kind == "shifted") {
    const bool ok = is_shifted(c);
    return emit(Json{{"shifted", ok}}, ok ? kPass : kFail);
  }
  if (a.kind == "pure") {
    const bool ok = is_pure(c);
    return emit(Json{{"pure", ok}}, ok ? kPass : kFail);
  }
  if (a.kind == "cm") {
    const ShiftMode mode = a.mode == "exterior" ? ShiftMode::Exterior : ShiftMode::Symmetric;
    const bool ok = is_cm_via_shift(c, mode, so);
    return emit(Json{{"cohen_macaulay", ok}, {"mode", a.mode}, {"seed", so.seed}, {"prime", so.prime}}, ok ? kPass : kFail);
  }
  if (a.kind == "slp") {
    const SlpResult r = a.method == "shift" ? check_slp_via_shift(c, so) : check_slp_direct(c, so.seed, so.prime);
    Json j = to_json(r);
    j["method"] = a.method;
    j["prime"] = so.prime;
    const int code = r.verdict == Verdict::True ? kPass : r.verdict == Verdict::False ? kFail : kIndeterminate;
    return emit(j, code);
  }
  if (a.kind == "delta-containment") {
    const ContainmentResult r = contained_in_delta(c, a.n, a.d);
    Json j{{"contained", r.contained}, {"n", a.n}, {"d", a.d}};
    if (r.offending) j["offending"] = r.offending->vertices();
    return emit(j, r.contained ? kPass : kFail);
  }
  throw Error(ErrorKind::InvalidParameters, "unknown check " + a.kind);
}

struct ShiftArgs {
  std::string mode;
  std::string input = "-";
  int i = 0, j = 0;
};

int run_shift(const ShiftArgs& a, const ShiftOptions& so) {
  const SimplicialComplex c = complex_from_json(read_json(a.input));
  if (a.mode == "exterior") return emit(to_json(exterior_shift(c, so)), kPass);
  if (a.mode == "symmetric") return emit(to_json(symmetric_shift(c, so)), kPass);
  if (a.mode == "elementary") {
    const int n = std::max(c.ground().max(), std::max(a.i, a.j));
    const MonomialIdeal init = initial_ideal_of_elementary_map(c, a.i, a.j, n);
    const SimplicialComplex moved = shift_ij(c, a.i, a.j);
    Json gens = Json::array();
    for (const Monomial& g : init.generators()) gens.push_back(to_json(g, n));
    return emit(Json{{"input", to_json(c)},
                     {"i", a.i},
                     {"j", a.j},
                     {"initial_generators", gens},
                     {"shift_ij", to_json(moved)},
                     {"link_condition", link_condition_via_ideal(c, a.i, a.j)},
                     {"agreement", init == stanley_reisner_ideal(moved, n)},
                     {"prime", so.prime}},
                kPass);
  }
  throw Error(ErrorKind::InvalidParameters, "unknown mode " + a.mode);
}

int run_verify(const std::string& suite, SuiteOptions o, std::optional<int> n) {
  if (n && suite == "lemma21") o.sizes = {*n};
  const VerifyReport r = run_suite(suite, o);
  return emit(to_json(r), r.passed() ? kPass : kFail);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Algebraic shifting of simplicial complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", format, "Output style")->check(CLI::IsMember({"compact", "pretty"}));

  ShiftOptions so;
  bool exact = false;
  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--seed", so.seed, "Random seed");
    sub->add_option("--trials", so.trials, "Independent Gin trials")->check(CLI::PositiveNumber);
    sub->add_option("--prime", so.prime, "Field characteristic");
    sub->add_flag("--exact", exact, "Exact rational arithmetic");
  };

  GenArgs gen;
  CLI::App* g = app.add_subcommand("gen", "Generate a complex");
  g->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"cyclic", "delta", "squeezed", "simplex", "random"}));
  g->add_option("--n", gen.n);
  g->add_option("--d", gen.d);
  g->add_option("--k", gen.k, "Simplex dimension");
  g->add_option("--dim", gen.dim, "Dimension of a random complex");
  g->add_option("--density", gen.density);
  g->add_option("--seed", gen.seed);
  g->add_option("--ideal", gen.ideal, "Order ideal JSON");

  CheckArgs chk;
  CLI::App* c = app.add_subcommand("check", "Test a property of a complex");
  c->add_option("kind", chk.kind)
      ->required()
      ->check(CLI::IsMember({"sed", "link-condition", "shifted", "pure", "cm", "slp", "delta-containment"}));
  c->add_option("input", chk.input, "Complex JSON, - for stdin");
  c->add_option("--i", chk.i);
  c->add_option("--j", chk.j);
  c->add_option("--n", chk.n);
  c->add_option("--d", chk.d);
  c->add_option("--method", chk.method)->check(CLI::IsMember({"direct", "shift"}));
  c->add_option("--mode", chk.mode)->check(CLI::IsMember({"exterior", "symmetric"}));
  add_field(c);

  ShiftArgs sh;
  CLI::App* s = app.add_subcommand("shift", "Shift a complex");
  s->add_option("--mode", sh.mode)->required()->check(CLI::IsMember({"exterior", "symmetric", "elementary"}));
  s->add_option("input", sh.input, "Complex JSON, - for stdin");
  s->add_option("--i", sh.i);
  s->add_option("--j", sh.j);
  add_field(s);

  SuiteOptions vo;
  std::string suite;
  std::optional<int> lemma_n;
  CLI::App* v = app.add_subcommand("verify", "Run a verification suite");
  v->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  v->add_option("--seed", vo.seed);
  v->add_option("--trials", vo.trials)->check(CLI::PositiveNumber);
  v->add_option("--prime", vo.prime);
  v->add_option("--max-n", vo.max_n, "Largest n for kalai-cyclic");
  v->add_option("--n", lemma_n, "n for main2, single size for lemma21");
  v->add_option("--d", vo.d, "d for main2");
  v->add_option("--sizes", vo.sizes, "Vertex counts for lemma21");
  v->add_option("--cases", vo.cases, "Random instances");
  v->add_option("--cm-cases", vo.cm_cases, "Random Cohen-Macaulay instances");
  v->add_option("--max-sphere-n", vo.max_sphere_n, "Largest n for squeezed spheres");
  v->add_option("--dims", vo.sphere_dims, "Sphere dimensions d");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    so.exact = exact;
    if (app.got_subcommand(g)) return run_gen(gen);
    if (app.got_subcommand(c)) return run_check(chk, so);
    if (app.got_subcommand(s)) return run_shift(sh, so);
    if (lemma_n) vo.n = *lemma_n;
    return run_verify(suite, vo, lemma_n);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return emit(Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}, exit_for(e.kind()));
  }
}
