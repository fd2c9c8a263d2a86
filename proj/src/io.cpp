#include "shiftlab/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

#include "shiftlab/error.hpp"

namespace shiftlab {

namespace {

Json face_json(Face f) { return Json(f.vertices()); }

Face face_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::MalformedInput, "a face must be an array of vertex labels");
  Face f;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw Error(ErrorKind::MalformedInput, "vertex labels must be integers");
    const int label = v.get<int>();
    if (label < 1 || label > kMaxVertex) throw Error(ErrorKind::MalformedInput, "vertex label outside [1, 64]");
    if (f.contains(label)) throw Error(ErrorKind::MalformedInput, "repeated vertex in a face");
    f = f.with(label);
  }
  return f;
}

}  // namespace

Json to_json(const SimplicialComplex& c) {
  Json j;
  j["ground"] = c.ground().vertices();
  Json facets = Json::array();
  for (Face f : c.facets()) facets.push_back(face_json(f));
  j["facets"] = facets;
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "expected an object with a \"facets\" array");
  }
  std::vector<Face> gens;
  for (const Json& f : j["facets"]) gens.push_back(face_from_json(f));
  if (gens.empty()) throw Error(ErrorKind::MalformedInput, "the void complex has no facets; use [[]] for {∅}");
  SimplicialComplex c = SimplicialComplex::generated_by(std::move(gens));
  if (j.contains("ground") && face_from_json(j["ground"]) != c.ground()) {
    throw Error(ErrorKind::MalformedInput, "\"ground\" must equal the union of the facets");
  }
  return c;
}

Json to_json(const Monomial& u, int n) { return Json(u.exponents(n)); }

Json to_json(const OrderIdeal& u) {
  Json j;
  j["m"] = u.m;
  Json mons = Json::array();
  for (const Monomial& w : u.monomials) mons.push_back(to_json(w, u.m));
  j["monomials"] = mons;
  return j;
}

OrderIdeal order_ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j["m"].is_number_integer() || !j.contains("monomials") ||
      !j["monomials"].is_array()) {
    throw Error(ErrorKind::MalformedInput, "expected {\"m\": int, \"monomials\": [[...], ...]}");
  }
  const int m = j["m"].get<int>();
  if (m < 0 || m > kMaxVariables) throw Error(ErrorKind::MalformedInput, "m outside [0, 16]");
  std::vector<Monomial> mons;
  for (const Json& e : j["monomials"]) {
    if (!e.is_array() || static_cast<int>(e.size()) != m) {
      throw Error(ErrorKind::MalformedInput, "each exponent vector needs exactly m entries");
    }
    std::vector<int> exps;
    for (const Json& x : e) {
      if (!x.is_number_integer() || x.get<int>() < 0) throw Error(ErrorKind::MalformedInput, "exponents must be nonnegative integers");
      exps.push_back(x.get<int>());
    }
    mons.push_back(Monomial::from_exponents(exps));
  }
  return OrderIdeal(m, std::move(mons));
}

Json to_json(const ShiftReport& r) {
  const int n = r.input.num_vertices();
  Json j;
  j["input"] = to_json(r.input);
  j["shifted"] = to_json(r.shifted);
  Json gens = Json::array();
  for (const Monomial& g : r.gin_generators) gens.push_back(to_json(g, std::max(n, g.last_variable())));
  j["gin_generators"] = gens;
  Json degrees = Json::array();
  for (const DegreeData& d : r.degrees) {
    degrees.push_back({{"degree", d.degree},
                       {"ideal_dimension", d.ideal_dimension},
                       {"total_dimension", d.total_dimension},
                       {"route", d.dual_route ? "dual" : "direct"}});
  }
  j["degrees"] = degrees;
  j["seeds"] = r.seeds;
  if (r.exact) {
    j["field"] = "rational";
  } else {
    j["prime"] = r.prime;
  }
  j["agreement"] = r.agreement;
  return j;
}

Json to_json(const SedWitness& w) {
  switch (w.kind) {
    case SedWitness::Kind::EmptyFace: return Json{{"leaf", "empty"}};
    case SedWitness::Kind::SimplexBoundary: return Json{{"leaf", "simplex-boundary"}};
    case SedWitness::Kind::Edge: break;
  }
  Json j;
  j["edge"] = {w.i, w.j};
  j["contraction"] = to_json(*w.contraction);
  j["link"] = to_json(*w.link);
  return j;
}

Json to_json(const ArtinianProfile& p) {
  Json j;
  j["dims"] = p.dims;
  j["socle_degree"] = p.socle_degree;
  j["ranks"] = p.ranks;
  j["seed"] = p.seed;
  return j;
}

Json to_json(const SlpResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.profile.dims.empty()) j["profile"] = to_json(r.profile);
  j["seeds"] = r.seeds;
  return j;
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace shiftlab
