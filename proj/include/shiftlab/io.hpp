#pragma once

#include <string>

#include <json.hpp>

#include "shiftlab/complex.hpp"
#include "shiftlab/lefschetz.hpp"
#include "shiftlab/sed.hpp"
#include "shiftlab/shifting.hpp"
#include "shiftlab/squeezed.hpp"

namespace shiftlab {

using Json = nlohmann::ordered_json;

/// {"ground": [...], "facets": [[...], ...]}; {"facets": [[]]} is {∅}.
Json to_json(const SimplicialComplex& c);
/// Throws MalformedInput. A "ground" entry, when present, must equal the
/// union of the facets.
SimplicialComplex complex_from_json(const Json& j);

/// {"m": m, "monomials": [[exponents of x_1..x_m], ...]}
Json to_json(const OrderIdeal& u);
OrderIdeal order_ideal_from_json(const Json& j);

/// Exponent vector over n variables.
Json to_json(const Monomial& u, int n);

Json to_json(const ShiftReport& r);
Json to_json(const SedWitness& w);
Json to_json(const ArtinianProfile& p);
Json to_json(const SlpResult& r);

/// Parses a file, or standard input for "-". Throws MalformedInput.
Json read_json(const std::string& path);

}  // namespace shiftlab
