#pragma once

#include <json.hpp>

#include "tropnorm/free_semiring.hpp"
#include "tropnorm/monomial_ideal.hpp"
#include "tropnorm/normalization.hpp"

namespace tropnorm {

using Json = nlohmann::json;

// Thrown for structurally invalid domain JSON; the message carries the
// JSON path of the offending node.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rationals travel as strings "p/q" or "p"; vectors as arrays.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& where);

Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j, const std::string& where);

Json qvector_to_json(const QVector& v);
QVector qvector_from_json(const Json& j, const std::string& where);

// {"terms": [{"slope": [...], "coeff": "p/q"}]}, terms in lex slope order.
// Parsing accepts an optional "dim" member; expected_dim (when >= 0) wins and
// every slope is checked against it. An empty term list with no dimension
// source anywhere is rejected.
Json poly_to_json(const TropPoly& f);
TropPoly poly_from_json(const Json& j, const std::string& where, int expected_dim = -1);

// {"dim": n, "constraints": [{"F": [...], "lambda": "p/q"}]}
Json pair_to_json(const MonoidPair& pair);
MonoidPair pair_from_json(const Json& j, const std::string& where);

// Same wire shape as MonoidPair; the polytope is not validated here.
Json polytope_to_json(const HPolytope& P);
HPolytope polytope_from_json(const Json& j, const std::string& where);

// {"dim": n, "gens": [[e1,...,en], ...]}
Json ideal_to_json(const MonomialIdeal& I);
MonomialIdeal ideal_from_json(const Json& j, const std::string& where);

// {"dim": n, "gens": [[...], ...], "degree_bound": D}
Json monoid_gens_to_json(const AffineMonoidGens& m);
AffineMonoidGens monoid_gens_from_json(const Json& j, const std::string& where);

Json monoid_witness_to_json(const MonoidWitness& w);
Json syntactic_comparison_to_json(const SyntacticComparison& c);
Json canonical_form_to_json(const CanonicalForm& cf);
Json cells_to_json(const std::vector<LinearityCell>& cells);

}  // namespace tropnorm
