#include "tropnorm/json_io.hpp"

namespace tropnorm {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SchemaError("at " + where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing member \"") + key + "\"");
  return *it;
}

long long integer_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

}  // namespace

Json rational_to_json(const Rational& r) { return rational_string(r); }

Rational rational_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Json intvec_to_json(const IntVec& v) { return Json(v); }

IntVec intvec_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an integer array");
  IntVec out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(integer_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json qvector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_string(x));
  return out;
}

QVector qvector_from_json(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of rational strings");
  QVector out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rational_from_json(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json poly_to_json(const TropPoly& f) {
  Json terms = Json::array();
  for (const auto& [slope, coeff] : f.terms())
    terms.push_back({{"slope", intvec_to_json(slope)}, {"coeff", rational_string(coeff)}});
  // "dim" keeps the empty polynomial parseable
  return {{"dim", f.dim()}, {"terms", std::move(terms)}};
}

TropPoly poly_from_json(const Json& j, const std::string& where, int expected_dim) {
  const Json& terms = member(j, "terms", where);
  if (!terms.is_array()) fail(where + "/terms", "expected an array");
  int dim = expected_dim;
  if (dim < 0 && j.contains("dim")) dim = static_cast<int>(integer_from_json(j["dim"], where + "/dim"));
  std::vector<AffineMonomial> ms;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    std::string tw = where + "/terms/" + std::to_string(i);
    IntVec slope = intvec_from_json(member(terms[i], "slope", tw), tw + "/slope");
    Rational coeff = rational_from_json(member(terms[i], "coeff", tw), tw + "/coeff");
    if (dim < 0) dim = static_cast<int>(slope.size());
    if (static_cast<int>(slope.size()) != dim)
      fail(tw + "/slope", "expected dimension " + std::to_string(dim));
    ms.push_back({std::move(slope), std::move(coeff)});
  }
  if (dim < 0) fail(where, "cannot infer dimension of an empty polynomial; add a \"dim\" member");
  return TropPoly(dim, std::move(ms));
}

namespace {

Json constraints_to_json(int dim, const std::vector<std::pair<IntVec, Rational>>& rows) {
  Json cs = Json::array();
  for (const auto& [F, lam] : rows)
    cs.push_back({{"F", intvec_to_json(F)}, {"lambda", rational_string(lam)}});
  return {{"dim", dim}, {"constraints", std::move(cs)}};
}

std::pair<int, std::vector<std::pair<IntVec, Rational>>> constraints_from_json(
    const Json& j, const std::string& where) {
  int dim = static_cast<int>(integer_from_json(member(j, "dim", where), where + "/dim"));
  const Json& cs = member(j, "constraints", where);
  if (!cs.is_array()) fail(where + "/constraints", "expected an array");
  std::vector<std::pair<IntVec, Rational>> rows;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    std::string cw = where + "/constraints/" + std::to_string(i);
    IntVec F = intvec_from_json(member(cs[i], "F", cw), cw + "/F");
    if (static_cast<int>(F.size()) != dim) fail(cw + "/F", "expected dimension " + std::to_string(dim));
    rows.emplace_back(std::move(F), rational_from_json(member(cs[i], "lambda", cw), cw + "/lambda"));
  }
  return {dim, std::move(rows)};
}

}  // namespace

Json pair_to_json(const MonoidPair& pair) {
  std::vector<std::pair<IntVec, Rational>> rows;
  for (const auto& c : pair.constraints()) rows.emplace_back(c.F, c.lambda);
  return constraints_to_json(pair.dim(), rows);
}

MonoidPair pair_from_json(const Json& j, const std::string& where) {
  auto [dim, rows] = constraints_from_json(j, where);
  std::vector<MonoidConstraint> cs;
  for (auto& [F, lam] : rows) cs.push_back({std::move(F), std::move(lam)});
  try {
    return MonoidPair(dim, std::move(cs));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Json polytope_to_json(const HPolytope& P) {
  std::vector<std::pair<IntVec, Rational>> rows;
  for (const auto& h : P.halfspaces()) rows.emplace_back(h.normal, h.bound);
  return constraints_to_json(P.dim(), rows);
}

HPolytope polytope_from_json(const Json& j, const std::string& where) {
  auto [dim, rows] = constraints_from_json(j, where);
  std::vector<HalfSpace> hs;
  for (auto& [F, lam] : rows) hs.emplace_back(std::move(F), std::move(lam));
  try {
    return HPolytope(dim, std::move(hs));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Json ideal_to_json(const MonomialIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.gens()) gens.push_back(intvec_to_json(g));
  return {{"dim", I.dim()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const Json& j, const std::string& where) {
  int dim = static_cast<int>(integer_from_json(member(j, "dim", where), where + "/dim"));
  const Json& gens = member(j, "gens", where);
  if (!gens.is_array()) fail(where + "/gens", "expected an array");
  std::vector<ExpVector> gs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    gs.push_back(intvec_from_json(gens[i], where + "/gens/" + std::to_string(i)));
  try {
    return MonomialIdeal(dim, std::move(gs));
  } catch (const std::exception& e) {
    fail(where, e.what());
  }
}

Json monoid_gens_to_json(const AffineMonoidGens& m) {
  Json gens = Json::array();
  for (const auto& g : m.gens) gens.push_back(intvec_to_json(g));
  return {{"dim", m.dim}, {"gens", std::move(gens)}, {"degree_bound", m.degree_bound}};
}

AffineMonoidGens monoid_gens_from_json(const Json& j, const std::string& where) {
  AffineMonoidGens m;
  m.dim = static_cast<int>(integer_from_json(member(j, "dim", where), where + "/dim"));
  const Json& gens = member(j, "gens", where);
  if (!gens.is_array()) fail(where + "/gens", "expected an array");
  for (std::size_t i = 0; i < gens.size(); ++i)
    m.gens.push_back(intvec_from_json(gens[i], where + "/gens/" + std::to_string(i)));
  m.degree_bound = integer_from_json(member(j, "degree_bound", where), where + "/degree_bound");
  return m;
}

Json monoid_witness_to_json(const MonoidWitness& w) {
  return {{"a", Json(w.a)}, {"c", rational_string(w.c)}};
}

Json syntactic_comparison_to_json(const SyntacticComparison& c) {
  Json terms = Json::array();
  for (const auto& t : c.terms) {
    Json rec = {{"slope", intvec_to_json(t.lhs.slope)},
                {"coeff", rational_string(t.lhs.coeff)},
                {"status", t.answer.status == Tri::Yes         ? "yes"
                           : t.answer.status == Tri::No        ? "no"
                                                               : "undetermined"}};
    if (t.matched) {
      rec["against"] = {{"slope", intvec_to_json(t.matched->slope)},
                        {"coeff", rational_string(t.matched->coeff)}};
    }
    if (t.answer.witness) rec["witness"] = monoid_witness_to_json(*t.answer.witness);
    if (t.answer.farkas) rec["farkas"] = qvector_to_json(*t.answer.farkas);
    terms.push_back(std::move(rec));
  }
  return {{"verdict", c.verdict == Tri::Yes         ? "yes"
                      : c.verdict == Tri::No        ? "no"
                                                    : "undetermined"},
          {"terms", std::move(terms)}};
}

Json canonical_form_to_json(const CanonicalForm& cf) { return poly_to_json(cf.poly()); }

Json cells_to_json(const std::vector<LinearityCell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) {
    Json region = Json::array();
    for (const auto& h : c.region)
      region.push_back({{"F", intvec_to_json(h.normal)}, {"lambda", rational_string(h.bound)}});
    Json rec = {{"slope", intvec_to_json(c.slope)},
                {"coeff", rational_string(c.coeff)},
                {"region", std::move(region)}};
    if (!c.vertices.empty()) {
      Json vs = Json::array();
      for (const auto& v : c.vertices) vs.push_back(qvector_to_json(v));
      rec["vertices"] = std::move(vs);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace tropnorm
