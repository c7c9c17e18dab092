// tropnorm: batch front door for the normalization library.
//
// Usage: tropnorm <command> <input.json> [flags]
//        tropnorm proptest <suite> [--seed N] [--cases N]
//
// Input files are ProblemFiles {"kind": <command>, "payload": {...},
// "parameters": {...}}; flags override file parameters. Results go to stdout
// as a ResultEnvelope. Exit 0 = ok, 2 = undetermined, 1 = error. The json
// output mode is byte-deterministic for a fixed (input, seed, flags); timing
// appears only in pretty mode.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tropnorm/json_io.hpp"
#include "tropnorm/proptest.hpp"

namespace {

using namespace tropnorm;

struct Options {
  std::string command;
  std::string input_path;
  std::string suite;
  std::string mode = "pointwise";
  std::string output = "json";
  bool cells = false;
  long long radius = 2;
  long long bound = 16;
  long long n_max = 4;
  long long m_max = 8;
  long long cases = 100;
  std::uint64_t seed = 1;
  // set when the flag was given explicitly, so file parameters know their place
  bool radius_set = false, bound_set = false, n_max_set = false, m_max_set = false,
       cases_set = false, seed_set = false;
};

struct Envelope {
  std::string status = "ok";  // ok | undetermined | error
  Json result;
  std::string error;
};

std::string tri_name(Tri t) {
  return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "undetermined";
}

long long param_ll(const Json& params, const char* key, long long flag_value, bool flag_set) {
  if (!flag_set && params.is_object() && params.contains(key) && params[key].is_number_integer())
    return params[key].get<long long>();
  return flag_value;
}

Envelope run_normalize(const Json& payload, const Options& opt) {
  MonoidPair pair = pair_from_json(payload.at("pair"), "/payload/pair");
  TropPoly f = poly_from_json(payload.at("f"), "/payload/f", pair.dim());
  CanonicalForm cf = canonical_form(f, pair);
  Envelope env;
  env.result["canonical"] = canonical_form_to_json(cf);
  if (opt.cells) env.result["cells"] = cells_to_json(linearity_cells(f, pair));
  return env;
}

Envelope run_eval(const Json& payload) {
  QVector p = qvector_from_json(payload.at("point"), "/payload/point");
  TropPoly f = poly_from_json(payload.at("f"), "/payload/f", static_cast<int>(p.size()));
  auto v = eval(f, p);
  Envelope env;
  env.result["value"] = v ? rational_to_json(*v) : Json("-inf");
  return env;
}

Envelope run_order(const Json& payload, const Options& opt, bool equality) {
  MonoidPair pair = pair_from_json(payload.at("pair"), "/payload/pair");
  TropPoly f = poly_from_json(payload.at("f"), "/payload/f", pair.dim());
  TropPoly g = poly_from_json(payload.at("g"), "/payload/g", pair.dim());
  Envelope env;
  env.result["mode"] = opt.mode;
  if (opt.mode == "pointwise") {
    bool ans = equality ? pointwise_eq(f, g, pair.polytope())
                        : pointwise_leq(f, g, pair.polytope());
    env.result["answer"] = ans;
    return env;
  }
  if (equality) {
    SyntacticComparison forward = syntactic_leq_detail(f, g, pair, opt.bound);
    SyntacticComparison backward = syntactic_leq_detail(g, f, pair, opt.bound);
    Tri verdict = Tri::Undetermined;
    if (forward.verdict == Tri::No || backward.verdict == Tri::No)
      verdict = Tri::No;
    else if (forward.verdict == Tri::Yes && backward.verdict == Tri::Yes)
      verdict = Tri::Yes;
    env.result["answer"] = tri_name(verdict);
    env.result["forward"] = syntactic_comparison_to_json(forward);
    env.result["backward"] = syntactic_comparison_to_json(backward);
    if (verdict == Tri::Undetermined) {
      env.status = "undetermined";
      env.result["exhausted_bound"] = opt.bound;
    }
  } else {
    SyntacticComparison cmp = syntactic_leq_detail(f, g, pair, opt.bound);
    env.result["answer"] = tri_name(cmp.verdict);
    env.result["detail"] = syntactic_comparison_to_json(cmp);
    if (cmp.verdict == Tri::Undetermined) {
      env.status = "undetermined";
      env.result["exhausted_bound"] = opt.bound;
    }
  }
  return env;
}

Envelope run_closure(const Json& payload, const Options& opt) {
  Envelope env;
  if (payload.contains("gens")) {
    MonomialIdeal I = ideal_from_json(payload, "/payload");
    MonomialIdeal closed = integral_closure(I);
    Json added = Json::array();
    for (const auto& g : closed.gens())
      if (!I.contains_monomial(g)) added.push_back(intvec_to_json(g));
    env.result["closure"] = ideal_to_json(closed);
    env.result["added"] = std::move(added);
    return env;
  }
  MonoidPair pair = pair_from_json(payload.at("pair"), "/payload/pair");
  TropPoly f = poly_from_json(payload.at("f"), "/payload/f", pair.dim());
  ClosureAnswer a = is_integrally_closed_elt(f, pair, opt.radius, opt.bound);
  env.result["answer"] = tri_name(a.status);
  env.result["radius"] = opt.radius;
  if (a.witness) {
    env.result["witness"] = {{"slope", intvec_to_json(a.witness->slope)},
                             {"coeff", rational_to_json(a.witness->coeff)}};
  }
  if (a.status == Tri::Undetermined) {
    env.status = "undetermined";
    env.result["exhausted_bound"] = opt.bound;
  }
  return env;
}

Envelope run_integral_over(const Json& payload, const Options& opt) {
  Envelope env;
  if (payload.contains("ideal")) {
    MonomialIdeal I = ideal_from_json(payload.at("ideal"), "/payload/ideal");
    IntVec v = intvec_from_json(payload.at("v"), "/payload/v");
    auto m = dependence_oracle(v, I, opt.m_max);
    if (m) {
      env.result["integral"] = true;
      env.result["m"] = *m;
    } else {
      env.status = "undetermined";
      env.result["integral"] = false;
      env.result["exhausted_bound"] = opt.m_max;
    }
    return env;
  }
  MonoidPair pair = pair_from_json(payload.at("pair"), "/payload/pair");
  TropPoly x = poly_from_json(payload.at("x"), "/payload/x", pair.dim());
  TropPoly y = poly_from_json(payload.at("y"), "/payload/y", pair.dim());
  IntegralOverResult r = integral_over(x, y, pair, opt.n_max, opt.bound);
  if (r.witness) {
    env.result["witness"] = {{"n", r.witness->n},
                             {"certificate", syntactic_comparison_to_json(r.witness->certificate)}};
  } else {
    env.status = "undetermined";
    env.result["exhausted_bound"] = opt.n_max;
    if (r.refuted_at) {
      env.result["refuted_at"] = *r.refuted_at;
      env.result["refutation"] = syntactic_comparison_to_json(*r.refutation);
    }
  }
  return env;
}

Envelope run_reduction(const Json& payload, const Options& opt) {
  MonomialIdeal I = ideal_from_json(payload.at("I"), "/payload/I");
  MonomialIdeal J = ideal_from_json(payload.at("J"), "/payload/J");
  long long n_max = opt.n_max_set ? opt.n_max : 10;
  Envelope env;
  auto n = reduction_number(I, J, n_max);
  if (n) {
    env.result["n"] = *n;
  } else {
    env.status = "undetermined";
    env.result["exhausted_bound"] = n_max;
  }
  return env;
}

Envelope run_saturate(const Json& payload, const Options& opt) {
  AffineMonoidGens m = monoid_gens_from_json(payload, "/payload");
  if (opt.bound_set) m.degree_bound = opt.bound;
  SaturationResult r = saturate(m);
  Envelope env;
  env.result["saturated"] = r.saturated;
  env.result["degree_bound"] = r.degree_bound;
  Json missing = Json::array();
  for (const auto& v : r.missing) missing.push_back(intvec_to_json(v));
  env.result["missing"] = std::move(missing);
  Json gens = Json::array();
  for (const auto& v : r.generators) gens.push_back(intvec_to_json(v));
  env.result["generators"] = std::move(gens);
  return env;
}

Envelope run_proptest_cmd(const Options& opt) {
  PropReport rep = run_proptest(opt.suite, opt.seed, static_cast<int>(opt.cases));
  Envelope env;
  env.result = proptest_report_to_json(rep);
  if (!rep.ok()) {
    env.status = "error";
    env.error = "property failures: " + std::to_string(rep.failures.size());
  }
  return env;
}

Envelope dispatch(const Options& opt) {
  if (opt.command == "proptest") return run_proptest_cmd(opt);

  std::ifstream in(opt.input_path);
  if (!in) {
    Envelope env;
    env.status = "error";
    env.error = "cannot open input file: " + opt.input_path;
    return env;
  }
  Json file;
  try {
    file = Json::parse(in);  // parse_error carries the byte position
  } catch (const Json::parse_error& e) {
    Envelope env;
    env.status = "error";
    env.error = std::string("parse error in ") + opt.input_path + ": " + e.what();
    return env;
  }

  if (!file.is_object() || !file.contains("kind") || !file["kind"].is_string()) {
    Envelope env;
    env.status = "error";
    env.error = "at /kind: problem file must declare its kind";
    return env;
  }
  if (file["kind"].get<std::string>() != opt.command) {
    Envelope env;
    env.status = "error";
    env.error = "at /kind: file is a \"" + file["kind"].get<std::string>() +
                "\" problem, but the command is \"" + opt.command + "\"";
    return env;
  }
  if (!file.contains("payload")) {
    Envelope env;
    env.status = "error";
    env.error = "at /payload: missing";
    return env;
  }
  const Json& payload = file["payload"];

  // file-level parameters fill in for flags the user did not pass
  Options opt2 = opt;
  if (file.contains("parameters")) {
    const Json& ps = file["parameters"];
    opt2.radius = param_ll(ps, "radius", opt.radius, opt.radius_set);
    opt2.bound = param_ll(ps, "bound", opt.bound, opt.bound_set);
    opt2.bound_set = opt.bound_set || (ps.is_object() && ps.contains("bound"));
    opt2.n_max = param_ll(ps, "n_max", opt.n_max, opt.n_max_set);
    opt2.n_max_set = opt.n_max_set || (ps.is_object() && ps.contains("n_max"));
    opt2.m_max = param_ll(ps, "m_max", opt.m_max, opt.m_max_set);
    opt2.seed = static_cast<std::uint64_t>(
        param_ll(ps, "seed", static_cast<long long>(opt.seed), opt.seed_set));
  }

  if (opt.command == "normalize") return run_normalize(payload, opt2);
  if (opt.command == "eval") return run_eval(payload);
  if (opt.command == "leq") return run_order(payload, opt2, false);
  if (opt.command == "eq") return run_order(payload, opt2, true);
  if (opt.command == "closure") return run_closure(payload, opt2);
  if (opt.command == "integral-over") return run_integral_over(payload, opt2);
  if (opt.command == "reduction") return run_reduction(payload, opt2);
  if (opt.command == "saturate") return run_saturate(payload, opt2);
  Envelope env;
  env.status = "error";
  env.error = "unknown command: " + opt.command;
  return env;
}

void print_pretty(const Envelope& env, const Options& opt, long long ms) {
  std::cout << "command: " << opt.command << "\n";
  std::cout << "status: " << env.status << "\n";
  if (!env.error.empty()) std::cout << "error: " << env.error << "\n";
  if (!env.result.is_null()) std::cout << "result: " << env.result.dump(2) << "\n";
  std::cout << "timing: " << ms << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact normalization of tropical polynomials on rational polytopes"};
  app.require_subcommand(1);

  Options opt;
  std::vector<CLI::App*> subs;
  for (const char* name : {"normalize", "eval", "leq", "eq", "closure", "integral-over",
                           "reduction", "saturate"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("input", opt.input_path, "problem file (JSON)")->required();
    subs.push_back(sub);
  }
  CLI::App* prop = app.add_subcommand("proptest", "run a randomized property suite");
  prop->add_option("suite", opt.suite, "one of: semiring-laws, normalization, lemma-3.1, "
                                       "cancellativity, monomial-oracle, lp-oracle")
      ->required();
  subs.push_back(prop);

  for (CLI::App* sub : subs) {
    sub->add_option("--mode", opt.mode, "syntactic|pointwise (leq, eq)")
        ->check(CLI::IsMember({"syntactic", "pointwise"}));
    sub->add_flag("--cells", opt.cells, "emit linearity cells (normalize)");
    sub->add_option("--radius", opt.radius)->each([&](const std::string&) { opt.radius_set = true; });
    sub->add_option("--bound", opt.bound)->each([&](const std::string&) { opt.bound_set = true; });
    sub->add_option("--n-max", opt.n_max)->each([&](const std::string&) { opt.n_max_set = true; });
    sub->add_option("--m-max", opt.m_max)->each([&](const std::string&) { opt.m_max_set = true; });
    sub->add_option("--seed", opt.seed)->each([&](const std::string&) { opt.seed_set = true; });
    sub->add_option("--cases", opt.cases)->each([&](const std::string&) { opt.cases_set = true; });
    sub->add_option("--output", opt.output, "json|pretty")
        ->check(CLI::IsMember({"json", "pretty"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  opt.command = app.get_subcommands().front()->get_name();

  auto t0 = std::chrono::steady_clock::now();
  Envelope env;
  try {
    env = dispatch(opt);
  } catch (const SchemaError& e) {
    env.status = "error";
    env.error = e.what();
  } catch (const std::exception& e) {
    env.status = "error";
    env.error = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  t0)
                .count();

  if (opt.output == "pretty") {
    print_pretty(env, opt, ms);
  } else {
    Json out;
    out["status"] = env.status;
    if (!env.error.empty()) out["error"] = env.error;
    if (!env.result.is_null()) out["result"] = env.result;
    std::cout << out.dump() << "\n";
  }

  if (env.status == "ok") return 0;
  if (env.status == "undetermined") return 2;
  return 1;
}
