// Python bindings for the core operations. Rationals cross the boundary as
// fractions.Fraction (ints and "p/q" strings are accepted on the way in), and
// the bounded searches return None where the C++ layer returns nullopt.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tropnorm/json_io.hpp"
#include "tropnorm/proptest.hpp"

namespace py = pybind11;
using namespace tropnorm;

namespace {

Rational rational_in(py::handle h) {
  if (py::isinstance<py::int_>(h)) return Rational(h.cast<long long>());
  // Fraction and Decimal both stringify to something parse_rational accepts
  return parse_rational(py::str(h).cast<std::string>());
}

py::object rational_out(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(rational_string(r));
}

QVector qvector_in(const py::sequence& seq) {
  QVector v;
  v.reserve(seq.size());
  for (py::handle h : seq) v.push_back(rational_in(h));
  return v;
}

TropPoly poly_in(int dim, const py::sequence& terms) {
  std::vector<AffineMonomial> ms;
  for (py::handle t : terms) {
    auto pair = t.cast<py::sequence>();
    ms.push_back({pair[0].cast<IntVec>(), rational_in(pair[1])});
  }
  return TropPoly(dim, ms);
}

py::list terms_out(const std::map<IntVec, Rational>& terms) {
  py::list out;
  for (const auto& [k, c] : terms) out.append(py::make_tuple(py::tuple(py::cast(k)), rational_out(c)));
  return out;
}

std::string tri_str(Tri t) {
  return t == Tri::Yes ? "yes" : t == Tri::No ? "no" : "undetermined";
}

py::object json_out(const Json& j) {
  static py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact normalization of tropical polynomials on rational polytopes";

  py::class_<TropPoly>(m, "TropPoly")
      .def(py::init([](int dim, const py::sequence& terms) { return poly_in(dim, terms); }),
           py::arg("dim"), py::arg("terms") = py::list())
      .def_property_readonly("dim", &TropPoly::dim)
      .def_property_readonly("is_bottom", &TropPoly::is_bottom)
      .def("terms", [](const TropPoly& f) { return terms_out(f.terms()); })
      .def(py::self == py::self)
      .def("__repr__", [](const TropPoly& f) {
        return "TropPoly(dim=" + std::to_string(f.dim()) + ", terms=" +
               std::to_string(f.terms().size()) + ")";
      });

  py::class_<MonoidPair>(m, "MonoidPair")
      .def(py::init([](int dim, const py::sequence& rows) {
             std::vector<MonoidConstraint> cs;
             for (py::handle r : rows) {
               auto pair = r.cast<py::sequence>();
               cs.push_back({pair[0].cast<IntVec>(), rational_in(pair[1])});
             }
             return MonoidPair(dim, std::move(cs));
           }),
           py::arg("dim"), py::arg("constraints"))
      .def_property_readonly("dim", &MonoidPair::dim)
      .def("constraints", [](const MonoidPair& p) {
        py::list out;
        for (const auto& c : p.constraints())
          out.append(py::make_tuple(py::tuple(py::cast(c.F)), rational_out(c.lambda)));
        return out;
      });

  m.def("join", &join);
  m.def("plus", &plus);
  m.def("scale", &scale, py::arg("m"), py::arg("f"));
  m.def("eval", [](const TropPoly& f, const py::sequence& p) -> py::object {
    auto v = eval(f, qvector_in(p));
    return v ? rational_out(*v) : py::none();
  });

  py::class_<CanonicalForm>(m, "CanonicalForm")
      .def("terms", [](const CanonicalForm& cf) { return terms_out(cf.terms); })
      .def("poly", &CanonicalForm::poly)
      .def("same_terms", &CanonicalForm::same_terms);

  m.def("canonical_form", &canonical_form);
  m.def("pointwise_leq", [](const TropPoly& f, const TropPoly& g, const MonoidPair& p) {
    return pointwise_leq(f, g, p.polytope());
  });
  m.def("pointwise_eq", [](const TropPoly& f, const TropPoly& g, const MonoidPair& p) {
    return pointwise_eq(f, g, p.polytope());
  });
  m.def("saturate_coeff", [](const TropPoly& f, const IntVec& k, const MonoidPair& p) {
    return rational_out(saturate_coeff(f, k, p.polytope()));
  });
  m.def("essential_slopes", [](const TropPoly& f, const MonoidPair& p) {
    py::list out;
    for (const auto& k : essential_slopes(f, p.polytope())) out.append(py::tuple(py::cast(k)));
    return out;
  });

  m.def("syntactic_leq", [](const TropPoly& f, const TropPoly& g, const MonoidPair& p,
                            long long bound) { return tri_str(syntactic_leq(f, g, p, bound)); },
        py::arg("f"), py::arg("g"), py::arg("pair"), py::arg("bound") = 8);
  m.def("syntactic_eq", [](const TropPoly& f, const TropPoly& g, const MonoidPair& p,
                           long long bound) { return tri_str(syntactic_eq(f, g, p, bound)); },
        py::arg("f"), py::arg("g"), py::arg("pair"), py::arg("bound") = 8);

  m.def("monoid_member", [](const IntVec& d, py::handle mu, const MonoidPair& p, long long bound) {
          MembershipAnswer a = monoid_member(d, rational_in(mu), p, bound);
          py::dict out;
          out["status"] = tri_str(a.status);
          if (a.witness)
            out["witness"] = py::dict(py::arg("a") = a.witness->a,
                                      py::arg("c") = rational_out(a.witness->c));
          return out;
        },
        py::arg("d"), py::arg("mu"), py::arg("pair"), py::arg("bound") = 8);

  m.def("is_integrally_closed", [](const TropPoly& f, const MonoidPair& p, long long radius,
                                   long long bound) {
          ClosureAnswer a = is_integrally_closed_elt(f, p, radius, bound);
          py::dict out;
          out["status"] = tri_str(a.status);
          if (a.witness)
            out["witness"] = py::make_tuple(py::tuple(py::cast(a.witness->slope)),
                                            rational_out(a.witness->coeff));
          return out;
        },
        py::arg("f"), py::arg("pair"), py::arg("radius") = 2, py::arg("bound") = 8);

  m.def("integral_over", [](const TropPoly& x, const TropPoly& y, const MonoidPair& p,
                            long long n_max, long long bound) {
          IntegralOverResult r = integral_over(x, y, p, n_max, bound);
          py::dict out;
          out["n"] = r.witness ? py::cast(r.witness->n) : py::none();
          if (r.refuted_at) out["refuted_at"] = *r.refuted_at;
          return out;
        },
        py::arg("x"), py::arg("y"), py::arg("pair"), py::arg("n_max") = 4, py::arg("bound") = 8);

  m.def("cancels", &cancels);

  m.def("linearity_cells", [](const TropPoly& f, const MonoidPair& p) {
    py::list out;
    for (const auto& cell : linearity_cells(f, p)) {
      py::dict d;
      d["slope"] = py::tuple(py::cast(cell.slope));
      d["coeff"] = rational_out(cell.coeff);
      py::list vs;
      for (const auto& v : cell.vertices) {
        py::list pt;
        for (const auto& x : v) pt.append(rational_out(x));
        vs.append(pt);
      }
      d["vertices"] = vs;
      out.append(d);
    }
    return out;
  });

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init<int, std::vector<ExpVector>>(), py::arg("dim"), py::arg("gens"))
      .def_property_readonly("dim", &MonomialIdeal::dim)
      .def("gens", [](const MonomialIdeal& I) {
        py::list out;
        for (const auto& g : I.gens()) out.append(py::tuple(py::cast(g)));
        return out;
      })
      .def("contains", &MonomialIdeal::contains_monomial)
      .def(py::self == py::self)
      .def("__repr__", [](const MonomialIdeal& I) {
        return "MonomialIdeal(dim=" + std::to_string(I.dim()) + ", gens=" +
               std::to_string(I.gens().size()) + ")";
      });

  m.def("ideal_sum", &ideal_sum);
  m.def("ideal_product", &ideal_product);
  m.def("ideal_power", &ideal_power);
  m.def("integral_closure", &integral_closure);
  m.def("dependence_oracle", [](const ExpVector& v, const MonomialIdeal& I, long long m_max)
            -> py::object {
          auto r = dependence_oracle(v, I, m_max);
          return r ? py::cast(*r) : py::none();
        },
        py::arg("v"), py::arg("ideal"), py::arg("m_max") = 8);
  m.def("reduction_number", [](const MonomialIdeal& I, const MonomialIdeal& J, long long n_max)
            -> py::object {
          auto r = reduction_number(I, J, n_max);
          return r ? py::cast(*r) : py::none();
        },
        py::arg("I"), py::arg("J"), py::arg("n_max") = 10);

  m.def("saturate", [](int dim, const std::vector<IntVec>& gens, long long degree_bound) {
          SaturationResult r = saturate({dim, gens, degree_bound});
          py::dict out;
          out["saturated"] = r.saturated;
          out["degree_bound"] = r.degree_bound;
          py::list missing, generators;
          for (const auto& v : r.missing) missing.append(py::tuple(py::cast(v)));
          for (const auto& v : r.generators) generators.append(py::tuple(py::cast(v)));
          out["missing"] = missing;
          out["generators"] = generators;
          return out;
        },
        py::arg("dim"), py::arg("gens"), py::arg("degree_bound"));

  m.def("run_proptest", [](const std::string& suite, std::uint64_t seed, int cases) {
          return json_out(proptest_report_to_json(run_proptest(suite, seed, cases)));
        },
        py::arg("suite"), py::arg("seed") = 1, py::arg("cases") = 100);
  m.def("proptest_suites", &proptest_suites);
}
