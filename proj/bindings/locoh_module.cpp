// Python bindings for the main operations. Values cross the boundary as
// plain python types (ints, tuples, dicts); field choices are strings as on
// the CLI ("rational", "gf 32003").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "locoh/cohomology.hpp"
#include "locoh/ideal_io.hpp"
#include "locoh/localcoh.hpp"
#include "locoh/simplicial.hpp"
#include "locoh/structure.hpp"
#include "locoh/taylor.hpp"
#include "locoh/verify.hpp"

namespace py = pybind11;
using namespace locoh;

namespace {

FieldSpec field_of(const std::string& name) { return FieldSpec::parse(name); }

MultiDegree degree_of(const std::vector<int>& coords, int n) {
  if (static_cast<int>(coords.size()) != n)
    throw std::invalid_argument("degree length does not match the ideal");
  return MultiDegree(coords);
}

VarSet varset_of(const std::vector<int>& members, int n) {
  VarSet s(n);
  for (int j : members) s = s.with(j);
  return s;
}

py::tuple varset_tuple(const VarSet& s) {
  py::tuple t(s.size());
  int k = 0;
  for (int j : s.members()) t[k++] = j;
  return t;
}

py::list facet_list(const SimplicialComplex& complex) {
  py::list out;
  for (const VarSet& f : complex.facets()) out.append(varset_tuple(f));
  return out;
}

py::dict matrix_dict(const ExactMatrix& m) {
  py::dict d;
  d["rows"] = m.rows;
  d["cols"] = m.cols;
  py::list entries;
  for (std::size_t r = 0; r < m.rows; ++r) {
    py::list row;
    for (std::size_t c = 0; c < m.cols; ++c) row.append(m.at(r, c));
    entries.append(row);
  }
  d["entries"] = entries;
  d["rank"] = m.rank;
  d["invertible"] = m.invertible();
  return d;
}

}  // namespace

PYBIND11_MODULE(_locoh, m) {
  m.doc() = "exact multigraded local cohomology and Ext of monomial ideals";

  py::register_exception<ParseError>(m, "IdealParseError", PyExc_ValueError);

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def(py::init([](int n, const std::vector<std::vector<int>>& gens) {
             std::vector<Monomial> ms;
             ms.reserve(gens.size());
             for (const auto& e : gens) ms.emplace_back(e);
             return MonomialIdeal(n, std::move(ms));
           }),
           py::arg("n"), py::arg("generators"),
           "Build from exponent vectors; the generating set is minimalized.")
      .def_property_readonly("n", &MonomialIdeal::n)
      .def_property_readonly("squarefree", &MonomialIdeal::is_squarefree)
      .def_property_readonly("generators",
                             [](const MonomialIdeal& b) {
                               py::list out;
                               for (const Monomial& g : b.generators())
                                 out.append(g.exponents());
                               return out;
                             })
      .def("contains",
           [](const MonomialIdeal& b, const std::vector<int>& exps) {
             return b.contains(Monomial(exps));
           })
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
      .def("__repr__", [](const MonomialIdeal& b) {
        std::string out = "MonomialIdeal(";
        bool first = true;
        for (const Monomial& g : b.generators()) {
          if (!first) out += ", ";
          first = false;
          out += render_monomial(g, default_var_names(b.n()));
        }
        return out + ")";
      });

  m.def(
      "parse_ideal",
      [](const std::string& text) {
        const IdealDocument doc = parse_ideal_document(text);
        py::dict out;
        out["ideal"] = doc.ideal;
        out["vars"] = doc.vars;
        out["field"] = doc.field.name();
        return out;
      },
      py::arg("text"), "Parse an ideal document (vars header plus generators).");

  m.def("alexander_dual", &alexander_dual, py::arg("ideal"));
  m.def(
      "frobenius_power",
      [](const MonomialIdeal& b, int d) { return frobenius_power(b, d); },
      py::arg("ideal"), py::arg("d"));

  m.def(
      "sr_facets",
      [](const MonomialIdeal& b) { return facet_list(stanley_reisner_complex(b)); },
      py::arg("ideal"), "Facets of the complex associated to the ideal.");

  m.def(
      "lc_dim",
      [](const MonomialIdeal& b, int i, const std::vector<int>& alpha,
         const std::string& field) {
        return lc_piece(b, i, degree_of(alpha, b.n()), field_of(field)).dim;
      },
      py::arg("ideal"), py::arg("i"), py::arg("alpha"), py::arg("field") = "rational");

  m.def(
      "ext_dim",
      [](const MonomialIdeal& b, int i, const std::vector<int>& alpha,
         const std::string& field, bool general) {
        const MultiDegree deg = degree_of(alpha, b.n());
        const FieldSpec f = field_of(field);
        if (general || !b.is_squarefree()) return ext_piece_general(b, i, deg, f).dim;
        return ext_piece(b, i, deg, f).dim;
      },
      py::arg("ideal"), py::arg("i"), py::arg("alpha"), py::arg("field") = "rational",
      py::arg("general") = false);

  m.def(
      "hochster_betti",
      [](const MonomialIdeal& b, int i, const std::vector<int>& support,
         const std::string& field) {
        return hochster_betti(b, i, varset_of(support, b.n()), field_of(field));
      },
      py::arg("ideal"), py::arg("i"), py::arg("support"), py::arg("field") = "rational");

  m.def(
      "betti_table",
      [](const MonomialIdeal& b, const std::string& field) {
        py::dict out;
        for (const auto& [key, mult] : betti_table(b, field_of(field)).entries)
          out[py::make_tuple(key.first, varset_tuple(VarSet(b.n(), key.second)))] = mult;
        return out;
      },
      py::arg("ideal"), py::arg("field") = "rational");

  m.def(
      "multiplication_map",
      [](const MonomialIdeal& b, int i, const std::vector<int>& alpha, int var,
         const std::string& field) {
        return matrix_dict(
            multiplication_map(b, i, degree_of(alpha, b.n()), var, field_of(field)));
      },
      py::arg("ideal"), py::arg("i"), py::arg("alpha"), py::arg("var"),
      py::arg("field") = "rational");

  m.def(
      "filtration",
      [](const MonomialIdeal& b, int i, const std::string& field) {
        const FiltrationReport report = filtration_quotients(b, i, field_of(field));
        py::list layers;
        for (const auto& layer : report.layers) {
          py::list entries;
          for (const auto& entry : layer)
            entries.append(py::make_tuple(varset_tuple(entry.alpha), entry.multiplicity));
          layers.append(entries);
        }
        return layers;
      },
      py::arg("ideal"), py::arg("i"), py::arg("field") = "rational");

  m.def(
      "associated_primes",
      [](const MonomialIdeal& b, int i, bool minimal, const std::string& field) {
        const PrimeIdealSet primes = minimal
                                         ? minimal_associated_primes(b, i, field_of(field))
                                         : associated_primes(b, i, field_of(field));
        py::list out;
        for (const VarSet& p : primes.primes) out.append(varset_tuple(p));
        return out;
      },
      py::arg("ideal"), py::arg("i"), py::arg("minimal") = false,
      py::arg("field") = "rational");

  m.def(
      "hilbert_closed_form",
      [](const MonomialIdeal& b, int i, const std::string& field) {
        py::list out;
        for (const HilbertTerm& t : hilbert_series_closed_form(b, i, field_of(field)))
          out.append(py::make_tuple(varset_tuple(t.alpha), varset_tuple(t.free_vars),
                                    t.multiplicity));
        return out;
      },
      py::arg("ideal"), py::arg("i"), py::arg("field") = "rational");

  m.def(
      "hilbert_box",
      [](const MonomialIdeal& b, int i, const std::vector<int>& lo,
         const std::vector<int>& hi, const std::string& module, const std::string& field) {
        const GradedModule kind =
            module == "ext" ? GradedModule::Ext : GradedModule::LocalCohomology;
        py::list out;
        for (const auto& [alpha, dim] :
             hilbert_function_box(b, i, degree_of(lo, b.n()), degree_of(hi, b.n()),
                                  field_of(field), kind))
          out.append(py::make_tuple(alpha.coords(), dim));
        return out;
      },
      py::arg("ideal"), py::arg("i"), py::arg("lo"), py::arg("hi"),
      py::arg("module") = "lc", py::arg("field") = "rational");

  m.def(
      "ext_via_taylor",
      [](const MonomialIdeal& b, int d, int i, const std::vector<int>& alpha,
         const std::string& field) {
        return ext_via_taylor(b, d, i, degree_of(alpha, b.n()), field_of(field));
      },
      py::arg("ideal"), py::arg("d"), py::arg("i"), py::arg("alpha"),
      py::arg("field") = "rational");

  m.def(
      "tor_via_taylor",
      [](const MonomialIdeal& b, int i, const std::vector<int>& alpha,
         const std::string& field) {
        return tor_via_taylor(b, i, degree_of(alpha, b.n()), field_of(field));
      },
      py::arg("ideal"), py::arg("i"), py::arg("alpha"), py::arg("field") = "rational");

  m.def(
      "verify",
      [](const MonomialIdeal& b, int dmax, const std::string& field) {
        VerifyOptions options;
        options.field = field_of(field);
        options.d_max = dmax;
        const VerifyReport report = verify_ideal(b, options);
        py::dict out;
        out["ok"] = report.ok();
        py::list checks;
        for (const VerifyCheck& check : report.checks) {
          py::dict c;
          c["name"] = check.name;
          c["cases"] = check.cases;
          c["mismatches"] = check.mismatches;
          checks.append(c);
        }
        out["checks"] = checks;
        return out;
      },
      py::arg("ideal"), py::arg("dmax") = 2, py::arg("field") = "rational");
}
