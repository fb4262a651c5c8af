#include "mfields/error.hpp"
#include "mfields/matching_field.hpp"
#include "mfields/pluecker.hpp"
#include "mfields/tropmatroid.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

namespace py = pybind11;
using namespace mfields;

namespace {

py::object toPython(const Integer& x) {
  if (x.fits_slong_p()) return py::int_(x.get_si());
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object toPython(const Rational& q) {
  if (q.get_den() == 1) return toPython(q.get_num());
  return py::module_::import("fractions").attr("Fraction")(toPython(q.get_num()), toPython(q.get_den()));
}

py::list rows(const WeightMatrix& w) {
  py::list out;
  for (const IntVector& r : w.rowVectors()) {
    py::list row;
    for (const Integer& x : r) row.append(toPython(x));
    out.append(row);
  }
  return out;
}

WeightMatrix weightFrom(const std::vector<std::vector<long long>>& r) { return WeightMatrix::fromRows(r); }

py::list vertices(const polyhedra::PolytopeV& p) {
  std::vector<RatVector> vs = p.vertices();
  std::sort(vs.begin(), vs.end());
  py::list out;
  for (const RatVector& v : vs) {
    py::list row;
    for (const Rational& x : v) row.append(toPython(x));
    out.append(row);
  }
  return out;
}

std::vector<std::string> generators(const polyalg::Ideal& i, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (const polyalg::Poly& g : i.generators()) out.push_back(polyalg::toString(g, labels));
  return out;
}

std::vector<std::vector<Subset>> labelled(const tropmatroid::Matroid& m, const std::vector<std::vector<std::size_t>>& sets) {
  std::vector<std::vector<Subset>> out;
  for (const auto& s : sets) out.push_back(m.labelsOf(s));
  return out;
}

}  // namespace

PYBIND11_MODULE(mfields, m) {
  m.doc() = "Matching fields: coherence, ideals, toric degenerations, polytopes, matroids and tope fields";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<MatchingField>(m, "MatchingField")
      .def_static("diagonal", py::overload_cast<std::vector<int>, int>(&MatchingField::diagonal), py::arg("grades"),
                  py::arg("n"))
      .def_static("from_permutation", &MatchingField::fromPermutation, py::arg("k"), py::arg("n"), py::arg("sigma"))
      .def_static(
          "from_weight_matrix",
          [](const std::vector<std::vector<long long>>& w, std::optional<std::vector<int>> grades) {
            return grades ? MatchingField::fromWeightMatrix(*grades, weightFrom(w))
                          : MatchingField::fromWeightMatrix(weightFrom(w));
          },
          py::arg("weight"), py::arg("grades") = py::none())
      .def_static(
          "from_tuples",
          [](std::vector<int> grades, int n, const std::vector<std::vector<Tuple>>& tuples) {
            return MatchingField::fromTuples(std::move(grades), n, tuples);
          },
          py::arg("grades"), py::arg("n"), py::arg("tuples"))
      .def_property_readonly("n", &MatchingField::n)
      .def_property_readonly("grades", &MatchingField::grades)
      .def_property_readonly("tuples", &MatchingField::tuples)
      .def_property_readonly("weight",
                             [](const MatchingField& mf) -> py::object {
                               return mf.weight() ? py::object(rows(*mf.weight())) : py::none();
                             })
      .def("description", &MatchingField::description)
      .def("same_tuples", &MatchingField::sameTuples)
      .def("__repr__", &MatchingField::description);

  m.def("format_tuples", &formatTuples);
  m.def("is_coherent", &isCoherent);
  m.def("get_weight_matrix", [](const MatchingField& mf) { return rows(getWeightMatrix(mf)); });
  m.def("pluecker_weight", [](const MatchingField& mf) {
    py::list out;
    for (const Integer& x : plueckerWeight(mf)) out.append(toPython(x));
    return out;
  });
  m.def("pluecker_labels", &pluecker::plueckerLabels, py::arg("grades"), py::arg("n"));
  m.def(
      "pluecker_ideal",
      [](const std::vector<int>& grades, int n) {
        return generators(pluecker::plueckerIdeal(grades, n), pluecker::plueckerLabels(grades, n));
      },
      py::arg("grades"), py::arg("n"));
  m.def("matching_field_ideal", [](const MatchingField& mf) {
    return generators(pluecker::matchingFieldIdeal(mf), pluecker::plueckerLabels(mf.grades(), mf.n()));
  });
  m.def(
      "is_toric_degeneration",
      [](const MatchingField& mf, const std::string& method) {
        return pluecker::isToricDegeneration(mf, pluecker::parseToricMethod(method));
      },
      py::arg("mf"), py::arg("method") = "groebner");
  m.def("polytope_vertices", [](const MatchingField& mf) { return vertices(pluecker::matchingFieldPolytope(mf)); });
  m.def("polytope_volume",
        [](const MatchingField& mf) { return toPython(polyhedra::latticeNormalizedVolume(pluecker::matchingFieldPolytope(mf))); });
  m.def(
      "newton_okounkov_body",
      [](const MatchingField& mf, unsigned degreeCap) {
        pluecker::Options options;
        options.degreeCap = degreeCap;
        const pluecker::NewtonOkounkovBody body = pluecker::newtonOkounkovBody(mf, options);
        py::dict out;
        out["vertices"] = vertices(body.polytope);
        out["volume"] = toPython(polyhedra::latticeNormalizedVolume(body.polytope));
        out["generators"] = body.sourceDegrees.size();
        return out;
      },
      py::arg("mf"), py::arg("degree_cap") = pluecker::kDefaultDegreeCap);

  m.def("matroid_subdivision", &tropmatroid::matroidSubdivision);
  m.def("is_matroidal", &tropmatroid::isMatroidal);
  m.def("algebraic_matroid", [](const MatchingField& mf) {
    const tropmatroid::Matroid matroid = tropmatroid::algebraicMatroid(mf);
    py::dict out;
    out["size"] = matroid.size();
    out["rank"] = matroid.rank();
    return out;
  });
  m.def("algebraic_matroid_bases", [](const MatchingField& mf) {
    const tropmatroid::Matroid matroid = tropmatroid::algebraicMatroid(mf);
    return labelled(matroid, matroid.bases());
  });
  m.def("algebraic_matroid_circuits", [](const MatchingField& mf) {
    const tropmatroid::Matroid matroid = tropmatroid::algebraicMatroid(mf);
    return labelled(matroid, matroid.circuits());
  });

  py::class_<tropmatroid::TopeField>(m, "TopeField")
      .def(py::init<int, std::vector<int>, std::vector<Tuple>>(), py::arg("n"), py::arg("type"), py::arg("tuples"))
      .def_property_readonly("n", &tropmatroid::TopeField::n)
      .def_property_readonly("type", &tropmatroid::TopeField::type)
      .def_property_readonly("tuples", &tropmatroid::TopeField::tuples);
  m.def("tope_field", &tropmatroid::topeField);
  m.def("is_linkage", &tropmatroid::isLinkage);
  m.def("amalgamation", &tropmatroid::amalgamation, py::arg("i"), py::arg("tope_field"));
}
