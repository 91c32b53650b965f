#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "macx/cell_oracle.hpp"
#include "macx/compress.hpp"
#include "macx/freeness.hpp"
#include "macx/hochster.hpp"
#include "macx/io.hpp"
#include "macx/poincare.hpp"

namespace py = pybind11;
using namespace macx;

namespace {

using FaceList = std::vector<std::vector<int>>;

SimplicialComplex make_complex(int m, const FaceList& maximal_faces) {
  std::vector<Subset> gens;
  gens.reserve(maximal_faces.size());
  for (const auto& face : maximal_faces) gens.push_back(Subset::of(m, face));
  return SimplicialComplex::from_maximal_faces(m, gens);
}

FaceList faces_out(const std::vector<Subset>& faces) {
  FaceList out;
  out.reserve(faces.size());
  for (const Subset& a : faces) out.push_back(a.elements());
  return out;
}

py::dict poly_out(const PoincarePolynomial& p) {
  py::dict coeffs;
  for (const auto& [deg, dim] : p.coefficients()) coeffs[py::int_(deg)] = dim;
  py::dict out;
  out["coefficients"] = coeffs;
  out["total"] = p.total();
  return out;
}

SubgroupSpec make_subgroup(const std::string& kind, int m,
                           const std::vector<std::vector<long>>& generators) {
  if (kind == "real") {
    std::vector<std::vector<int>> rows;
    for (const auto& row : generators) rows.emplace_back(row.begin(), row.end());
    return SubgroupSpec::real(m, rows);
  }
  if (kind == "torus") return SubgroupSpec::torus(m, generators);
  throw InputError("kind must be 'real' or 'torus'");
}

}  // namespace

PYBIND11_MODULE(_macx, mod) {
  mod.doc() = "Exact Moebius transforms, Stanley-Reisner Betti numbers and "
              "moment-angle cohomology";

  py::register_exception<SizeError>(mod, "SizeError", PyExc_ValueError);
  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);
  py::register_exception<NicenessError>(mod, "NicenessError", PyExc_ValueError);

  py::class_<SimplicialComplex>(mod, "SimplicialComplex")
      .def(py::init(&make_complex), py::arg("m"), py::arg("maximal_faces"))
      .def_property_readonly("m", &SimplicialComplex::m)
      .def_property_readonly("dim", &SimplicialComplex::dim)
      .def_property_readonly("face_count", &SimplicialComplex::face_count)
      .def("faces", [](const SimplicialComplex& K) { return faces_out(K.faces()); })
      .def("maximal_faces",
           [](const SimplicialComplex& K) { return faces_out(K.maximal_faces()); })
      .def("restriction",
           [](const SimplicialComplex& K, const std::vector<int>& a) {
             return K.restriction(Subset::of(K.m(), a));
           })
      .def("__eq__", [](const SimplicialComplex& a,
                        const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& K) {
        return "SimplicialComplex(m=" + std::to_string(K.m()) + ", dim=" +
               std::to_string(K.dim()) + ", faces=" +
               std::to_string(K.face_count()) + ")";
      });

  mod.def(
      "mobius_support",
      [](const SimplicialComplex& K) { return faces_out(support(mobius(K.indicator()))); },
      py::arg("complex"),
      "Support of the Moebius transform of the indicator function");

  mod.def(
      "betti_table",
      [](const SimplicialComplex& K, const std::string& field) {
        const auto table = betti_table(K, field_from_string(field));
        py::list entries;
        for (const auto& [key, beta] : table.entries())
          entries.append(py::make_tuple(
              key.first, Subset::from_bits(K.m(), key.second).elements(), beta));
        py::dict out;
        out["field"] = to_string(table.field());
        out["entries"] = entries;
        out["total"] = table.total();
        return out;
      },
      py::arg("complex"), py::arg("field") = "gf2",
      "Bigraded Betti numbers as (i, a, beta) triples plus the total");

  mod.def(
      "poincare_zk",
      [](const SimplicialComplex& K, const std::string& field) {
        return poly_out(poincare_zk(K, field_from_string(field)));
      },
      py::arg("complex"), py::arg("field") = "gf2");

  mod.def(
      "poincare_rzk",
      [](const SimplicialComplex& K, const std::string& field) {
        return poly_out(poincare_rzk(K, field_from_string(field)));
      },
      py::arg("complex"), py::arg("field") = "gf2");

  mod.def(
      "poincare_generalized",
      [](const SimplicialComplex& K, const std::vector<unsigned>& kappa,
         const std::string& field) {
        const auto table = betti_table(K, field_from_string(field));
        return poly_out(poincare_generalized(table, DegreeVector{kappa}));
      },
      py::arg("complex"), py::arg("kappa"), py::arg("field") = "gf2");

  mod.def(
      "compress",
      [](const SimplicialComplex& K, const std::string& policy) {
        const auto cert = compress(K.indicator(), policy_from_string(policy));
        py::dict out;
        out["steps"] = cert.steps;
        out["a0"] = cert.final_face.elements();
        out["bound"] = cert.bound;
        out["mobius_support_size"] = cert.mobius_support_size;
        out["holds"] = cert.holds();
        return out;
      },
      py::arg("complex"), py::arg("policy") = "smallest",
      "Compression certificate for the lower-bound theorem");

  mod.def(
      "cross_validate",
      [](const SimplicialComplex& K, const std::string& field) {
        const auto report = cross_validate(K, field_from_string(field));
        py::dict out;
        out["ok"] = report.ok();
        out["zk_oracle"] = poly_out(report.disk2.oracle_poly);
        out["zk_hochster"] = poly_out(report.disk2.hochster_poly);
        out["rzk_oracle"] = poly_out(report.interval.oracle_poly);
        out["rzk_hochster"] = poly_out(report.interval.hochster_poly);
        return out;
      },
      py::arg("complex"), py::arg("field") = "gf2",
      "Compare the Hochster pipeline against the literal cell complex");

  mod.def(
      "is_free",
      [](const SimplicialComplex& K, const std::string& kind, int m,
         const std::vector<std::vector<long>>& generators) {
        return is_free(make_subgroup(kind, m, generators), K);
      },
      py::arg("complex"), py::arg("kind"), py::arg("m"), py::arg("generators"));

  mod.def("rank_bound", &rank_bound, py::arg("complex"));

  mod.def(
      "hc_verify",
      [](const SimplicialComplex& K, const std::string& kind, int m,
         const std::vector<std::vector<long>>& generators, const std::string& field) {
        const auto report =
            hc_verify(K, make_subgroup(kind, m, generators), field_from_string(field));
        py::dict out;
        out["free"] = report.free;
        out["r"] = report.r;
        out["total_dim_zk"] = report.total_dim_zk;
        out["total_dim_rzk"] = report.total_dim_rzk;
        out["lower_bound"] = report.lower_bound;
        out["bound_holds"] = report.bound_holds;
        out["rank_bound"] = report.rank_bound;
        out["rank_bound_holds"] = report.rank_bound_holds;
        out["ok"] = report.ok();
        return out;
      },
      py::arg("complex"), py::arg("kind"), py::arg("m"), py::arg("generators"),
      py::arg("field") = "gf2");

  mod.def(
      "max_free_rank_real",
      [](const SimplicialComplex& K) {
        const auto result = max_free_rank_real(K);
        py::dict out;
        out["r"] = result.r;
        out["witness"] = result.witness
                             ? py::cast(result.witness->generator_rows())
                             : py::object(py::none());
        return out;
      },
      py::arg("complex"));

  mod.def("enumerate_complexes", &enumerate_complexes, py::arg("m"),
          "Every simplicial complex on [m], m <= 4");

  mod.def(
      "parse_complex",
      [](const std::string& text) { return parse_complex(text); },
      py::arg("text"), "Parse the m/maximal_faces file format");
}
