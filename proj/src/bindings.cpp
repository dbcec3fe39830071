#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pathres/betti.hpp"
#include "pathres/counting.hpp"
#include "pathres/covering.hpp"
#include "pathres/errors.hpp"
#include "pathres/homology.hpp"
#include "pathres/ideals.hpp"
#include "pathres/morse.hpp"
#include "pathres/staircase.hpp"
#include "pathres/stringcode.hpp"

namespace py = pybind11;
using namespace pathres;

namespace {

Cell make_cell(std::vector<std::vector<int>> rows) { return Cell{std::move(rows)}; }

std::vector<Monomial> make_monomials(const std::vector<std::vector<int>>& exps) {
  std::vector<Monomial> ms;
  ms.reserve(exps.size());
  for (const auto& e : exps) ms.emplace_back(e);
  return ms;
}

py::dict family_matching_dict(const FamilyMatching& fm) {
  py::dict out;
  out["ground"] = fm.family.ground;
  out["faces"] = fm.family.faces;
  out["pairs"] = fm.pairs;
  out["critical"] = fm.critical;
  return out;
}

py::dict stats_dict(const CellStats& s) {
  py::dict out;
  out["A"] = s.A;
  out["N"] = s.N;
  out["N2"] = s.N2;
  out["critical_inducing"] = s.critical_inducing;
  out["B"] = s.B;
  out["C"] = s.C;
  out["D"] = s.D;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal cellular resolutions of powers of path edge ideals";
  m.attr("__version__") = "0.1.0";

  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<CheckError>(m, "CheckError", PyExc_RuntimeError);

  m.def(
      "gens",
      [](int n, int d) {
        GeneratorSet gs = power_gens(edge_ideal_gens(Graph::path(n)), d);
        std::vector<std::vector<int>> out;
        out.reserve(gs.gens.size());
        for (const auto& g : gs.gens) out.push_back(g.exps());
        return out;
      },
      py::arg("n"), py::arg("d") = 1,
      "Exponent vectors of the minimal generators of I(P_n)^d");

  m.def(
      "lcm_of",
      [](const std::vector<std::vector<int>>& exps) {
        return lcm_of(make_monomials(exps)).exps();
      },
      py::arg("monomials"));

  m.def("hull_membership", &hull_membership, py::arg("point"), py::arg("verts"));

  m.def(
      "verify_lattice_path",
      [](int n, int d) {
        LatticeReport r = verify_lattice_generators(Graph::path(n), d);
        return py::make_tuple(r.ok, r.lattice_points, r.generators);
      },
      py::arg("n"), py::arg("d"),
      "(ok, lattice_points, generators) for the path on n vertices");

  m.def(
      "verify_lattice_cycle",
      [](int n, int d) {
        LatticeReport r = verify_lattice_generators(Graph::cycle(n), d);
        return py::make_tuple(r.ok, r.lattice_points, r.generators);
      },
      py::arg("n"), py::arg("d"),
      "(ok, lattice_points, generators) for the cycle on n vertices");

  py::class_<ComplexYdn>(m, "ComplexYdn")
      .def_property_readonly("n", &ComplexYdn::n)
      .def_property_readonly("d", &ComplexYdn::d)
      .def("size", &ComplexYdn::size)
      .def("top_dim", &ComplexYdn::top_dim)
      .def("rows", [](const ComplexYdn& X, int id) { return X.cell(id).rows; },
           py::arg("id"))
      .def("dim_of", &ComplexYdn::dim_of, py::arg("id"))
      .def("label",
           [](const ComplexYdn& X, int id) { return X.label(id).exps(); },
           py::arg("id"))
      .def("boundary", &ComplexYdn::boundary, py::arg("id"))
      .def("f_vector", &ComplexYdn::f_vector)
      .def("cell_id",
           [](const ComplexYdn& X, std::vector<std::vector<int>> rows) {
             return X.cell_id(make_cell(std::move(rows)));
           },
           py::arg("rows"))
      .def("subcomplex_leq",
           [](const ComplexYdn& X, const std::vector<int>& alpha) {
             return X.subcomplex_leq(Monomial(alpha));
           },
           py::arg("alpha"))
      .def("to_json", &ComplexYdn::to_json);

  m.def("complex_ydn", &ComplexYdn::enumerate, py::arg("n"), py::arg("d"),
        "Enumerate the staircase complex Y^d_n");
  m.def("count_cells", &count_cells, py::arg("n"), py::arg("d"));

  m.def("covered_vertices", &covered_vertices, py::arg("boxes"), py::arg("i"));
  m.def(
      "cell_label",
      [](std::vector<std::vector<int>> rows, int n) {
        return cell_label(make_cell(std::move(rows)), n).exps();
      },
      py::arg("rows"), py::arg("n"));
  m.def(
      "vertex_realization",
      [](std::vector<std::vector<int>> rows, int n) {
        return vertex_realization(make_cell(std::move(rows)), n);
      },
      py::arg("rows"), py::arg("n"));
  m.def(
      "boundary_faces",
      [](std::vector<std::vector<int>> rows) {
        std::vector<std::pair<std::vector<std::vector<int>>, int>> out;
        for (auto& [face, sign] : boundary_faces(make_cell(std::move(rows))))
          out.emplace_back(face.rows, sign);
        return out;
      },
      py::arg("rows"));

  m.def("ind_path_matching",
        [](int m_) { return family_matching_dict(ind_path_matching(m_)); },
        py::arg("m"));
  m.def("cov_path_faces",
        [](int v) { return cov_path_faces(v).faces; }, py::arg("v"));
  m.def("cov_path_matching",
        [](int v) { return family_matching_dict(cov_path_matching(v)); },
        py::arg("v"));

  m.def(
      "fiber_groups",
      [](const ComplexYdn& X) {
        py::list out;
        for (const FiberGroup& g : fiber_decompose(X))
          out.append(py::make_tuple(g.key, g.members, g.max_cell));
        return out;
      },
      py::arg("X"), "(key, members, max_cell) triples, sorted by key");

  py::class_<Matching>(m, "Matching")
      .def_readonly("pairs", &Matching::pairs)
      .def_readonly("critical", &Matching::critical);

  m.def("assemble_matching", &assemble_matching, py::arg("X"));
  m.def("matching_to_json", &matching_to_json, py::arg("matching"));
  m.def("morse_boundary", &morse_boundary, py::arg("X"), py::arg("matching"));

  m.def(
      "taylor_betti_path",
      [](int n, int d, uint32_t prime) {
        GeneratorSet gs = power_gens(edge_ideal_gens(Graph::path(n)), d);
        py::dict out;
        for (const auto& [key, v] : taylor_betti(gs, PrimeField(prime))) {
          const auto& [i, alpha] = key;
          out[py::make_tuple(i, py::tuple(py::cast(alpha)))] = v;
        }
        return out;
      },
      py::arg("n"), py::arg("d"), py::arg("prime") = 32003,
      "Multigraded Betti numbers of S/I(P_n)^d keyed by (i, alpha)");

  m.def(
      "verify_supports",
      [](int n, int d, uint32_t prime) {
        ComplexYdn X = ComplexYdn::enumerate(n, d);
        SupportReport r = verify_supports_resolution(X, PrimeField(prime));
        std::vector<std::vector<int>> failures;
        for (const auto& f : r.failures) failures.push_back(f.exps());
        return py::make_tuple(r.ok, r.alphas_checked, failures);
      },
      py::arg("n"), py::arg("d"), py::arg("prime") = 32003,
      "(ok, alphas_checked, failures) for the subcomplex homology check");

  m.def("label_maximal_cells", &label_maximal_cells, py::arg("X"));
  m.def(
      "cell_stats",
      [](std::vector<std::vector<int>> rows) {
        return stats_dict(cell_stats(make_cell(std::move(rows))));
      },
      py::arg("rows"));
  m.def(
      "encode_string",
      [](std::vector<std::vector<int>> rows, int n) {
        return encode_string(make_cell(std::move(rows)), n).bits;
      },
      py::arg("rows"), py::arg("n"));
  m.def(
      "decode_string",
      [](const std::string& bits, int n, int d) {
        return decode_string(StringCode{n, d, bits}).rows;
      },
      py::arg("bits"), py::arg("n"), py::arg("d"));

  m.def("count_strings", &count_strings, py::arg("n"), py::arg("d"),
        py::arg("N"), py::arg("B"), py::arg("C"));
  m.def("count_by_BC", &count_by_BC, py::arg("n"), py::arg("d"), py::arg("B"),
        py::arg("C"));
  m.def("closed_form_betti", &closed_form_betti, py::arg("n"), py::arg("d"),
        py::arg("i"), py::arg("j"));

  m.def(
      "betti_table",
      [](int n, int d, const std::string& method, uint32_t prime) {
        return betti_table(n, d, parse_method(method), prime).entries;
      },
      py::arg("n"), py::arg("d"), py::arg("method") = "closed-form",
      py::arg("prime") = 32003,
      "Graded Betti numbers of S/I(P_n)^d as a dict {(i, j): beta}");

  m.def(
      "format_betti_table",
      [](int n, int d, const std::string& method, const std::string& format,
         uint32_t prime) {
        return format_table(betti_table(n, d, parse_method(method), prime),
                            format);
      },
      py::arg("n"), py::arg("d"), py::arg("method") = "closed-form",
      py::arg("format") = "text", py::arg("prime") = 32003);
}
