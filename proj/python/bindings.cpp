#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphaera/avc_engine.hpp"
#include "sphaera/comb_tiling.hpp"
#include "sphaera/errors.hpp"
#include "sphaera/export.hpp"
#include "sphaera/io.hpp"
#include "sphaera/pentagon.hpp"
#include "sphaera/reproduce.hpp"
#include "sphaera/verify.hpp"

namespace py = pybind11;
using namespace sphaera;

namespace {

std::map<std::string, int> census_dict(const CombTiling& t) {
    std::map<std::string, int> out;
    for (const auto& [v, n] : census(t)) out[vertex_name(v)] = n;
    return out;
}

CombTiling generate(const std::string& name, int m, int variant) {
    if (name == "earthmap") return build_earthmap(m);
    if (name == "symmetric-earthmap") return build_symmetric_earthmap(m);
    if (name == "flip") return flip_standard(m, variant);
    if (name == "symmetric-flip") return flip_symmetric(m, variant);
    if (name == "f16-flip") return build_f16_flip();
    if (name == "tetra") return build_subdivision(Solid::tetra);
    if (name == "octa") return build_subdivision(Solid::octa);
    if (name == "icosa") return build_subdivision(Solid::icosa);
    throw ParameterError("unknown generator: " + name);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sphere tilings by congruent a4b pentagons";

    py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
    py::register_exception<ClosureError>(m, "ClosureError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    py::class_<Pentagon>(m, "Pentagon")
        .def_property_readonly("angles", [](const Pentagon& p) { return p.angle; })
        .def_readonly("a", &Pentagon::a)
        .def_readonly("b", &Pentagon::b)
        .def_readonly("f", &Pentagon::f)
        .def_property_readonly("family", [](const Pentagon& p) { return family_name(p.family); })
        .def("residuals", [](const Pentagon& p) { return coolsaet_residuals(p); })
        .def("classify", [](const Pentagon& p) { return describe(classify(p)); })
        .def("to_json", &pentagon_to_json)
        .def_static("from_json", &pentagon_from_json);

    m.def(
        "make_pentagon",
        [](const std::string& family, int f, double parameter) {
            return make_pentagon({family_from_name(family), f, parameter});
        },
        py::arg("family"), py::arg("f") = 0, py::arg("parameter") = 0.0);
    m.def("parse_angle", &parse_angle);

    py::class_<CombTiling>(m, "Tiling")
        .def_property_readonly("size", &CombTiling::size)
        .def("census", &census_dict)
        .def("canonical", [](const CombTiling& t, bool mirror) { return to_hex(canonical_code(t, mirror)); },
             py::arg("identify_mirror") = true)
        .def("ufo_count", [](const CombTiling& t) { return detect_ufos(t).size(); })
        .def("to_json", &tiling_to_json)
        .def_static("from_json", &tiling_from_json)
        .def("__len__", &CombTiling::size);

    m.def("generate", &generate, py::arg("name"), py::arg("m") = 5, py::arg("variant") = 0);
    m.def("is_isomorphic", [](const CombTiling& a, const CombTiling& b) { return is_isomorphic(a, b); });

    m.def(
        "verify",
        [](const CombTiling& t, const Pentagon& p, double tol) {
            auto r = verify_geometric(layout(t, p), tol);
            py::dict d;
            d["pass"] = r.pass;
            d["vertex_closure"] = r.vertex_closure;
            d["edge_defect"] = r.edge_defect;
            d["shape_defect"] = r.shape_defect;
            d["area_defect"] = r.area_defect;
            d["angle_sum_defect"] = r.angle_sum_defect;
            return d;
        },
        py::arg("tiling"), py::arg("pentagon"), py::arg("tol") = 1e-6);
    m.def(
        "to_obj", [](const CombTiling& t, const Pentagon& p) { return to_obj(layout(t, p)); }, py::arg("tiling"),
        py::arg("pentagon"));

    m.def(
        "enumerate_vertices",
        [](const std::string& system, int f) {
            AngleSystem sys = system == "table3"      ? table3_system(f)
                              : system == "f16"       ? f16_system()
                              : system == "symmetric" ? symmetric_system(f)
                                                      : throw ParameterError("unknown system: " + system);
            std::vector<std::string> out;
            for (const auto& v : enumerate_vertices(sys)) out.push_back(vertex_name(v));
            return out;
        },
        py::arg("system"), py::arg("f"));
    m.def(
        "table3_search_counts",
        [](int k) {
            std::vector<size_t> out;
            for (const auto& row : search_table3(k)) out.push_back(row.size());
            return out;
        },
        py::arg("k") = 2);
    m.def("count_table3", &count_table3, py::arg("k"), py::arg("row"));
}
