#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "poncelet/report.hpp"

namespace py = pybind11;
using namespace poncelet;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    py::module_ pyjson = py::module_::import("json");
    return pyjson.attr("loads")(j.dump());
}

std::pair<double, double> as_xy(const Point2& p) { return {p.x, p.y}; }

Triangle make_triangle(std::pair<double, double> a, std::pair<double, double> b,
                       std::pair<double, double> c) {
    return Triangle{{a.first, a.second}, {b.first, b.second}, {c.first, c.second}};
}

}  // namespace

PYBIND11_MODULE(poncelet, m) {
    m.doc() = "Poncelet triangle families: chase, triangle centers, invariants, loci";

    py::register_exception<NotAPorism>(m, "NotAPorism");
    py::register_exception<GeometryError>(m, "GeometryError");

    py::class_<Point2>(m, "Point2")
        .def(py::init<double, double>())
        .def_readonly("x", &Point2::x)
        .def_readonly("y", &Point2::y)
        .def("__repr__", [](const Point2& p) {
            return "Point2(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
        });

    py::class_<AxisEllipse>(m, "AxisEllipse")
        .def(py::init([](double a, double b, std::pair<double, double> c) {
                 return AxisEllipse(Point2{c.first, c.second}, a, b);
             }),
             py::arg("a"), py::arg("b"), py::arg("center") = std::pair<double, double>{0, 0})
        .def_readonly("a", &AxisEllipse::a)
        .def_readonly("b", &AxisEllipse::b);

    py::class_<GeneralEllipse>(m, "GeneralEllipse")
        .def_readonly("semi_major", &GeneralEllipse::semiMajor)
        .def_readonly("semi_minor", &GeneralEllipse::semiMinor)
        .def_readonly("rotation", &GeneralEllipse::rotation)
        .def_property_readonly("center", [](const GeneralEllipse& e) { return as_xy(e.center); });

    py::class_<Triangle>(m, "Triangle")
        .def(py::init(&make_triangle))
        .def_property_readonly("A", [](const Triangle& t) { return as_xy(t.A); })
        .def_property_readonly("B", [](const Triangle& t) { return as_xy(t.B); })
        .def_property_readonly("C", [](const Triangle& t) { return as_xy(t.C); });

    py::class_<TriangleMetrics>(m, "TriangleMetrics")
        .def_readonly("l1", &TriangleMetrics::l1)
        .def_readonly("l2", &TriangleMetrics::l2)
        .def_readonly("l3", &TriangleMetrics::l3)
        .def_readonly("s", &TriangleMetrics::s)
        .def_readonly("area", &TriangleMetrics::area)
        .def_readonly("R", &TriangleMetrics::R)
        .def_readonly("r", &TriangleMetrics::r);

    py::class_<ConicPair>(m, "ConicPair")
        .def_readonly("outer", &ConicPair::outer);

    py::class_<PolygonSample>(m, "PolygonSample")
        .def_readonly("t", &PolygonSample::t)
        .def_property_readonly("vertices", [](const PolygonSample& s) {
            std::vector<std::pair<double, double>> out;
            for (const auto& v : s.vertices) out.push_back(as_xy(v));
            return out;
        });

    py::class_<FamilySpec>(m, "FamilySpec")
        .def_readonly("pair", &FamilySpec::pair)
        .def_readonly("n", &FamilySpec::n)
        .def_property_readonly("kind", [](const FamilySpec& f) { return kind_name(f.kind); });

    m.def("focal_x1", &focal_x1);
    m.def("iso_x2", &iso_x2);
    m.def("focal_x4", &focal_x4);
    m.def("iso_x7", &iso_x7);
    m.def("macbeath", &macbeath);
    m.def("dual", &dual);
    m.def("chapple", &chapple);
    m.def("brocard", &brocard);
    m.def("affine_macbeath", [](double a, double b, std::pair<double, double> oc) {
        return affine_macbeath(a, b, Point2{oc.first, oc.second});
    });
    m.def("macbeath_ngon", [](double R, std::pair<double, double> c, int n) {
        return macbeath_ngon(R, Point2{c.first, c.second}, n);
    });
    m.def("caustic_radius_general", &caustic_radius_general);

    m.def("chase", &chase, py::arg("pair"), py::arg("t"), py::arg("n"));
    m.def("closure_defect", &closure_defect, py::arg("pair"), py::arg("t"), py::arg("n"));
    m.def("porism_defect", &porism_defect, py::arg("pair"), py::arg("n"), py::arg("probes") = 16);
    m.def("sample_family", &sample_family, py::arg("pair"), py::arg("n"), py::arg("count"),
          py::arg("tol") = 1e-9);

    m.def("metrics", &metrics);
    m.def("center", [](const Triangle& t, int k) { return as_xy(center(t, CenterId::X(k))); });
    m.def("isogonal_conjugate", [](const Triangle& t, std::pair<double, double> p) {
        return as_xy(isogonal_conjugate(t, Point2{p.first, p.second}));
    });
    m.def("polar_circle_sq", [](const Triangle& t) { return polar_circle_sq(metrics(t)); });
    m.def("adams_radius", [](const Triangle& t) { return adams_radius(metrics(t)); });

    m.def("measure", [](const FamilySpec& spec, const std::string& id, int count) {
        return json_to_py(to_json(measure(spec, parse_invariant(id), count)));
    });
    m.def("verify", [](const FamilySpec& spec, int count, double tol) {
        return json_to_py(to_json(verify(spec, count, tol)));
    }, py::arg("spec"), py::arg("count") = 64, py::arg("tol") = 1e-8);
    m.def("locus", [](const FamilySpec& spec, int k, int count) {
        return json_to_py(to_json(locus(spec, CenterId{k}, count)));
    }, py::arg("spec"), py::arg("center"), py::arg("count") = 64);
    m.def("probe_x4_stationary", [](int trials, unsigned long long seed) {
        return json_to_py(probe_x4_stationary(trials, seed));
    });
}
