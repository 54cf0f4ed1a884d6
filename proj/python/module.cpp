#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "germforge/double_point.hpp"
#include "germforge/errors.hpp"
#include "germforge/germ_analysis.hpp"
#include "germforge/group_action.hpp"
#include "germforge/image_equation.hpp"
#include "germforge/parser.hpp"
#include "germforge/presentation.hpp"

namespace py = pybind11;
using namespace germforge;

namespace {

ReflectedGraphGerm make_germ(const std::string& group, const std::string& h,
                             const std::string& params) {
    std::string text = "group = " + group + "\nh = " + h + "\n";
    if (!params.empty()) text += "params = " + params + "\n";
    return assemble_germ(parse_germ_document(text));
}

py::list strings_of(const std::vector<Polynomial>& items) {
    py::list out;
    for (const Polynomial& p : items) out.append(p.to_string());
    return out;
}

py::list rows_of(const PolyMatrix& m) {
    py::list out;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(m.at(i, j).to_string());
        out.append(row);
    }
    return out;
}

py::dict describe(const ReflectedGraphGerm& germ) {
    py::dict d;
    d["group"] = germ.group.name();
    d["h"] = germ.h.to_string();
    d["params"] = germ.parameters;
    return d;
}

py::dict image(const std::string& group, const std::string& h,
               const std::string& params) {
    ReflectedGraphGerm germ = make_germ(group, h, params);
    ImageEquation eq = image_equation(germ);
    py::dict d = describe(germ);
    d["F"] = eq.F.to_string();
    py::list q;
    for (const InvariantExpression& c : eq.coefficients)
        q.append(c.polynomial.to_string());
    d["Q"] = q;
    return d;
}

py::dict presentation(const std::string& group, const std::string& h,
                      const std::string& params) {
    ReflectedGraphGerm germ = make_germ(group, h, params);
    PresentationResult pres = presentation_matrix(germ);
    py::dict d = describe(germ);
    d["lambda"] = rows_of(pres.lambda);
    d["eigen_matrix_det"] = pres.eigen_matrix_det.to_string();
    d["det_formula_constant"] = pres.det_formula_constant.to_string();
    return d;
}

py::dict double_points(const std::string& group, const std::string& h,
                       const std::string& params) {
    ReflectedGraphGerm germ = make_germ(group, h, params);
    DoublePointEquation dp = double_point_equation(germ);
    py::dict d = describe(germ);
    d["equation"] = dp.equation.to_string();
    d["reflection_factors"] = strings_of(dp.reflection_factors);
    d["non_reflection_factors"] = strings_of(dp.non_reflection_factors);
    d["leading_constant"] = dp.leading_constant.to_string();
    d["degenerate"] = dp.degenerate;
    if (auto regular = double_point_regular_case(germ))
        d["regular_case_equation"] = regular->equation.to_string();
    return d;
}

py::dict multiplicity(const std::string& group, const std::string& h,
                      const std::string& params) {
    ReflectedGraphGerm germ = make_germ(group, h, params);
    MultiplicityReport report = multiplicity_report(germ, image_equation(germ).F);
    py::dict d = describe(germ);
    d["multiplicity"] = report.multiplicity;
    d["lower_bound"] = report.lower_bound;
    d["upper_bound"] = report.upper_bound;
    d["group_order"] = report.group_order;
    QuasihomogeneousType type = quasihomogeneous_type(germ);
    d["quasihomogeneous"] = type.found;
    if (type.found) {
        d["weights"] = type.weights;
        d["coordinate_degrees"] = type.coordinate_degrees;
    }
    return d;
}

py::dict group_info(const std::string& group) {
    ReflectionGroup G = parse_group_spec(group);
    py::dict d;
    d["name"] = G.name();
    d["order"] = G.order();
    d["dimension"] = G.dimension();
    d["reflections"] = G.reflection_ids();
    d["degrees"] = G.degrees();
    d["orbit_map"] = strings_of(G.orbit_map());
    std::vector<Polynomial> forms;
    for (const Hyperplane& H : G.hyperplanes()) forms.push_back(H.form);
    d["hyperplanes"] = strings_of(forms);
    d["basis"] = strings_of(G.default_basis());
    return d;
}

std::string canonical(const std::string& text,
                      const std::vector<std::string>& variables) {
    return parse_polynomial(text, variables).to_string();
}

} // namespace

PYBIND11_MODULE(germforge, m) {
    m.doc() = "exact images, presentations, and double-point curves of "
              "reflected graph germs";

    py::register_exception<error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<resource_error>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<math_error>(m, "MathError", PyExc_ArithmeticError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);

    m.def("image", &image, py::arg("group"), py::arg("h"), py::arg("params") = "",
          "defining equation of the image and its coefficients Q_0..Q_{d-1}");
    m.def("presentation", &presentation, py::arg("group"), py::arg("h"),
          py::arg("params") = "",
          "presentation matrix of the pushforward module");
    m.def("double_points", &double_points, py::arg("group"), py::arg("h"),
          py::arg("params") = "",
          "double-point curve equation with its per-element factors");
    m.def("multiplicity", &multiplicity, py::arg("group"), py::arg("h"),
          py::arg("params") = "",
          "multiplicity at the origin, degree bounds, quasihomogeneous type");
    m.def("group_info", &group_info, py::arg("group"),
          "order, reflections, degrees, orbit map, and basis of a group spec");
    m.def("canonical", &canonical, py::arg("text"), py::arg("variables"),
          "parse a polynomial and return its canonical string");
}
