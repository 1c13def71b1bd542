#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "schwarzian_lab/commands.hpp"
#include "schwarzian_lab/errors.hpp"

namespace py = pybind11;
namespace sl = schwarzian_lab;

namespace {

sl::SpiralAlpha as_alpha(double a) { return sl::SpiralAlpha(a); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Schwarzian and pre-Schwarzian norms for the Robertson class S_alpha";
    m.attr("__version__") = sl::kVersion;

    auto base = py::register_exception<sl::Error>(m, "Error");
    py::register_exception<sl::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<sl::ParseError>(m, "ParseError", base.ptr());

    py::class_<sl::TaylorSeries>(m, "TaylorSeries")
        .def(py::init<std::vector<sl::Complex>>(), py::arg("coeffs"))
        .def_static("geometric", &sl::TaylorSeries::geometric, py::arg("order") = sl::kDefaultOrder)
        .def_static("identity", &sl::TaylorSeries::identity, py::arg("order") = sl::kDefaultOrder)
        .def_property_readonly("order", &sl::TaylorSeries::order)
        .def_property_readonly("coeffs",
                               [](const sl::TaylorSeries& s) {
                                   return std::vector<sl::Complex>(s.coeffs().begin(), s.coeffs().end());
                               })
        .def("__call__", &sl::TaylorSeries::eval)
        .def("__mul__", [](const sl::TaylorSeries& a, const sl::TaylorSeries& b) { return a * b; })
        .def("__truediv__", [](const sl::TaylorSeries& a, const sl::TaylorSeries& b) { return a / b; })
        .def("__add__", [](const sl::TaylorSeries& a, const sl::TaylorSeries& b) { return a + b; })
        .def("__sub__", [](const sl::TaylorSeries& a, const sl::TaylorSeries& b) { return a - b; });

    m.def("series_mul", &sl::series_mul);
    m.def("series_div", &sl::series_div);
    m.def("series_compose", &sl::series_compose);
    m.def("series_derivative", &sl::series_derivative);
    m.def("series_integrate", &sl::series_integrate);
    m.def("series_exp", &sl::series_exp);

    py::enum_<sl::Regime>(m, "Regime").value("Small", sl::Regime::Small).value("Large", sl::Regime::Large);

    py::class_<sl::SpiralAlpha>(m, "SpiralAlpha")
        .def(py::init<double>(), py::arg("alpha"))
        .def_property_readonly("value", &sl::SpiralAlpha::value)
        .def_property_readonly("regime", &sl::SpiralAlpha::regime)
        .def("__repr__", [](const sl::SpiralAlpha& a) { return "SpiralAlpha(" + std::to_string(a.value()) + ")"; });
    py::implicitly_convertible<double, sl::SpiralAlpha>();
    py::implicitly_convertible<int, sl::SpiralAlpha>();

    py::class_<sl::GridConfig>(m, "GridConfig")
        .def(py::init<>())
        .def_readwrite("n_radii", &sl::GridConfig::n_radii)
        .def_readwrite("n_angles", &sl::GridConfig::n_angles)
        .def_readwrite("r_max", &sl::GridConfig::r_max)
        .def_readwrite("refine_iters", &sl::GridConfig::refine_iters)
        .def_readwrite("refine_tol", &sl::GridConfig::refine_tol);

    py::class_<sl::NormResult>(m, "NormResult")
        .def_readonly("value", &sl::NormResult::value)
        .def_readonly("argmax", &sl::NormResult::argmax)
        .def_readonly("boundary_attained", &sl::NormResult::boundary_attained)
        .def_readonly("truncation_limited", &sl::NormResult::truncation_limited)
        .def_readonly("evaluations", &sl::NormResult::evaluations);

    py::class_<sl::CertReport>(m, "CertReport")
        .def_readonly("max_modulus_excess", &sl::CertReport::max_modulus_excess)
        .def_readonly("value_at_origin", &sl::CertReport::value_at_origin)
        .def_readonly("max_schwarz_pick_defect", &sl::CertReport::max_schwarz_pick_defect)
        .def("certified", &sl::CertReport::certified, py::arg("tol") = 1e-12);

    py::class_<sl::SchwarzFunction>(m, "SchwarzFunction")
        .def("__call__", &sl::SchwarzFunction::operator())
        .def("quotient", &sl::SchwarzFunction::quotient)
        .def_property_readonly("degree", &sl::SchwarzFunction::degree)
        .def("__repr__", &sl::SchwarzFunction::describe);
    m.def("make_rotation", &sl::make_rotation, py::arg("theta"));
    m.def("make_blaschke2", &sl::make_blaschke2, py::arg("p"), py::arg("b"));
    m.def("make_blaschke_fix0", &sl::make_blaschke_fix0, py::arg("theta"), py::arg("zeros"));
    m.def("schwarz_certify",
          py::overload_cast<const sl::SchwarzFunction&, const sl::GridConfig&>(&sl::schwarz_certify),
          py::arg("omega"), py::arg("grid") = sl::GridConfig{});

    py::class_<sl::RobertsonFunction>(m, "RobertsonFunction")
        .def_property_readonly("alpha", [](const sl::RobertsonFunction& f) { return f.alpha().value(); })
        .def_property_readonly("omega", &sl::RobertsonFunction::omega)
        .def_property_readonly("f_series", &sl::RobertsonFunction::f_series)
        .def("pre_schwarzian", &sl::RobertsonFunction::pre_schwarzian)
        .def("schwarzian", &sl::RobertsonFunction::schwarzian)
        .def("series_schwarzian",
             [](const sl::RobertsonFunction& f, sl::Complex z) { return sl::schwarzian(f.series_function(), z); });

    m.def("robertson_from_omega", &sl::robertson_from_omega, py::arg("alpha"), py::arg("omega"),
          py::arg("order") = sl::kDefaultOrder);
    m.def("schwarzian_via_omega", &sl::schwarzian_via_omega, py::arg("alpha"), py::arg("omega"), py::arg("z"));
    m.def("membership_min", py::overload_cast<const sl::RobertsonFunction&, const sl::GridConfig&>(&sl::membership_min),
          py::arg("f"), py::arg("grid") = sl::GridConfig{});
    m.def("delta", [](double a) { return sl::delta(as_alpha(a)); });
    m.def("s0", [](double a, double r) { return sl::s0(as_alpha(a), r); });
    m.def("h_poly", [](double a, double t) { return sl::h_poly(as_alpha(a), t); });
    m.def("g_profile", [](double a, double r, double s) { return sl::g_profile(as_alpha(a), r, s); });
    m.def("pointwise_bound", [](double a, double r) { return sl::pointwise_bound(as_alpha(a), r); });
    m.def("schwarzian_norm_bound", [](double a) { return sl::schwarzian_norm_bound(as_alpha(a)); });
    m.def("pre_schwarzian_norm_bound", [](double a) { return sl::pre_schwarzian_norm_bound(as_alpha(a)); });
    m.def("extremal_p", [](double a) { return sl::extremal_p(as_alpha(a)); });
    m.def("extremal_b", [](double a, double z0) { return sl::extremal_b(as_alpha(a), z0); });
    m.def("extremal_value", [](double a, double z0) { return sl::extremal_value(as_alpha(a), z0); });
    m.def("extremal_fz0p", [](double a, double z0, std::size_t n) { return sl::extremal_fz0p(as_alpha(a), z0, n); },
          py::arg("alpha"), py::arg("z0"), py::arg("order") = sl::kDefaultOrder);
    m.def("extremal_attaining",
          [](double a, double z0, std::size_t n) { return sl::extremal_attaining(as_alpha(a), z0, n); },
          py::arg("alpha"), py::arg("z0"), py::arg("order") = sl::kDefaultOrder);
    m.def("extremal_f0", [](double a, std::size_t n) { return sl::extremal_f0(as_alpha(a), n); }, py::arg("alpha"),
          py::arg("order") = sl::kDefaultOrder);

    py::class_<sl::DieudonneReport>(m, "DieudonneReport")
        .def_readonly("z0", &sl::DieudonneReport::z0)
        .def_readonly("lhs", &sl::DieudonneReport::lhs)
        .def_readonly("rhs", &sl::DieudonneReport::rhs)
        .def_readonly("slack", &sl::DieudonneReport::slack);
    m.def("dieudonne_report", &sl::dieudonne_report, py::arg("omega"), py::arg("z0"));

    m.def("norm_pre_schwarzian",
          py::overload_cast<const sl::RobertsonFunction&, const sl::GridConfig&>(&sl::norm_pre_schwarzian),
          py::arg("f"), py::arg("grid") = sl::GridConfig{});
    m.def("norm_schwarzian",
          py::overload_cast<const sl::RobertsonFunction&, const sl::GridConfig&>(&sl::norm_schwarzian),
          py::arg("f"), py::arg("grid") = sl::GridConfig{});

    m.def("parse_spec", [](const std::string& text) { return sl::parse_spec(text).canonical(); },
          "Parse and validate a function spec; returns its canonical string.");
    m.def("cmd_bound", [](double a, std::optional<double> r) { return sl::cmd_bound(a, r).to_json(); },
          py::arg("alpha"), py::arg("r") = py::none());
    m.def("cmd_norm",
          [](const std::string& spec, const std::string& kind, const sl::GridConfig& cfg) {
              return sl::cmd_norm(sl::parse_spec(spec), sl::parse_norm_kind(kind), cfg).to_json();
          },
          py::arg("spec"), py::arg("kind") = "schwarzian", py::arg("grid") = sl::GridConfig{});
    m.def("cmd_extremal", [](double a, double z0) { return sl::cmd_extremal(a, z0).to_json(); });
    m.def("cmd_sweep", &sl::cmd_sweep, py::arg("alpha_min"), py::arg("alpha_max"), py::arg("steps"),
          py::arg("grid") = sl::GridConfig{});
    m.def("verify",
          [](std::uint64_t seed) {
              sl::AcceptanceContext ctx;
              ctx.seed = seed;
              return sl::cmd_verify(ctx).report.to_json();
          },
          py::arg("seed") = 0, py::call_guard<py::gil_scoped_release>());
}
