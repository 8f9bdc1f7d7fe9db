#include "seshadri/json_io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace seshadri;

namespace {

py::object big_int(const Int& x) {
    return py::module_::import("builtins").attr("int")(x.str());
}

Rational rational_arg(const py::object& value) {
    if (py::isinstance<py::int_>(value))
        return Rational(Int(py::str(value).cast<std::string>()));
    return parse_rational(value.cast<std::string>());
}

PointClass point_arg(const py::object& point) {
    if (py::isinstance<py::int_>(point))
        return PointClass::on_singular_fibre(point.cast<int>());
    std::string s = point.cast<std::string>();
    if (s == "very-general" || s == "very_general") return PointClass::very_general();
    if (s == "arbitrary") return PointClass::arbitrary();
    throw py::value_error("point must be 'very-general', 'arbitrary' or a fibre multiplicity");
}

py::object optional_value(const SeshadriEstimate& e) {
    if (!e.value) return py::none();
    return py::cast(rational_to_string(*e.value));
}

template <typename T>
py::object optional_cast(const std::optional<T>& v) {
    if (!v) return py::none();
    return py::cast(*v);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Seshadri constants on hyperelliptic surfaces";

    py::enum_<Ordering>(m, "Ordering")
        .value("LT", Ordering::LT)
        .value("EQ", Ordering::EQ)
        .value("GT", Ordering::GT);

    py::class_<SurfaceType>(m, "SurfaceType")
        .def_readonly("type_id", &SurfaceType::type_id)
        .def_readonly("group_name", &SurfaceType::group_name)
        .def_readonly("gamma", &SurfaceType::gamma)
        .def_readonly("mu", &SurfaceType::mu)
        .def_readonly("sing_mults", &SurfaceType::sing_mults)
        .def("__repr__", [](const SurfaceType& s) {
            std::ostringstream out;
            out << "SurfaceType(" << s.type_id << ", " << s.group_name
                << ", gamma=" << s.gamma << ", mu=" << s.mu << ")";
            return out.str();
        });

    m.def("surface_params", [](int t) { return surface_params(t); }, py::arg("type_id"));

    py::class_<DivisorClass>(m, "DivisorClass")
        .def(py::init([](std::int64_t a, std::int64_t b) { return DivisorClass{a, b}; }),
             py::arg("a"), py::arg("b"))
        .def_readonly("a", &DivisorClass::a)
        .def_readonly("b", &DivisorClass::b)
        .def(py::self == py::self)
        .def("__repr__", [](const DivisorClass& l) {
            return "DivisorClass(" + std::to_string(l.a) + ", " + std::to_string(l.b) + ")";
        });

    m.def("intersect", &intersect, py::arg("d1"), py::arg("d2"));
    m.def("is_ample", &is_ample, py::arg("l"));
    m.def("self_intersection", &self_intersection, py::arg("l"));
    m.def("fibre_classes", [](const SurfaceType& s) {
        auto f = fibre_classes(s);
        return py::make_tuple(f.psi_fibre, f.phi_fibre);
    });
    m.def(
        "is_effective_vertical",
        [](const py::object& b, const SurfaceType& s) {
            return is_effective_vertical(rational_arg(b), s);
        },
        py::arg("b"), py::arg("surface"));

    py::class_<ExactValue>(m, "ExactValue")
        .def_static(
            "rational",
            [](std::int64_t p, std::int64_t q) { return make_rational(p, q); },
            py::arg("p"), py::arg("q") = 1)
        .def_static(
            "surd",
            [](const py::object& r, std::int64_t d) {
                return make_surd(rational_arg(r), Int(d));
            },
            py::arg("r"), py::arg("d"))
        .def_static("parse", &parse_exact_value, py::arg("text"))
        .def_property_readonly("is_rational", &ExactValue::is_rational)
        .def_property_readonly(
            "q", [](const ExactValue& x) { return rational_to_string(x.rational_part()); })
        .def_property_readonly(
            "r",
            [](const ExactValue& x) { return rational_to_string(x.surd_coefficient()); })
        .def_property_readonly("d", [](const ExactValue& x) { return big_int(x.radicand()); })
        .def("to_decimal", &ExactValue::to_decimal, py::arg("digits"))
        .def("compare",
             [](const ExactValue& x, const ExactValue& y) { return compare(x, y); })
        .def(py::self == py::self)
        .def(py::self < py::self)
        .def(py::self <= py::self)
        .def(py::self > py::self)
        .def(py::self >= py::self)
        .def("__str__", &ExactValue::to_string)
        .def("__repr__",
             [](const ExactValue& x) { return "ExactValue(" + x.to_string() + ")"; });

    py::enum_<EstimateKind>(m, "EstimateKind")
        .value("Exact", EstimateKind::Exact)
        .value("CertifiedRational", EstimateKind::CertifiedRational)
        .value("BoundedBelow", EstimateKind::BoundedBelow)
        .value("UnknownWithBound", EstimateKind::UnknownWithBound);

    py::class_<SeshadriEstimate>(m, "SeshadriEstimate")
        .def_readonly("kind", &SeshadriEstimate::kind)
        .def_property_readonly("value", &optional_value)
        .def_property_readonly(
            "lower", [](const SeshadriEstimate& e) { return optional_cast(e.lower); })
        .def_property_readonly(
            "upper", [](const SeshadriEstimate& e) { return optional_cast(e.upper); })
        .def_readonly("branch", &SeshadriEstimate::branch)
        .def("to_json", [](const SeshadriEstimate& e) { return to_json(e).dump(); })
        .def("__repr__", [](const SeshadriEstimate& e) {
            return "SeshadriEstimate(" + to_json(e).dump() + ")";
        });

    m.def(
        "epsilon_min",
        [](int t, std::int64_t a, std::int64_t b) {
            return epsilon_min(surface_params(t), {a, b});
        },
        py::arg("type_id"), py::arg("a"), py::arg("b"));
    m.def(
        "epsilon_one",
        [](int t, std::int64_t a, std::int64_t b, const py::object& delta) {
            Rational d = delta.is_none() ? default_delta() : rational_arg(delta);
            return epsilon_one(surface_params(t), {a, b}, d);
        },
        py::arg("type_id"), py::arg("a"), py::arg("b"), py::arg("delta") = py::none());
    m.def(
        "epsilon_at_point",
        [](int t, std::int64_t a, std::int64_t b, const py::object& point) {
            return epsilon_at_point(surface_params(t), {a, b}, point_arg(point));
        },
        py::arg("type_id"), py::arg("a"), py::arg("b"), py::arg("point") = "arbitrary");

    m.def(
        "delta_feasibility",
        [](const py::object& delta, const std::string& constraint) {
            GenusConstraint gc = constraint == "g" || constraint == "general"
                                     ? GenusConstraint::General
                                     : GenusConstraint::VeryGeneral;
            auto res = delta_feasibility(rational_arg(delta), gc);
            py::list violating;
            for (const auto& v : res.violating_m) violating.append(big_int(v));
            return py::make_tuple(res.feasible, violating);
        },
        py::arg("delta"), py::arg("constraint") = "vg");
    m.def(
        "max_feasible_delta",
        [](const std::string& constraint) {
            GenusConstraint gc = constraint == "g" || constraint == "general"
                                     ? GenusConstraint::General
                                     : GenusConstraint::VeryGeneral;
            auto res = max_feasible_delta(gc);
            return py::make_tuple(rational_to_string(res.sup_delta_squared),
                                  big_int(res.critical_m));
        },
        py::arg("constraint") = "vg");

    py::class_<CurveCandidate>(m, "CurveCandidate")
        .def_readonly("alpha", &CurveCandidate::alpha)
        .def_readonly("beta", &CurveCandidate::beta)
        .def_readonly("m", &CurveCandidate::m)
        .def("__repr__", [](const CurveCandidate& c) {
            return "CurveCandidate(alpha=" + std::to_string(c.alpha) +
                   ", beta=" + std::to_string(c.beta) + ", m=" + std::to_string(c.m) + ")";
        });

    py::class_<OracleReport>(m, "OracleReport")
        .def_readonly("lower", &OracleReport::lower)
        .def_readonly("upper", &OracleReport::upper)
        .def_readonly("witnesses", &OracleReport::witnesses)
        .def_readonly("scan_limit", &OracleReport::scan_limit)
        .def_readonly("tail_bound", &OracleReport::tail_bound)
        .def_readonly("mixed_floor", &OracleReport::mixed_floor)
        .def("to_json", [](const OracleReport& r) { return to_json(r).dump(); })
        .def("__repr__", [](const OracleReport& r) {
            return "OracleReport(lower=" + r.lower.to_string() +
                   ", upper=" + r.upper.to_string() + ")";
        });

    m.def(
        "certify_point",
        [](int t, std::int64_t a, std::int64_t b, const py::object& point, int limit) {
            return certify_point(surface_params(t), {a, b}, point_arg(point), limit);
        },
        py::arg("type_id"), py::arg("a"), py::arg("b"), py::arg("point") = "arbitrary",
        py::arg("scan_limit") = 200);

    py::class_<CrossCheckRow>(m, "CrossCheckRow")
        .def_property_readonly("a", [](const CrossCheckRow& r) { return r.l.a; })
        .def_property_readonly("b", [](const CrossCheckRow& r) { return r.l.b; })
        .def_readonly("check", &CrossCheckRow::check)
        .def_property_readonly("point",
                               [](const CrossCheckRow& r) { return to_string(r.point); })
        .def_readonly("estimate", &CrossCheckRow::estimate)
        .def_readonly("report", &CrossCheckRow::report)
        .def_readonly("passed", &CrossCheckRow::pass)
        .def_readonly("detail", &CrossCheckRow::detail)
        .def("to_json", [](const CrossCheckRow& r) { return to_json(r).dump(); });

    m.def(
        "cross_check_region",
        [](int t, int a_max, int b_max, int limit) {
            return cross_check_region(surface_params(t), a_max, b_max, limit);
        },
        py::arg("type_id"), py::arg("a_max"), py::arg("b_max"), py::arg("scan_limit") = 200);

    m.def(
        "pell_fundamental",
        [](std::int64_t d) {
            auto sol = pell_fundamental(Int(d));
            return py::make_tuple(big_int(sol.p), big_int(sol.q));
        },
        py::arg("d"));
    m.def(
        "fsst_lower_bound", [](std::int64_t d) { return fsst_lower_bound(Int(d)); },
        py::arg("d"));
    m.def(
        "exc_membership",
        [](std::int64_t d, std::int64_t p, std::int64_t q, std::int64_t r,
           std::int64_t s) { return ExcSet{Int(d), Int(p), Int(q)}.contains(r, s); },
        py::arg("d"), py::arg("p"), py::arg("q"), py::arg("r"), py::arg("s"));
    m.def(
        "exc_reduced_fraction_count",
        [](std::int64_t d) -> py::object {
            auto count = ExcSet::for_radicand(Int(d)).reduced_fraction_count();
            if (!count) return py::none();
            return big_int(*count);
        },
        py::arg("d"));
    m.def(
        "compare_bounds",
        [](int t, std::int64_t a, std::int64_t b) {
            auto cmp = compare_bounds(surface_params(t), {a, b});
            py::dict out;
            out["our_bound"] = py::cast(cmp.our_bound);
            out["pell_applicable"] = cmp.pell_applicable;
            if (cmp.pell_applicable) {
                out["p"] = big_int(cmp.pell->p);
                out["q"] = big_int(cmp.pell->q);
                out["pell_bound"] = py::cast(*cmp.pell_bound);
                out["which_larger"] = py::cast(*cmp.which_larger);
                if (cmp.exc_reduced_fraction_count)
                    out["exc_reduced_fraction_count"] =
                        big_int(*cmp.exc_reduced_fraction_count);
            }
            return out;
        },
        py::arg("type_id"), py::arg("a"), py::arg("b"));

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
