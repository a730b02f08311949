#include "p1146/bundle.hpp"
#include "p1146/ratmap.hpp"
#include "p1146/report.hpp"
#include "p1146/wps.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace p1146;

namespace {

py::object to_fraction(const Scalar& s)
{
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(s.get_str());
}

// Accepts int, Fraction or a decimal string such as "3/2".
Scalar from_python(const py::handle& value)
{
    return parse_scalar(py::str(value).cast<std::string>());
}

py::list monomials_to_list(const std::vector<Monomial>& ms)
{
    py::list out;
    for (const auto& m : ms) out.append(py::tuple(py::cast(m)));
    return out;
}

py::dict record_to_dict(const CheckRecord& r)
{
    py::dict d;
    d["check_id"] = r.check_id;
    d["description"] = r.description;
    d["paper_ref"] = r.paper_ref;
    d["status"] = std::string(to_string(r.status));
    d["computed"] = r.computed;
    d["expected"] = r.expected;
    d["elapsed"] = r.elapsed.count();
    return d;
}

} // namespace

PYBIND11_MODULE(p1146, m)
{
    m.doc() = "Exact verification toolkit for P(1,1,4,6) and the degree-72 Fano threefold";

    py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));
    py::register_exception<DivisibilityError>(m, "DivisibilityError", m.attr("Error"));
    py::register_exception<GradingError>(m, "GradingError", m.attr("Error"));
    py::register_exception<ConfigError>(m, "ConfigError", m.attr("Error"));

    py::class_<Polynomial>(m, "Polynomial")
        .def_static(
            "parse",
            [](const std::string& text, std::vector<std::string> variables) {
                return Polynomial::parse(make_ring(std::move(variables)), text);
            },
            py::arg("text"), py::arg("variables") = std::vector<std::string>{"x1", "x2", "x3", "x4"})
        .def_property_readonly("variables", [](const Polynomial& p) { return p.ring()->names(); })
        .def_property_readonly("degree", &Polynomial::degree)
        .def("is_zero", &Polynomial::is_zero)
        .def("terms",
             [](const Polynomial& p) {
                 py::list out;
                 for (const auto& [mono, c] : p.terms()) out.append(py::make_tuple(py::tuple(py::cast(mono)), to_fraction(c)));
                 return out;
             })
        .def("__add__", [](const Polynomial& a, const Polynomial& b) { return a + b; })
        .def("__sub__", [](const Polynomial& a, const Polynomial& b) { return a - b; })
        .def("__mul__", [](const Polynomial& a, const Polynomial& b) { return a * b; })
        .def("__neg__", [](const Polynomial& a) { return -a; })
        .def("__pow__", [](const Polynomial& a, unsigned k) { return pow(a, k); })
        .def("__eq__", [](const Polynomial& a, const Polynomial& b) { return a == b; })
        .def("__str__", &Polynomial::to_string)
        .def("__repr__", [](const Polynomial& p) { return "Polynomial('" + p.to_string() + "')"; });

    m.def(
        "substitute",
        [](const Polynomial& f, const std::map<std::string, Polynomial>& images) {
            if (images.empty()) throw SubstitutionError("substitute needs at least one image");
            return substitute(f, images, images.begin()->second.ring());
        },
        py::arg("f"), py::arg("images"));
    m.def("exact_divide", &exact_divide, py::arg("f"), py::arg("g"));

    // grading / wps
    m.def(
        "hilbert_count",
        [](std::vector<std::uint32_t> w, std::uint64_t d) { return hilbert_count(WeightSystem(std::move(w)), d); },
        py::arg("weights"), py::arg("degree"));
    m.def(
        "enumerate_monomials",
        [](std::vector<std::uint32_t> w, std::uint64_t d) {
            return monomials_to_list(enumerate_monomials(WeightSystem(std::move(w)), d));
        },
        py::arg("weights"), py::arg("degree"));
    m.def(
        "anticanonical_weight",
        [](std::vector<std::uint32_t> w) { return anticanonical_weight(WeightedProjectiveSpace(WeightSystem(std::move(w)))); },
        py::arg("weights"));
    m.def(
        "anticanonical_selfintersection",
        [](std::vector<std::uint32_t> w) {
            return to_fraction(anticanonical_selfintersection(WeightedProjectiveSpace(WeightSystem(std::move(w)))));
        },
        py::arg("weights"));
    m.def(
        "anticanonical_basis",
        [](std::vector<std::uint32_t> w) {
            return monomials_to_list(anticanonical_basis(WeightedProjectiveSpace(WeightSystem(std::move(w)))));
        },
        py::arg("weights"));

    // bundle_geom
    m.def("h0", [](std::vector<std::int64_t> twists) { return h0(SplitBundle(std::move(twists))); }, py::arg("twists"));
    m.def(
        "sym_power", [](std::vector<std::int64_t> twists, unsigned k) { return sym_power(SplitBundle(std::move(twists)), k).twists(); },
        py::arg("twists"), py::arg("m"));
    m.def(
        "system_dim",
        [](std::vector<std::int64_t> twists, std::uint32_t a, std::int64_t b) {
            return system_dim(SplitBundle(std::move(twists)), {a, b});
        },
        py::arg("twists"), py::arg("a"), py::arg("b"));
    m.def(
        "intersect",
        [](std::uint32_t e, std::pair<std::int64_t, std::int64_t> c1, std::pair<std::int64_t, std::int64_t> c2) {
            return intersect({e, c1.first, c1.second}, {e, c2.first, c2.second});
        },
        py::arg("e"), py::arg("c1"), py::arg("c2"), "Intersection of a1*E + b1*F with a2*E + b2*F on F_e.");

    // linsys
    py::class_<PencilCubic>(m, "PencilCubic")
        .def_static("standard", &PencilCubic::standard)
        .def_static("parse", &PencilCubic::parse, py::arg("text"))
        .def_static(
            "from_roots",
            [](const py::sequence& roots, const py::object& leading) {
                if (py::len(roots) != 3) throw DomainError("a pencil cubic has three roots");
                return PencilCubic::from_roots({from_python(roots[0]), from_python(roots[1]), from_python(roots[2])},
                                               from_python(leading));
            },
            py::arg("roots"), py::arg("leading") = 1)
        .def_property_readonly("form", &PencilCubic::form)
        .def_property_readonly("roots", [](const PencilCubic& c) {
            py::list out;
            for (const auto& r : c.roots()) out.append(to_fraction(r));
            return out;
        });

    py::class_<LinearSystem>(m, "LinearSystem")
        .def_property_readonly("degree", &LinearSystem::degree)
        .def_property_readonly("generators", &LinearSystem::generators)
        .def("__len__", &LinearSystem::size)
        .def("projective_dim", [](const LinearSystem& s) { return projective_dim(s); })
        .def("contains", [](const LinearSystem& s, const Polynomial& f) { return member(f, s); });

    m.def("build_system_S", &build_system_S, py::arg("xi"));
    m.def("build_system_T", &build_system_T, py::arg("xi"));
    m.def("spans_equal", &spans_equal);
    m.def("multiplicity_along_r", &multiplicity_along_r, py::arg("f"));
    m.def("restrict_pencil", &restrict_pencil, py::arg("f"));
    m.def(
        "solve_constraints_sprime", [](const PencilCubic& xi) { return solve_constraints_sprime(xi).system; },
        py::arg("xi"));

    // ratmap
    py::class_<GradedRationalMap>(m, "GradedRationalMap")
        .def_property_readonly("components", &GradedRationalMap::components)
        .def_property_readonly("target_weights", [](const GradedRationalMap& g) {
            auto w = g.target_weights().weights();
            return std::vector<std::uint32_t>(w.begin(), w.end());
        });
    m.def("make_eta", py::overload_cast<const PencilCubic&>(&make_eta), py::arg("xi"));
    m.def(
        "pullback",
        [](const GradedRationalMap& map, const std::string& g) {
            return pullback(map, Polynomial::parse(map.target_ring(), g));
        },
        py::arg("map"), py::arg("g"), "Pull back a form written in y1..yn.");
    m.def(
        "theorem_check",
        [](const PencilCubic& xi) {
            auto rep = theorem_check(xi);
            py::dict d;
            d["pass"] = rep.pass;
            d["basis_size"] = rep.basis_size;
            d["rank_pullback"] = rep.spans.rank_left;
            d["rank_T"] = rep.spans.rank_right;
            d["rank_union"] = rep.spans.rank_union;
            d["summary"] = rep.summary();
            return d;
        },
        py::arg("xi"));

    // verify
    m.def(
        "run_all",
        [](std::optional<std::string> xi, std::vector<std::string> suites, std::uint64_t seed) {
            VerifyConfig cfg;
            cfg.xi = std::move(xi);
            cfg.seed = seed;
            for (const auto& s : suites) {
                auto parsed = parse_suite(s);
                if (!parsed) throw ConfigError("unknown suite '" + s + "'");
                cfg.suites.push_back(*parsed);
            }
            std::vector<CheckRecord> records;
            {
                py::gil_scoped_release release;
                records = run_all(cfg);
            }
            py::list out;
            for (const auto& r : records) out.append(record_to_dict(r));
            return out;
        },
        py::arg("xi") = py::none(), py::arg("suites") = std::vector<std::string>{}, py::arg("seed") = 72);
}
