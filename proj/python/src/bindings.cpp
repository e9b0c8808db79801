#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "closedgeo/bott.hpp"
#include "closedgeo/errors.hpp"
#include "closedgeo/homology.hpp"
#include "closedgeo/io.hpp"
#include "closedgeo/morse.hpp"
#include "closedgeo/verifier.hpp"

namespace py = pybind11;
using namespace closedgeo;

// Rational <-> fractions.Fraction. Anything with integer numerator and
// denominator attributes (int, Fraction) is accepted, as are "p/q" strings.
namespace pybind11::detail {
template <>
struct type_caster<Rational> {
    PYBIND11_TYPE_CASTER(Rational, const_name("fractions.Fraction"));

    bool load(handle src, bool)
    {
        if (py::isinstance<py::str>(src)) {
            try {
                value = Rational::parse(src.cast<std::string>());
            } catch (const std::invalid_argument&) {
                return false;
            }
            return true;
        }
        if (py::isinstance<py::float_>(src) || py::isinstance<py::bool_>(src))
            return false;
        if (!py::hasattr(src, "numerator") || !py::hasattr(src, "denominator"))
            return false;
        try {
            value = Rational(src.attr("numerator").cast<std::int64_t>(), src.attr("denominator").cast<std::int64_t>());
        } catch (const py::cast_error&) {
            return false;
        }
        return true;
    }

    static handle cast(const Rational& r, return_value_policy, handle)
    {
        const py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(r.num(), r.den()).release();
    }
};
}  // namespace pybind11::detail

namespace {

py::object to_python(const nlohmann::json& doc)
{
    const py::object loads = py::module_::import("json").attr("loads");
    return loads(doc.dump());
}

IndexProfile build_profile(int n, std::vector<std::int64_t> arcs, std::vector<Rational> phases,
                           std::vector<std::int64_t> nullities,
                           std::optional<std::vector<std::pair<std::int64_t, std::int64_t>>> splitting)
{
    std::optional<std::vector<SplittingPair>> s;
    if (splitting) {
        s.emplace();
        for (const auto& [plus, minus] : *splitting)
            s->push_back({plus, minus});
    }
    return make_profile(n, std::move(arcs), std::move(phases), std::move(nullities), std::move(s));
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact Bott iteration, loop-space Betti numbers and the single-geodesic verifier";

    py::register_exception<PhaseCollision>(m, "PhaseCollision", PyExc_ArithmeticError);

    py::class_<IndexProfile>(m, "IndexProfile")
        .def(py::init(&build_profile), py::arg("n"), py::arg("I"), py::arg("t"), py::arg("N"),
             py::arg("S") = py::none())
        .def_static("from_json", [](const std::string& doc) { return io::parse_profile(doc); })
        .def("to_json", [](const IndexProfile& p) { return io::profile_to_json(p).dump(); })
        .def_readonly("n", &IndexProfile::n)
        .def_readonly("I", &IndexProfile::arc_values)
        .def_readonly("t", &IndexProfile::phases)
        .def_readonly("N", &IndexProfile::nullities)
        .def("__eq__", [](const IndexProfile& a, const IndexProfile& b) { return a == b; })
        .def("__repr__", [](const IndexProfile& p) { return "IndexProfile(" + io::profile_to_json(p).dump() + ")"; });

    m.def("validate_profile", [](const IndexProfile& p) {
        std::vector<std::string> out;
        for (const auto& v : validate_profile(p))
            out.push_back(v.message);
        return out;
    });

    m.def("evaluate_index_function", &evaluate_index_function, py::arg("p"), py::arg("t"));
    m.def("iterate_index", &bott_index, py::arg("p"), py::arg("m"));
    m.def("index_sequence", &index_sequence, py::arg("p"), py::arg("max_m"));
    m.def("average_index", &average_index, py::arg("p"));
    m.def("gamma_invariant", [](const IndexProfile& p) { return gamma_invariant(p).value(); }, py::arg("p"));
    m.def(
        "gap_decomposition",
        [](const IndexProfile& p, std::int64_t mm) {
            const auto g = gap_decomposition(p, mm);
            py::dict d;
            d["A"] = g.a;
            d["B"] = g.b;
            d["J"] = g.j_set;
            return d;
        },
        py::arg("p"), py::arg("m"));
    m.def("jump_search", &jump_search, py::arg("p"), py::arg("horizon"));

    m.def("betti_number", &betti_number, py::arg("n"), py::arg("k"));
    m.def("poincare_coefficients", [](int n, int k) { return poincare_coefficients(n, k).ranks; }, py::arg("n"),
          py::arg("max_degree"));
    m.def("average_euler_number", &average_euler_number, py::arg("n"));

    m.def("critical_group_dim", &critical_group_dim, py::arg("p"), py::arg("m"), py::arg("k"));
    m.def("aggregate_w", &aggregate_w, py::arg("p"), py::arg("max_degree"));
    m.def(
        "morse_q_recursion",
        [](const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& b) {
            return to_python(io::morse_to_json(morse_q_recursion(w, b)));
        },
        py::arg("w"), py::arg("b"));

    m.def(
        "extremal_profile", [](int n, const std::vector<Rational>& t) { return extremal_profile(n, t); }, py::arg("n"),
        py::arg("t"));
    m.def(
        "check_prop33", [](const IndexProfile& p) { return to_python(io::prop33_to_json(check_prop33(p))); },
        py::arg("p"));
    m.def(
        "single_geodesic_pipeline",
        [](int n, const IndexProfile& p, std::int64_t horizon) {
            return to_python(io::outcome_to_json(single_geodesic_pipeline(n, p, horizon)));
        },
        py::arg("n"), py::arg("p"), py::arg("horizon"));
    m.def(
        "enumerate_signatures",
        [](int n) {
            std::vector<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
            for (const auto& s : enumerate_signatures(n))
                out.emplace_back(s.arc_values, s.nullities);
            return out;
        },
        py::arg("n"));
    m.def(
        "verify_theorem",
        [](int n, std::int64_t horizon, std::int64_t q, unsigned threads) {
            TheoremSummary s;
            {
                py::gil_scoped_release release;
                s = verify_theorem(n, horizon, q, threads);
            }
            return to_python(io::summary_to_json(s));
        },
        py::arg("n"), py::arg("horizon"), py::arg("q"), py::arg("threads") = 1);
}
