#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mengoli/digamma.hpp"
#include "mengoli/limits.hpp"
#include "mengoli/multifactor.hpp"
#include "mengoli/oracle.hpp"
#include "mengoli/pairsum.hpp"

namespace py = pybind11;
using namespace mengoli;

namespace {

std::vector<Rational> parse_all(const std::vector<std::string>& shifts) {
    std::vector<Rational> out;
    out.reserve(shifts.size());
    for (const auto& s : shifts) out.push_back(Rational::parse(s));
    return out;
}

py::dict report(const TruncationReport& r) {
    py::dict d;
    d["partial"] = r.partial.str();
    d["low"] = r.low().str(40);
    d["high"] = r.high().str(40);
    d["N"] = r.terms_used;
    return d;
}

py::dict bounded(const Bounded& b) {
    py::dict d;
    d["value"] = b.value.str();
    d["error_bound"] = static_cast<double>(b.error);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Closed-form sums of 1/prod(n + q_i) over rational shifts";
    m.attr("DEFAULT_PRECISION") = kDefaultPrecisionBits;

    py::class_<EvalResult>(m, "EvalResult")
        .def_property_readonly("value", [](const EvalResult& r) { return r.value.str(); })
        .def("__float__", [](const EvalResult& r) { return r.value.to_double(); })
        .def_property_readonly("method", [](const EvalResult& r) { return std::string(method_name(r.method)); })
        .def_property_readonly("error_bound", [](const EvalResult& r) { return static_cast<double>(r.error_bound); })
        .def_property_readonly("precision",
                               [](const EvalResult& r) { return r.value.precision_bits(); })
        .def_property_readonly("exact",
                               [](const EvalResult& r) -> std::optional<std::string> {
                                   if (!r.exact) return std::nullopt;
                                   return r.exact->str();
                               })
        .def("__repr__", [](const EvalResult& r) {
            std::ostringstream os;
            os << "EvalResult(value=" << r.value.str(20) << ", method=" << method_name(r.method) << ")";
            return os.str();
        });

    m.def(
        "pair_sum",
        [](const std::string& q1, const std::string& q2, unsigned precision) {
            return pair_sum(Rational::parse(q1), Rational::parse(q2), precision);
        },
        py::arg("q1"), py::arg("q2"), py::arg("precision") = kDefaultPrecisionBits,
        "sum_{n>=1} 1/((n+q1)(n+q2)) for shifts given as 'p/q' strings");

    m.def(
        "pair_sum_digamma",
        [](const std::string& q1, const std::string& q2, unsigned precision) {
            return pair_sum_digamma(Rational::parse(q1), Rational::parse(q2), precision);
        },
        py::arg("q1"), py::arg("q2"), py::arg("precision") = kDefaultPrecisionBits);

    m.def(
        "pair_sum_int", [](std::int64_t a, std::int64_t b) { return pair_sum_int(a, b).str(); }, py::arg("a"),
        py::arg("b"), "Exact value as a 'p/q' string");

    m.def(
        "multi_sum",
        [](const std::vector<std::string>& shifts, unsigned precision) {
            return multi_sum(ProductSeriesSpec(parse_all(shifts), precision));
        },
        py::arg("shifts"), py::arg("precision") = kDefaultPrecisionBits);

    m.def("zeta4_closed_form", &zeta4_closed_form, py::arg("w"), py::arg("precision") = kDefaultPrecisionBits);

    m.def(
        "gauss_sum", [](std::int64_t p, std::int64_t q, unsigned precision) { return bounded(gauss_sum(p, q, precision)); },
        py::arg("p"), py::arg("q"), py::arg("precision") = kDefaultPrecisionBits);
    m.def(
        "gauss_sum_shifted",
        [](std::int64_t p, std::int64_t q, unsigned precision) { return bounded(gauss_sum_shifted(p, q, precision)); },
        py::arg("p"), py::arg("q"), py::arg("precision") = kDefaultPrecisionBits);

    m.def(
        "zeta_limit",
        [](int s, const std::vector<std::int64_t>& grid, int order, unsigned precision) {
            const ZetaKind kind = zeta_kind_from_s(s);
            const int levels = order < 0 ? static_cast<int>(grid.size()) - 1 : order;
            const LimitEstimate e = estimate_zeta_limit(kind, grid, levels, precision);
            py::dict d;
            py::list terms;
            for (const auto& [w, v] : e.raw_terms) terms.append(py::make_tuple(w, v.str()));
            d["terms"] = terms;
            d["extrapolated"] = e.extrapolated.str();
            d["target"] = std::string(zeta_target_name(kind));
            d["target_value"] = e.target_hint->str();
            d["order_estimate"] = e.order_estimate;
            d["saturated"] = e.saturated;
            return d;
        },
        py::arg("s"), py::arg("grid") = std::vector<std::int64_t>{16, 32, 64, 128}, py::arg("order") = -1,
        py::arg("precision") = kDefaultPrecisionBits);

    m.def(
        "truncated_sum",
        [](const std::vector<std::string>& shifts, std::int64_t terms) {
            return report(truncated_sum(ProductSeriesSpec(parse_all(shifts)), terms));
        },
        py::arg("shifts"), py::arg("N"));

    m.def(
        "verify",
        [](const std::vector<std::string>& shifts, std::int64_t terms, double perturb) {
            const ProductSeriesSpec spec(parse_all(shifts));
            EvalResult r = multi_sum(spec);
            if (perturb != 0.0) r.value += Real::from_long_double(perturb, r.value.precision_bits());
            const VerificationVerdict v = verify(spec, r, terms);
            py::dict d;
            d["pass"] = v.pass;
            d["separation"] = v.separation.str(6);
            d["oracle"] = report(v.oracle);
            return d;
        },
        py::arg("shifts"), py::arg("N") = 1'000'000, py::arg("perturb") = 0.0);
}
