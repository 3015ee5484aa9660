#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "alphabwm/cli.hpp"
#include "alphabwm/errors.hpp"
#include "alphabwm/report.hpp"

namespace py = pybind11;
using namespace alphabwm;

namespace {

// Documents cross the boundary as JSON text; the Python side wraps these.
std::string solve_json(const std::string& doc, std::optional<int> m, std::optional<std::vector<double>> grid,
                       std::uint64_t seed, double tol) {
    GridSpec spec{m, grid};
    spec.build();
    SolverOptions opts;
    opts.seed = seed;
    opts.optimality_tol = tol;
    return run_solve({parse_document(parse_json_text(doc)), spec, opts}).json.dump();
}

std::string consistency_json(const std::string& doc, int grid_points, double threshold) {
    return run_consistency({parse_fpcs(parse_json_text(doc)), grid_points, threshold, {}}).json.dump();
}

Tfn to_tfn(const std::array<double, 3>& v) { return Tfn(v[0], v[1], v[2]); }
std::array<double, 3> from_tfn(const Tfn& t) { return {t.lower(), t.modal(), t.upper()}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Interval fuzzy best-worst weights";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    // Registered after its base so it is matched first.
    py::register_exception<UndefinedIndexError>(m, "UndefinedIndexError", domain.ptr());
    py::register_exception<SolverError>(m, "SolverError", PyExc_RuntimeError);
    py::register_exception<CompositionError>(m, "CompositionError", PyExc_ValueError);

    m.def("solve_json", &solve_json, py::arg("document"), py::arg("m") = std::nullopt, py::arg("grid") = std::nullopt,
          py::arg("seed") = SolverOptions{}.seed, py::arg("tol") = SolverOptions{}.optimality_tol,
          py::call_guard<py::gil_scoped_release>());
    m.def("consistency_json", &consistency_json, py::arg("document"), py::arg("grid_points") = kDefaultGridPoints,
          py::arg("threshold") = kDefaultThreshold, py::call_guard<py::gil_scoped_release>());
    m.def("ci_table_json", [] { return render_ci_table().json.dump(); });
    m.def("scale_json", [] { return scale_json().dump(); });

    m.def("alpha_cut", [](const std::array<double, 3>& t, double alpha) {
        const Interval c = alpha_cut(to_tfn(t), alpha);
        return std::pair{c.lo, c.hi};
    }, py::arg("tfn"), py::arg("alpha"));
    m.def("gmir", [](const std::array<double, 3>& t) { return gmir(to_tfn(t)); }, py::arg("tfn"));
    m.def("exact_quotient_membership", [](const std::array<double, 3>& num, const std::array<double, 3>& den, double x) {
        return exact_quotient_membership(to_tfn(num), to_tfn(den), x);
    }, py::arg("numerator"), py::arg("denominator"), py::arg("x"));
    m.def("approximate_quotient", [](const std::array<double, 3>& num, const std::array<double, 3>& den) {
        return from_tfn(approximate_quotient(to_tfn(num), to_tfn(den)));
    }, py::arg("numerator"), py::arg("denominator"));
    m.def("ci_lower_bound", [](int a_bw) { return ci_lower_bound(LinguisticTerm::from_value(a_bw)); }, py::arg("a_bw"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        std::vector<std::string> argv{"alphabwm"};
        argv.insert(argv.end(), args.begin(), args.end());
        const int code = run_cli(argv, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"));
}
