#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "microres/analytic_oracle.hpp"
#include "microres/intervention.hpp"
#include "microres/report.hpp"
#include "microres/scenario_io.hpp"
#include "microres/sim_engine.hpp"

namespace py = pybind11;
using namespace microres;

namespace {

using Range = std::pair<double, double>;

Range as_pair(const BoundedRange& r) { return {r.lo, r.hi}; }
BoundedRange as_range(const Range& r) { return {r.first, r.second}; }

RatingLevel level_arg(const std::string& name) {
    auto l = rating_from_name(name);
    if (!l) throw DomainError("unknown rating level '" + name + "'");
    return *l;
}

Distribution distribution_arg(const std::string& name) {
    auto d = distribution_from_name(name);
    if (!d) throw DomainError("unknown distribution '" + name + "'");
    return *d;
}

SimConfig make_config(std::uint64_t iterations, std::uint64_t seed, const std::string& aggregation,
                      const std::string& distribution, std::uint32_t bins) {
    SimConfig c;
    c.iterations = iterations;
    c.seed = seed;
    auto a = aggregation_from_name(aggregation);
    if (!a) throw DomainError("unknown aggregation '" + aggregation + "'");
    c.aggregation = *a;
    c.distribution = distribution_arg(distribution);
    c.histogram_bins = bins;
    return c;
}

}  // namespace

PYBIND11_MODULE(_microres, m) {
    m.doc() = "Monte Carlo resilience scoring for microgrid risk registers";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<DocumentError>(m, "DocumentError", base.ptr());
    py::register_exception<PatchError>(m, "PatchError", base.ptr());

    m.def("rating_to_range", [](const std::string& level) { return as_pair(rating_to_range(level_arg(level))); },
          py::arg("level"));
    m.def("parse_rating_label", [](const std::string& label) { return as_pair(parse_rating_label(label)); },
          py::arg("label"));
    m.def("classify_value", [](double x) { return std::string(rating_name(classify_value(x))); }, py::arg("x"));

    m.def("residual_risk", &residual_risk, py::arg("importance"), py::arg("threat"), py::arg("vulnerability"),
          py::arg("impact"));
    m.def("total_resilience", &total_resilience, py::arg("op_risk"), py::arg("infra_risk"));
    m.def("percent_reduction", &percent_reduction, py::arg("base"), py::arg("new"));

    m.def(
        "expected_pair_risk",
        [](double l, Range t, Range v, Range i, const std::string& dist) {
            return oracle::expected_pair_risk(l, {as_range(t), as_range(v), as_range(i)}, distribution_arg(dist));
        },
        py::arg("importance"), py::arg("threat"), py::arg("vulnerability"), py::arg("impact"),
        py::arg("distribution") = "uniform");
    m.def(
        "pair_risk_variance",
        [](double l, Range t, Range v, Range i, const std::string& dist) {
            return oracle::pair_risk_variance(l, {as_range(t), as_range(v), as_range(i)}, distribution_arg(dist));
        },
        py::arg("importance"), py::arg("threat"), py::arg("vulnerability"), py::arg("impact"),
        py::arg("distribution") = "uniform");

    m.def("builtin_new_england", [] { return serialize_scenario(builtin_new_england()); });
    m.def("builtin_patches", [] {
        return std::vector<std::string>{serialize_patch(builtin_underground_distribution()),
                                        serialize_patch(builtin_harden_generation())};
    });

    m.def(
        "validate_scenario",
        [](const std::string& doc, bool lenient) {
            std::vector<std::pair<std::string, std::string>> out;
            try {
                (void)parse_scenario(doc, {lenient});
            } catch (const ValidationError& e) {
                for (const auto& i : e.issues()) out.emplace_back(i.path, i.message);
            }
            return out;
        },
        py::arg("document"), py::arg("lenient") = false);
    m.def("normalize_scenario", [](const std::string& doc) { return serialize_scenario(parse_scenario(doc)); },
          py::arg("document"));

    m.def(
        "run",
        [](const std::string& doc, std::uint64_t iterations, std::uint64_t seed, const std::string& aggregation,
           const std::string& distribution, std::uint32_t bins, unsigned workers) {
            const Scenario s = parse_scenario(doc);
            const SimConfig cfg = make_config(iterations, seed, aggregation, distribution, bins);
            py::gil_scoped_release release;
            return run_report_json(run_scenario(s, cfg, {workers}));
        },
        py::arg("scenario"), py::arg("iterations") = kDefaultIterations, py::arg("seed") = 0,
        py::arg("aggregation") = "threat_mean_of_means", py::arg("distribution") = "uniform",
        py::arg("bins") = kDefaultBins, py::arg("workers") = 0);

    m.def(
        "compare",
        [](const std::string& doc, const std::vector<std::string>& patch_docs, std::uint64_t iterations,
           std::uint64_t seed, const std::string& aggregation, const std::string& distribution, std::uint32_t bins,
           unsigned workers) {
            const Scenario s = parse_scenario(doc);
            std::vector<InterventionPatch> patches;
            for (const auto& p : patch_docs) patches.push_back(parse_patch(p, s));
            const SimConfig cfg = make_config(iterations, seed, aggregation, distribution, bins);
            py::gil_scoped_release release;
            return comparison_json(compare(s, patches, cfg, {workers}));
        },
        py::arg("scenario"), py::arg("patches"), py::arg("iterations") = kDefaultIterations, py::arg("seed") = 0,
        py::arg("aggregation") = "threat_mean_of_means", py::arg("distribution") = "uniform",
        py::arg("bins") = kDefaultBins, py::arg("workers") = 0);
}
