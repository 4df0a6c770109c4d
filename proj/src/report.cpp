#include "microres/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json_reader.hpp"

namespace microres {

using detail::json;
using detail::ObjectReader;

namespace {

json histogram_to_json(const Histogram& h) { return {{"edges", h.edges}, {"counts", h.counts}}; }

json summary_fields(const SampleSummary& s) {
    return {{"mean", s.mean}, {"std", s.std}, {"min", s.min}, {"max", s.max},
            {"histogram", histogram_to_json(s.histogram)}};
}

json config_to_json(const SimConfig& c) {
    return {
        {"iterations", c.iterations},
        {"seed", c.seed},
        {"distribution", std::string(distribution_name(c.distribution))},
        {"aggregation", std::string(aggregation_name(c.aggregation))},
        {"histogram_bins", c.histogram_bins},
    };
}

json dimension_to_json(const DimensionResult& d) {
    json j = summary_fields(d.aggregate);
    j["dimension"] = std::string(dimension_name(d.dimension));
    json threats = json::array();
    for (const auto& t : d.threats) threats.push_back({{"threat", t.threat}, {"mean", t.mean}});
    j["threats"] = std::move(threats);
    return j;
}

json report_to_json(const RunReport& r) {
    json pairs = json::array();
    for (const auto& p : r.pairs) {
        pairs.push_back({{"threat", p.threat},
                         {"vulnerability", p.vulnerability},
                         {"dimension", std::string(dimension_name(p.dimension))},
                         {"mean", p.mean},
                         {"std", p.std}});
    }
    return {
        {"scenario", r.scenario},
        {"config", config_to_json(r.config)},
        {"operational", dimension_to_json(r.operational)},
        {"infrastructural", dimension_to_json(r.infrastructural)},
        {"resilience", summary_fields(r.resilience)},
        {"pairs", std::move(pairs)},
    };
}

const ParseOptions kStrict{};

Histogram read_histogram(const json& j, const std::string& path) {
    ObjectReader r(j, path, kStrict);
    Histogram h;
    const json& edges = detail::read_array(r.required("edges"), r.child("edges"));
    const json& counts = detail::read_array(r.required("counts"), r.child("counts"));
    r.finish();
    for (std::size_t i = 0; i < edges.size(); ++i) h.edges.push_back(detail::read_number(edges[i], r.child("edges")));
    for (std::size_t i = 0; i < counts.size(); ++i) {
        h.counts.push_back(detail::read_unsigned(counts[i], r.child("counts")));
    }
    if (h.edges.size() != h.counts.size() + 1) throw DocumentError(path, "histogram needs one more edge than bins");
    return h;
}

void read_summary(ObjectReader& r, SampleSummary& s) {
    s.mean = detail::read_number(r.required("mean"), r.child("mean"));
    s.std = detail::read_number(r.required("std"), r.child("std"));
    s.min = detail::read_number(r.required("min"), r.child("min"));
    s.max = detail::read_number(r.required("max"), r.child("max"));
    s.histogram = read_histogram(r.required("histogram"), r.child("histogram"));
}

DimensionResult read_dimension_result(const json& j, const std::string& path) {
    ObjectReader r(j, path, kStrict);
    DimensionResult d;
    d.dimension = detail::read_dimension(r.required("dimension"), r.child("dimension"));
    read_summary(r, d.aggregate);
    const json& threats = detail::read_array(r.required("threats"), r.child("threats"));
    r.finish();
    for (std::size_t i = 0; i < threats.size(); ++i) {
        ObjectReader t(threats[i], r.child("threats") + "/" + std::to_string(i), kStrict);
        ThreatRisk tr;
        tr.threat = detail::read_string(t.required("threat"), t.child("threat"));
        tr.mean = detail::read_number(t.required("mean"), t.child("mean"));
        t.finish();
        d.threats.push_back(std::move(tr));
    }
    return d;
}

SimConfig read_config(const json& j, const std::string& path) {
    ObjectReader r(j, path, kStrict);
    SimConfig c;
    c.iterations = detail::read_unsigned(r.required("iterations"), r.child("iterations"));
    c.seed = detail::read_unsigned(r.required("seed"), r.child("seed"));
    const std::string dist = detail::read_string(r.required("distribution"), r.child("distribution"));
    const std::string agg = detail::read_string(r.required("aggregation"), r.child("aggregation"));
    c.histogram_bins = static_cast<std::uint32_t>(
        detail::read_unsigned(r.required("histogram_bins"), r.child("histogram_bins")));
    r.finish();
    auto d = distribution_from_name(dist);
    auto a = aggregation_from_name(agg);
    if (!d) throw DocumentError(r.child("distribution"), "unknown distribution '" + dist + "'");
    if (!a) throw DocumentError(r.child("aggregation"), "unknown aggregation '" + agg + "'");
    c.distribution = *d;
    c.aggregation = *a;
    return c;
}

json deltas_to_json(const Deltas& d) {
    auto opt = [](const std::optional<double>& x) { return x ? json(*x) : json(nullptr); };
    return {{"op_risk_abs", d.op_risk_abs},       {"op_risk_pct", opt(d.op_risk_pct)},
            {"infra_risk_abs", d.infra_risk_abs}, {"infra_risk_pct", opt(d.infra_risk_pct)},
            {"resilience_abs", d.resilience_abs}};
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string pct_text(const std::optional<double>& p) {
    if (!p) return "n/a";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", *p);
    return buf;
}

}  // namespace

std::string format_shortest(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string format_sig4(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", x);
    return buf;
}

std::string run_report_json(const RunReport& r) { return report_to_json(r).dump(2) + "\n"; }

RunReport parse_run_report(std::string_view bytes) {
    const json doc = detail::parse_json(bytes);
    ObjectReader r(doc, "", kStrict);
    RunReport out;
    out.scenario = detail::read_string(r.required("scenario"), "/scenario");
    out.config = read_config(r.required("config"), "/config");
    out.operational = read_dimension_result(r.required("operational"), "/operational");
    out.infrastructural = read_dimension_result(r.required("infrastructural"), "/infrastructural");
    {
        ObjectReader res(r.required("resilience"), "/resilience", kStrict);
        read_summary(res, out.resilience);
        res.finish();
    }
    const json& pairs = detail::read_array(r.required("pairs"), "/pairs");
    r.finish();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        ObjectReader p(pairs[i], "/pairs/" + std::to_string(i), kStrict);
        PairRisk pr;
        pr.threat = detail::read_string(p.required("threat"), p.child("threat"));
        pr.vulnerability = detail::read_string(p.required("vulnerability"), p.child("vulnerability"));
        pr.dimension = detail::read_dimension(p.required("dimension"), p.child("dimension"));
        pr.mean = detail::read_number(p.required("mean"), p.child("mean"));
        pr.std = detail::read_number(p.required("std"), p.child("std"));
        p.finish();
        out.pairs.push_back(std::move(pr));
    }
    return out;
}

std::string comparison_json(const ComparisonReport& c) {
    json patches = json::array();
    for (const auto& p : c.patches) {
        patches.push_back({{"name", p.name}, {"report", report_to_json(p.report)}, {"deltas", deltas_to_json(p.deltas)}});
    }
    const json doc = {{"baseline", report_to_json(c.baseline)}, {"patches", std::move(patches)}, {"ranking", c.ranking}};
    return doc.dump(2) + "\n";
}

std::string render_run_text(const RunReport& r) {
    std::ostringstream os;
    os << "scenario     " << r.scenario << "\n"
       << "iterations   " << r.config.iterations << "  seed " << r.config.seed << "  distribution "
       << distribution_name(r.config.distribution) << "  aggregation " << aggregation_name(r.config.aggregation)
       << "\n\n";
    os << pad("", 17) << pad("mean", 11) << pad("std", 11) << pad("min", 11) << pad("max", 11)
       << pad("cbrt(mean)", 12) << "class\n";
    for (Dimension d : kAllDimensions) {
        const SampleSummary& a = r.dimension(d).aggregate;
        const double root = std::cbrt(a.mean);
        std::string cls = "-";
        if (root >= 0.0 && root <= 1.0) cls = std::string(rating_name(classify_value(root)));
        os << pad(std::string(dimension_name(d)), 17) << pad(format_sig4(a.mean), 11) << pad(format_sig4(a.std), 11)
           << pad(format_sig4(a.min), 11) << pad(format_sig4(a.max), 11) << pad(format_sig4(root), 12) << cls << "\n";
    }
    const SampleSummary& res = r.resilience;
    os << pad("resilience", 17) << pad(format_sig4(res.mean), 11) << pad(format_sig4(res.std), 11)
       << pad(format_sig4(res.min), 11) << format_sig4(res.max) << "\n";
    return os.str();
}

std::string render_comparison_text(const ComparisonReport& c) {
    std::ostringstream os;
    const RunReport& b = c.baseline;
    os << "scenario     " << b.scenario << "\n"
       << "iterations   " << b.config.iterations << "  seed " << b.config.seed << "\n\n";
    os << pad("", 26) << pad("op risk", 11) << pad("op red.", 10) << pad("infra risk", 12) << pad("infra red.", 12)
       << pad("resilience", 12) << "change\n";
    os << pad("baseline", 26) << pad(format_sig4(b.operational.aggregate.mean), 11) << pad("", 10)
       << pad(format_sig4(b.infrastructural.aggregate.mean), 12) << pad("", 12)
       << format_sig4(b.resilience.mean) << "\n";
    for (const auto& p : c.patches) {
        const RunReport& r = p.report;
        char change[32];
        std::snprintf(change, sizeof change, "%+.4g", p.deltas.resilience_abs);
        os << pad(p.name, 26) << pad(format_sig4(r.operational.aggregate.mean), 11) << pad(pct_text(p.deltas.op_risk_pct), 10)
           << pad(format_sig4(r.infrastructural.aggregate.mean), 12) << pad(pct_text(p.deltas.infra_risk_pct), 12)
           << pad(format_sig4(r.resilience.mean), 12) << change << "\n";
    }
    if (!c.ranking.empty()) {
        os << "\nranking\n";
        for (std::size_t i = 0; i < c.ranking.size(); ++i) os << "  " << (i + 1) << ". " << c.ranking[i] << "\n";
    }
    return os.str();
}

std::string histogram_csv(const Histogram& h) {
    std::string out = "bin_lo,bin_hi,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
        out += format_shortest(h.edges[b]) + "," + format_shortest(h.edges[b + 1]) + "," + std::to_string(h.counts[b]) + "\n";
    }
    return out;
}

SimConfig apply_config_overrides(std::string_view json_object, SimConfig base,
                                 std::initializer_list<std::string_view> extra_keys) {
    const json doc = json_object.empty() ? json::object() : detail::parse_json(json_object);
    ObjectReader r(doc, "", kStrict);
    for (std::string_view k : extra_keys) (void)r.optional(k);
    if (const json* v = r.optional("iterations")) {
        base.iterations = detail::read_unsigned(*v, "/iterations");
        if (base.iterations == 0) throw DocumentError("/iterations", "iterations must be at least 1");
    }
    if (const json* v = r.optional("seed")) base.seed = detail::read_unsigned(*v, "/seed");
    if (const json* v = r.optional("bins")) {
        const std::uint64_t bins = detail::read_unsigned(*v, "/bins");
        if (bins == 0 || bins > 100000) throw DocumentError("/bins", "bins must be in [1, 100000]");
        base.histogram_bins = static_cast<std::uint32_t>(bins);
    }
    if (const json* v = r.optional("aggregation")) {
        const std::string name = detail::read_string(*v, "/aggregation");
        auto a = aggregation_from_name(name);
        if (!a) throw DocumentError("/aggregation", "unknown aggregation '" + name + "'");
        base.aggregation = *a;
    }
    if (const json* v = r.optional("distribution")) {
        const std::string name = detail::read_string(*v, "/distribution");
        auto d = distribution_from_name(name);
        if (!d) throw DocumentError("/distribution", "unknown distribution '" + name + "'");
        base.distribution = *d;
    }
    r.finish();
    return base;
}

}  // namespace microres
