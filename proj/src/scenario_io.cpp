#include "microres/scenario_io.hpp"

#include "json_reader.hpp"
#include "microres/intervention.hpp"

namespace microres {

using detail::json;
using detail::ObjectReader;

DocumentError::DocumentError(std::string path, const std::string& message, std::size_t line, std::size_t column)
    : Error([&] {
          std::string where = path.empty() ? std::string() : path + ": ";
          if (line != 0) where = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + where;
          return where + message;
      }()),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

Scenario parse_scenario(std::string_view bytes, const ParseOptions& opts) {
    const json doc = detail::parse_json(bytes);
    ObjectReader root(doc, "", opts);
    Scenario s;
    s.name = detail::read_string(root.required("name"), "/name");
    if (const json* d = root.optional("description")) s.description = detail::read_string(*d, "/description");
    const json& threats = detail::read_array(root.required("threats"), "/threats");
    root.finish();

    for (std::size_t ti = 0; ti < threats.size(); ++ti) {
        ObjectReader tr(threats[ti], "/threats/" + std::to_string(ti), opts);
        ThreatSpec t;
        t.name = detail::read_string(tr.required("name"), tr.child("name"));
        t.probability = detail::read_range(tr.required("probability"), tr.child("probability"), opts);
        t.importance = detail::read_number(tr.required("importance"), tr.child("importance"));
        const json& vulns = detail::read_array(tr.required("vulnerabilities"), tr.child("vulnerabilities"));
        tr.finish();
        for (std::size_t vi = 0; vi < vulns.size(); ++vi) {
            t.vulnerabilities.push_back(
                detail::read_vulnerability(vulns[vi], tr.child("vulnerabilities") + "/" + std::to_string(vi), opts));
        }
        s.threats.push_back(std::move(t));
    }

    if (auto issues = validate_scenario(s); !issues.empty()) throw ValidationError(std::move(issues));
    return s;
}

std::string serialize_scenario(const Scenario& s) {
    json threats = json::array();
    for (const ThreatSpec& t : s.threats) {
        json vulns = json::array();
        for (const VulnerabilitySpec& v : t.vulnerabilities) vulns.push_back(detail::vulnerability_to_json(v));
        threats.push_back({
            {"name", t.name},
            {"probability", detail::range_to_json(t.probability)},
            {"importance", t.importance},
            {"vulnerabilities", std::move(vulns)},
        });
    }
    const json doc = {{"name", s.name}, {"description", s.description}, {"threats", std::move(threats)}};
    return doc.dump(2) + "\n";
}

namespace {

PatchOp read_op(const json& j, const std::string& path, const ParseOptions& opts) {
    ObjectReader r(j, path, opts);
    const std::string kind = detail::read_string(r.required("kind"), r.child("kind"));
    auto threat = [&] { return detail::read_string(r.required("threat"), r.child("threat")); };
    auto vuln_name = [&] { return detail::read_string(r.required("vulnerability"), r.child("vulnerability")); };
    auto range = [&] {
        BoundedRange b = detail::read_range(r.required("range"), r.child("range"), opts);
        if (!b.valid()) throw DocumentError(r.child("range"), "range must satisfy 0 <= lo <= hi <= 1");
        return b;
    };
    auto unit_scalar = [&](std::string_view key) {
        const double x = detail::read_number(r.required(key), r.child(key));
        if (!(x >= 0.0 && x <= 1.0)) throw DocumentError(r.child(key), "value must lie in [0, 1]");
        return x;
    };
    auto dimension = [&] { return detail::read_dimension(r.required("dimension"), r.child("dimension")); };

    PatchOp op;
    if (kind == "set_vulnerability_probability") {
        op = ops::SetVulnerabilityProbability{threat(), vuln_name(), range()};
    } else if (kind == "set_impact") {
        op = ops::SetImpact{threat(), vuln_name(), dimension(), range()};
    } else if (kind == "cap_vulnerability_probability") {
        op = ops::CapVulnerabilityProbability{threat(), vuln_name(), unit_scalar("max_hi")};
    } else if (kind == "cap_impact") {
        op = ops::CapImpact{threat(), vuln_name(), dimension(), unit_scalar("max_hi")};
    } else if (kind == "add_vulnerability") {
        std::string t = threat();
        VulnerabilitySpec v = detail::read_vulnerability(r.required("vulnerability"), r.child("vulnerability"), opts);
        op = ops::AddVulnerability{std::move(t), std::move(v)};
    } else if (kind == "remove_vulnerability") {
        op = ops::RemoveVulnerability{threat(), vuln_name()};
    } else if (kind == "set_importance") {
        op = ops::SetImportance{threat(), unit_scalar("importance")};
    } else {
        throw DocumentError(r.child("kind"), "unknown op kind '" + kind + "'");
    }
    r.finish();
    return op;
}

json op_to_json(const PatchOp& op) {
    json j = {{"kind", std::string(op_kind(op))}};
    std::visit(
        [&](const auto& o) {
            using T = std::decay_t<decltype(o)>;
            j["threat"] = o.threat;
            if constexpr (std::is_same_v<T, ops::SetVulnerabilityProbability>) {
                j["vulnerability"] = o.vulnerability;
                j["range"] = detail::range_to_json(o.range);
            } else if constexpr (std::is_same_v<T, ops::SetImpact>) {
                j["vulnerability"] = o.vulnerability;
                j["dimension"] = std::string(dimension_name(o.dimension));
                j["range"] = detail::range_to_json(o.range);
            } else if constexpr (std::is_same_v<T, ops::CapVulnerabilityProbability>) {
                j["vulnerability"] = o.vulnerability;
                j["max_hi"] = o.max_hi;
            } else if constexpr (std::is_same_v<T, ops::CapImpact>) {
                j["vulnerability"] = o.vulnerability;
                j["dimension"] = std::string(dimension_name(o.dimension));
                j["max_hi"] = o.max_hi;
            } else if constexpr (std::is_same_v<T, ops::AddVulnerability>) {
                j["vulnerability"] = detail::vulnerability_to_json(o.vulnerability);
            } else if constexpr (std::is_same_v<T, ops::RemoveVulnerability>) {
                j["vulnerability"] = o.vulnerability;
            } else if constexpr (std::is_same_v<T, ops::SetImportance>) {
                j["importance"] = o.importance;
            }
        },
        op);
    return j;
}

}  // namespace

InterventionPatch parse_patch(std::string_view bytes, const ParseOptions& opts) {
    const json doc = detail::parse_json(bytes);
    ObjectReader root(doc, "", opts);
    InterventionPatch p;
    p.name = detail::read_string(root.required("name"), "/name");
    if (p.name.empty()) throw DocumentError("/name", "patch name must not be empty");
    if (const json* d = root.optional("description")) p.description = detail::read_string(*d, "/description");
    const json& ops = detail::read_array(root.required("ops"), "/ops");
    root.finish();
    for (std::size_t i = 0; i < ops.size(); ++i) p.ops.push_back(read_op(ops[i], "/ops/" + std::to_string(i), opts));
    return p;
}

InterventionPatch parse_patch(std::string_view bytes, const Scenario& target, const ParseOptions& opts) {
    InterventionPatch p = parse_patch(bytes, opts);
    try {
        (void)apply_patch(target, p);
    } catch (const PatchError& e) {
        throw ValidationError({{"/ops/" + std::to_string(e.op_index()) + " (" + e.path() + ")", e.what()}});
    }
    return p;
}

std::string serialize_patch(const InterventionPatch& p) {
    json ops = json::array();
    for (const PatchOp& op : p.ops) ops.push_back(op_to_json(op));
    const json doc = {{"name", p.name}, {"description", p.description}, {"ops", std::move(ops)}};
    return doc.dump(2) + "\n";
}

}  // namespace microres
