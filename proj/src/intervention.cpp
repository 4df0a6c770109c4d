#include "microres/intervention.hpp"

#include <algorithm>
#include <numeric>

namespace microres {

PatchError::PatchError(std::size_t op_index, std::string path, const std::string& message)
    : Error("patch op " + std::to_string(op_index) + " (" + path + "): " + message),
      op_index_(op_index),
      path_(std::move(path)) {}

std::string_view op_kind(const PatchOp& op) noexcept {
    constexpr std::string_view kinds[] = {
        "set_vulnerability_probability", "set_impact", "cap_vulnerability_probability", "cap_impact",
        "add_vulnerability", "remove_vulnerability", "set_importance",
    };
    return kinds[op.index()];
}

namespace {

void cap(BoundedRange& r, double max_hi) {
    r.hi = std::min(r.hi, max_hi);
    r.lo = std::min(r.lo, r.hi);
}

class Applier {
public:
    Applier(Scenario& s, std::size_t index) : s_(s), index_(index) {}

    ThreatSpec& threat(const std::string& name) {
        ThreatSpec* t = s_.find_threat(name);
        if (t == nullptr) throw PatchError(index_, name, "unknown threat '" + name + "'");
        return *t;
    }

    VulnerabilitySpec& vulnerability(const std::string& threat_name, const std::string& name) {
        VulnerabilitySpec* v = threat(threat_name).find_vulnerability(name);
        if (v == nullptr) {
            throw PatchError(index_, threat_name + "/" + name,
                             "threat '" + threat_name + "' has no vulnerability '" + name + "'");
        }
        return *v;
    }

    void operator()(const ops::SetVulnerabilityProbability& o) { vulnerability(o.threat, o.vulnerability).probability = o.range; }
    void operator()(const ops::SetImpact& o) { vulnerability(o.threat, o.vulnerability).impact(o.dimension) = o.range; }
    void operator()(const ops::CapVulnerabilityProbability& o) { cap(vulnerability(o.threat, o.vulnerability).probability, o.max_hi); }
    void operator()(const ops::CapImpact& o) { cap(vulnerability(o.threat, o.vulnerability).impact(o.dimension), o.max_hi); }
    void operator()(const ops::SetImportance& o) { threat(o.threat).importance = o.importance; }

    void operator()(const ops::AddVulnerability& o) {
        ThreatSpec& t = threat(o.threat);
        if (t.find_vulnerability(o.vulnerability.name) != nullptr) {
            throw PatchError(index_, o.threat + "/" + o.vulnerability.name,
                             "threat '" + o.threat + "' already has vulnerability '" + o.vulnerability.name + "'");
        }
        t.vulnerabilities.push_back(o.vulnerability);
    }

    void operator()(const ops::RemoveVulnerability& o) {
        ThreatSpec& t = threat(o.threat);
        const VulnerabilitySpec* v = &vulnerability(o.threat, o.vulnerability);
        t.vulnerabilities.erase(t.vulnerabilities.begin() + (v - t.vulnerabilities.data()));
    }

private:
    Scenario& s_;
    std::size_t index_;
};

}  // namespace

Scenario apply_patch(const Scenario& s, const InterventionPatch& p) {
    Scenario out = s;
    for (std::size_t i = 0; i < p.ops.size(); ++i) std::visit(Applier{out, i}, p.ops[i]);
    if (auto issues = validate_scenario(out); !issues.empty()) throw ValidationError(std::move(issues));
    return out;
}

InterventionPatch builtin_underground_distribution() {
    const BoundedRange negligible = rating_to_range(RatingLevel::Negligible);
    InterventionPatch p;
    p.name = "underground_distribution";
    p.description =
        "Move all distribution lines underground. Distribution damage from hurricanes, severe winter storms, "
        "severe thunderstorms and high winds drops to Negligible probability; terrorism distribution damage "
        "is capped at Low; flooding gains a distribution damage vulnerability whose ranges mirror its "
        "generator and storage rows. The earthquake distribution row is left unchanged.";
    p.ops = {
        ops::SetVulnerabilityProbability{"Hurricane", "High Winds Damage Distribution", negligible},
        ops::SetVulnerabilityProbability{"Severe Winter Storm", "Snow, Ice, and Wind Damages Distribution", negligible},
        ops::SetVulnerabilityProbability{"Severe Thunderstorm", "High Winds and Rain Damage Distribution", negligible},
        ops::SetVulnerabilityProbability{"High Wind", "Infrastructure Damage to Distribution", negligible},
        ops::CapVulnerabilityProbability{"Terrorism / Sabotage / Physical Failure", "Distribution Damage",
                                         rating_to_range(RatingLevel::Low).hi},
        ops::AddVulnerability{"Flooding",
                              {"Infrastructure Damage to Distribution", {0.01, 0.5}, {0.0, 0.7}, {0.0, 0.7}}},
    };
    return p;
}

InterventionPatch builtin_harden_generation() {
    const BoundedRange negligible = rating_to_range(RatingLevel::Negligible);
    const double moderate_hi = rating_to_range(RatingLevel::Moderate).hi;
    InterventionPatch p;
    p.name = "harden_generation";
    p.description =
        "Physically harden generator and storage assets. Their operational and infrastructural impacts under "
        "hurricanes, tornados, earthquakes and flooding become Negligible; terrorism probability and impacts "
        "on these assets are capped at Moderate.";
    const std::pair<const char*, const char*> immune[] = {
        {"Hurricane", "Heavy Rains/Storm Surge Damages Generator"},
        {"Hurricane", "Heavy Rains/Storm Surge Damages Storage"},
        {"Tornado", "Generator Damage"},
        {"Tornado", "Storage Damage"},
        {"Earthquake", "Generator Damage"},
        {"Earthquake", "Storage Damage"},
        {"Flooding", "Infrastructure Damage to Generator"},
        {"Flooding", "Infrastructure Damage to Storage"},
    };
    for (const auto& [threat, vuln] : immune) {
        for (Dimension d : kAllDimensions) p.ops.push_back(ops::SetImpact{threat, vuln, d, negligible});
    }
    const std::string terrorism = "Terrorism / Sabotage / Physical Failure";
    for (const char* vuln : {"Generator Damage", "Storage Damage"}) {
        p.ops.push_back(ops::CapVulnerabilityProbability{terrorism, vuln, moderate_hi});
        for (Dimension d : kAllDimensions) p.ops.push_back(ops::CapImpact{terrorism, vuln, d, moderate_hi});
    }
    return p;
}

double percent_reduction(double base, double updated) {
    if (base == 0.0) throw DomainError("percent_reduction: baseline is zero, reduction undefined");
    return (base - updated) / base * 100.0;
}

Deltas compute_deltas(const RunReport& baseline, const RunReport& patched) {
    const double op0 = baseline.operational.aggregate.mean;
    const double op1 = patched.operational.aggregate.mean;
    const double in0 = baseline.infrastructural.aggregate.mean;
    const double in1 = patched.infrastructural.aggregate.mean;
    auto pct = [](double base, double updated) -> std::optional<double> {
        if (base == 0.0) return std::nullopt;
        return percent_reduction(base, updated);
    };
    return {op0 - op1, pct(op0, op1), in0 - in1, pct(in0, in1),
            patched.resilience.mean - baseline.resilience.mean};
}

ComparisonReport compare(const Scenario& s, const std::vector<InterventionPatch>& patches, const SimConfig& cfg,
                         const RunOptions& opts) {
    // Apply everything first so a bad patch fails before any simulation time is spent.
    std::vector<Scenario> patched;
    patched.reserve(patches.size());
    for (const auto& p : patches) patched.push_back(apply_patch(s, p));

    ComparisonReport out;
    out.baseline = run_scenario(s, cfg, opts);
    for (std::size_t k = 0; k < patches.size(); ++k) {
        RunReport r = run_scenario(patched[k], cfg, opts);
        Deltas d = compute_deltas(out.baseline, r);
        out.patches.push_back({patches[k].name, std::move(r), d});
    }

    std::vector<std::size_t> order(patches.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.patches[a].report.resilience.mean > out.patches[b].report.resilience.mean;
    });
    for (std::size_t k : order) out.ranking.push_back(out.patches[k].name);
    return out;
}

}  // namespace microres
