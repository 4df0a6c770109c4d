#include "microres/risk_model.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

namespace microres {

namespace {

constexpr std::array<double, 8> kBreakpoints = {0.0, 0.01, 0.05, 0.2, 0.5, 0.7, 0.9, 1.0};

constexpr std::array<std::string_view, 7> kNames = {
    "Negligible", "Very Low", "Low", "Moderate", "Considerable", "High", "Very High",
};

std::string normalize(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Finds " to " as a whole word, case-insensitively.
std::optional<std::size_t> find_span_separator(std::string_view s) {
    for (std::size_t i = 1; i + 3 < s.size(); ++i) {
        if (std::isspace(static_cast<unsigned char>(s[i - 1])) &&
            std::tolower(static_cast<unsigned char>(s[i])) == 't' &&
            std::tolower(static_cast<unsigned char>(s[i + 1])) == 'o' &&
            std::isspace(static_cast<unsigned char>(s[i + 2]))) {
            return i;
        }
    }
    return std::nullopt;
}

RatingLevel level_or_throw(std::string_view name, std::string_view label) {
    auto level = rating_from_name(trim(name));
    if (!level) {
        throw DomainError("unknown rating level '" + std::string(trim(name)) + "' in label '" +
                          std::string(label) + "'");
    }
    return *level;
}

std::string range_text(const BoundedRange& r) {
    std::ostringstream os;
    os << "[" << r.lo << ", " << r.hi << "]";
    return os.str();
}

}  // namespace

BoundedRange BoundedRange::make(double lo, double hi) {
    BoundedRange r{lo, hi};
    if (!r.valid()) throw DomainError("invalid range " + range_text(r) + ": need 0 <= lo <= hi <= 1");
    return r;
}

const VulnerabilitySpec* ThreatSpec::find_vulnerability(std::string_view n) const {
    auto it = std::find_if(vulnerabilities.begin(), vulnerabilities.end(),
                           [&](const VulnerabilitySpec& v) { return v.name == n; });
    return it == vulnerabilities.end() ? nullptr : &*it;
}

VulnerabilitySpec* ThreatSpec::find_vulnerability(std::string_view n) {
    return const_cast<VulnerabilitySpec*>(std::as_const(*this).find_vulnerability(n));
}

const ThreatSpec* Scenario::find_threat(std::string_view n) const {
    auto it = std::find_if(threats.begin(), threats.end(), [&](const ThreatSpec& t) { return t.name == n; });
    return it == threats.end() ? nullptr : &*it;
}

ThreatSpec* Scenario::find_threat(std::string_view n) {
    return const_cast<ThreatSpec*>(std::as_const(*this).find_threat(n));
}

std::size_t Scenario::pair_count() const noexcept {
    std::size_t n = 0;
    for (const auto& t : threats) n += t.vulnerabilities.size();
    return n;
}

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : Error([&] {
          std::string msg = "scenario failed validation";
          if (!issues.empty()) msg += ": " + issues.front().path + ": " + issues.front().message;
          if (issues.size() > 1) msg += " (+" + std::to_string(issues.size() - 1) + " more)";
          return msg;
      }()),
      issues_(std::move(issues)) {}

BoundedRange rating_to_range(RatingLevel level) noexcept {
    auto i = static_cast<std::size_t>(level);
    return {kBreakpoints[i], kBreakpoints[i + 1]};
}

std::string_view rating_name(RatingLevel level) noexcept { return kNames[static_cast<std::size_t>(level)]; }

std::optional<RatingLevel> rating_from_name(std::string_view name) {
    const std::string key = normalize(name);
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (normalize(kNames[i]) == key) return static_cast<RatingLevel>(i);
    }
    return std::nullopt;
}

BoundedRange parse_rating_label(std::string_view label) {
    const std::string_view text = trim(label);
    if (auto sep = find_span_separator(text)) {
        const RatingLevel from = level_or_throw(text.substr(0, *sep), label);
        const RatingLevel to = level_or_throw(text.substr(*sep + 2), label);
        if (to < from) {
            throw DomainError("rating span '" + std::string(label) + "' runs backwards");
        }
        return {rating_to_range(from).lo, rating_to_range(to).hi};
    }
    return rating_to_range(level_or_throw(text, label));
}

RatingLevel classify_value(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw DomainError("classify_value: " + std::to_string(x) + " is outside [0, 1]");
    }
    // upper_bound gives the first breakpoint > x, so ties go to the higher level.
    auto it = std::upper_bound(kBreakpoints.begin(), kBreakpoints.end(), x);
    auto idx = static_cast<std::size_t>(std::distance(kBreakpoints.begin(), it)) - 1;
    return static_cast<RatingLevel>(std::min<std::size_t>(idx, kAllRatingLevels.size() - 1));
}

std::optional<std::string> describe_range(const BoundedRange& r) {
    std::optional<RatingLevel> from;
    std::optional<RatingLevel> to;
    for (RatingLevel l : kAllRatingLevels) {
        if (rating_to_range(l).lo == r.lo) from = l;
        if (rating_to_range(l).hi == r.hi) to = l;
    }
    if (!from || !to || *to < *from) return std::nullopt;
    if (*from == *to) return std::string(rating_name(*from));
    return std::string(rating_name(*from)) + " to " + std::string(rating_name(*to));
}

std::vector<ValidationIssue> validate_scenario(const Scenario& s) {
    std::vector<ValidationIssue> issues;
    auto check_range = [&](const BoundedRange& r, const std::string& path) {
        if (!std::isfinite(r.lo) || !std::isfinite(r.hi)) {
            issues.push_back({path, "range bounds must be finite"});
        } else if (!r.valid()) {
            issues.push_back({path, "range " + range_text(r) + " violates 0 <= lo <= hi <= 1"});
        }
    };

    if (s.threats.empty()) issues.push_back({"threats", "scenario must list at least one threat"});

    std::set<std::string> threat_names;
    for (std::size_t ti = 0; ti < s.threats.size(); ++ti) {
        const ThreatSpec& t = s.threats[ti];
        const std::string tp = "threats[" + std::to_string(ti) + "]";
        if (t.name.empty()) issues.push_back({tp + ".name", "threat name must not be empty"});
        if (!threat_names.insert(t.name).second) {
            issues.push_back({tp + ".name", "duplicate threat name '" + t.name + "'"});
        }
        check_range(t.probability, tp + ".probability");
        if (!(t.importance >= 0.0 && t.importance <= 1.0)) {
            std::ostringstream msg;
            msg << "importance " << t.importance << " of '" << t.name << "' is outside [0, 1]";
            issues.push_back({tp + ".importance", msg.str()});
        }
        if (t.vulnerabilities.empty()) {
            issues.push_back({tp + ".vulnerabilities", "threat '" + t.name + "' has no vulnerabilities"});
        }
        std::set<std::string> vuln_names;
        for (std::size_t vi = 0; vi < t.vulnerabilities.size(); ++vi) {
            const VulnerabilitySpec& v = t.vulnerabilities[vi];
            const std::string vp = tp + ".vulnerabilities[" + std::to_string(vi) + "]";
            if (v.name.empty()) issues.push_back({vp + ".name", "vulnerability name must not be empty"});
            if (!vuln_names.insert(v.name).second) {
                issues.push_back({vp + ".name", "duplicate vulnerability name '" + v.name + "' under '" +
                                                    t.name + "'"});
            }
            check_range(v.probability, vp + ".probability");
            check_range(v.operational_impact, vp + ".operational_impact");
            check_range(v.infrastructural_impact, vp + ".infrastructural_impact");
        }
    }
    return issues;
}

std::string_view dimension_name(Dimension d) noexcept {
    return d == Dimension::Operational ? "operational" : "infrastructural";
}

std::optional<Dimension> dimension_from_name(std::string_view name) {
    const std::string key = normalize(name);
    if (key == "operational") return Dimension::Operational;
    if (key == "infrastructural") return Dimension::Infrastructural;
    return std::nullopt;
}

}  // namespace microres
