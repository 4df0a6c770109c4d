#include "json_reader.hpp"

#include <cmath>
#include <limits>

namespace microres::detail {

namespace {

std::string type_mismatch(const json& j, std::string_view expected) {
    return "expected " + std::string(expected) + ", found " + j.type_name();
}

}  // namespace

json parse_json(std::string_view bytes) {
    if (bytes.empty()) throw DocumentError("", "empty document", 1, 1);
    try {
        return json::parse(bytes.begin(), bytes.end());
    } catch (const json::parse_error& e) {
        // e.byte is the 1-based offset of the last character read.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, bytes.size());
        for (std::size_t i = 0; i < upto; ++i) {
            if (bytes[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw DocumentError("", std::string("malformed JSON: ") + e.what(), line, column);
    }
}

ObjectReader::ObjectReader(const json& j, std::string path, const ParseOptions& opts)
    : j_(j), path_(std::move(path)), opts_(opts) {
    if (!j_.is_object()) throw DocumentError(path_.empty() ? "/" : path_, type_mismatch(j_, "object"));
}

const json& ObjectReader::required(std::string_view key) {
    const json* v = optional(key);
    if (v == nullptr) throw DocumentError(child(key), "missing required key '" + std::string(key) + "'");
    return *v;
}

const json* ObjectReader::optional(std::string_view key) {
    seen_.emplace(key);
    auto it = j_.find(std::string(key));
    return it == j_.end() ? nullptr : &*it;
}

void ObjectReader::finish() const {
    if (opts_.lenient) return;
    for (const auto& [key, value] : j_.items()) {
        if (seen_.find(key) == seen_.end()) throw DocumentError(child(key), "unknown key '" + key + "'");
    }
}

double read_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw DocumentError(path, type_mismatch(j, "number"));
    return j.get<double>();
}

std::string read_string(const json& j, const std::string& path) {
    if (!j.is_string()) throw DocumentError(path, type_mismatch(j, "string"));
    return j.get<std::string>();
}

std::uint64_t read_unsigned(const json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return j.get<std::uint64_t>();
    if (j.is_number_float()) {
        const double d = j.get<double>();
        if (d >= 0 && std::floor(d) == d && d < static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
            return static_cast<std::uint64_t>(d);
        }
    }
    throw DocumentError(path, type_mismatch(j, "non-negative integer"));
}

const json& read_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw DocumentError(path, type_mismatch(j, "array"));
    return j;
}

BoundedRange read_range(const json& j, const std::string& path, const ParseOptions& opts) {
    ObjectReader r(j, path, opts);
    const json* rating = r.optional("rating");
    const json* lo = r.optional("lo");
    const json* hi = r.optional("hi");
    const json* label = r.optional("label");
    r.finish();
    if (rating != nullptr) {
        if (lo != nullptr || hi != nullptr || label != nullptr) {
            throw DocumentError(path, "give either 'rating' or 'lo'/'hi', not both");
        }
        const std::string text = read_string(*rating, r.child("rating"));
        try {
            return parse_rating_label(text);
        } catch (const DomainError& e) {
            throw DocumentError(r.child("rating"), e.what());
        }
    }
    if (lo == nullptr || hi == nullptr) throw DocumentError(path, "range needs 'lo' and 'hi' (or 'rating')");
    if (label != nullptr) read_string(*label, r.child("label"));
    return {read_number(*lo, r.child("lo")), read_number(*hi, r.child("hi"))};
}

json range_to_json(const BoundedRange& r) {
    json out = {{"lo", r.lo}, {"hi", r.hi}};
    if (auto label = describe_range(r)) out["label"] = *label;
    return out;
}

VulnerabilitySpec read_vulnerability(const json& j, const std::string& path, const ParseOptions& opts) {
    ObjectReader r(j, path, opts);
    VulnerabilitySpec v;
    v.name = read_string(r.required("name"), r.child("name"));
    v.probability = read_range(r.required("probability"), r.child("probability"), opts);
    v.operational_impact = read_range(r.required("operational_impact"), r.child("operational_impact"), opts);
    v.infrastructural_impact =
        read_range(r.required("infrastructural_impact"), r.child("infrastructural_impact"), opts);
    r.finish();
    return v;
}

json vulnerability_to_json(const VulnerabilitySpec& v) {
    return {
        {"name", v.name},
        {"probability", range_to_json(v.probability)},
        {"operational_impact", range_to_json(v.operational_impact)},
        {"infrastructural_impact", range_to_json(v.infrastructural_impact)},
    };
}

Dimension read_dimension(const json& j, const std::string& path) {
    const std::string name = read_string(j, path);
    auto d = dimension_from_name(name);
    if (!d) throw DocumentError(path, "unknown dimension '" + name + "' (operational | infrastructural)");
    return *d;
}

}  // namespace microres::detail
