#pragma once

// Internal: strict schema reading over nlohmann::json with JSON-pointer paths.

#include <set>
#include <string>
#include <string_view>

#include <json.hpp>

#include "microres/risk_model.hpp"
#include "microres/scenario_io.hpp"

namespace microres::detail {

using json = nlohmann::json;

json parse_json(std::string_view bytes);

class ObjectReader {
public:
    ObjectReader(const json& j, std::string path, const ParseOptions& opts);

    const json& required(std::string_view key);
    const json* optional(std::string_view key);
    [[nodiscard]] std::string child(std::string_view key) const { return path_ + "/" + std::string(key); }
    [[nodiscard]] const std::string& path() const noexcept { return path_; }

    /// Rejects keys that were never looked at, unless lenient.
    void finish() const;

private:
    const json& j_;
    std::string path_;
    ParseOptions opts_;
    std::set<std::string, std::less<>> seen_;
};

double read_number(const json& j, const std::string& path);
std::string read_string(const json& j, const std::string& path);
std::uint64_t read_unsigned(const json& j, const std::string& path);
const json& read_array(const json& j, const std::string& path);

/// {"lo": x, "hi": y[, "label": ...]} or {"rating": "X to Y"}. The range is
/// returned unchecked; validation reports bad bounds.
BoundedRange read_range(const json& j, const std::string& path, const ParseOptions& opts);
json range_to_json(const BoundedRange& r);

VulnerabilitySpec read_vulnerability(const json& j, const std::string& path, const ParseOptions& opts);
json vulnerability_to_json(const VulnerabilitySpec& v);

Dimension read_dimension(const json& j, const std::string& path);

}  // namespace microres::detail
