#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "microres/patch.hpp"
#include "microres/risk_model.hpp"

namespace microres {

struct ParseOptions {
    bool lenient = false;  // ignore unknown keys instead of rejecting them
};

/// Malformed or schema-violating JSON. line/column are 1-based and zero when
/// the problem is structural rather than lexical.
class DocumentError : public Error {
public:
    DocumentError(std::string path, const std::string& message, std::size_t line = 0, std::size_t column = 0);
    [[nodiscard]] const std::string& path() const noexcept { return path_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::string path_;
    std::size_t line_;
    std::size_t column_;
};

/// Throws DocumentError or ValidationError.
[[nodiscard]] Scenario parse_scenario(std::string_view bytes, const ParseOptions& opts = {});

/// Canonical key-sorted JSON, newline terminated. Ranges carry numeric lo/hi
/// and, when they fall on rating breakpoints, a "label".
[[nodiscard]] std::string serialize_scenario(const Scenario& s);

/// The coastal New England register, typo repairs applied.
[[nodiscard]] Scenario builtin_new_england();

/// Throws DocumentError (including unknown op kinds).
[[nodiscard]] InterventionPatch parse_patch(std::string_view bytes, const ParseOptions& opts = {});

/// As above, then checks every op resolves against `target` in order.
/// Unresolvable references surface as ValidationError naming the entity.
[[nodiscard]] InterventionPatch parse_patch(std::string_view bytes, const Scenario& target,
                                            const ParseOptions& opts = {});

[[nodiscard]] std::string serialize_patch(const InterventionPatch& p);

}  // namespace microres
