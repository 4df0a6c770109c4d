#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace microres {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A scalar argument fell outside its permitted domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Ordered qualitative rating scale. Each level maps to a fixed slice of [0,1].
enum class RatingLevel {
    Negligible,
    VeryLow,
    Low,
    Moderate,
    Considerable,
    High,
    VeryHigh,
};

inline constexpr std::array<RatingLevel, 7> kAllRatingLevels = {
    RatingLevel::Negligible, RatingLevel::VeryLow, RatingLevel::Low, RatingLevel::Moderate,
    RatingLevel::Considerable, RatingLevel::High, RatingLevel::VeryHigh,
};

/// Closed interval [lo, hi] of a probability or impact fraction.
///
/// Construction is unchecked so that invalid documents can still be
/// represented and reported by validate_scenario(); use make() when the
/// invariant must hold on the spot.
struct BoundedRange {
    double lo = 0.0;
    double hi = 0.0;

    static BoundedRange make(double lo, double hi);

    [[nodiscard]] bool valid() const noexcept { return 0.0 <= lo && lo <= hi && hi <= 1.0; }
    [[nodiscard]] bool contains(double x) const noexcept { return lo <= x && x <= hi; }
    [[nodiscard]] double width() const noexcept { return hi - lo; }

    friend bool operator==(const BoundedRange&, const BoundedRange&) = default;
};

enum class Dimension { Operational, Infrastructural };

inline constexpr std::array<Dimension, 2> kAllDimensions = {Dimension::Operational,
                                                            Dimension::Infrastructural};

struct VulnerabilitySpec {
    std::string name;
    BoundedRange probability;  // conditional on the threat occurring
    BoundedRange operational_impact;  // fraction of critical load not served
    BoundedRange infrastructural_impact;  // restoration cost / embedded system cost

    [[nodiscard]] const BoundedRange& impact(Dimension d) const noexcept {
        return d == Dimension::Operational ? operational_impact : infrastructural_impact;
    }
    BoundedRange& impact(Dimension d) noexcept {
        return d == Dimension::Operational ? operational_impact : infrastructural_impact;
    }

    friend bool operator==(const VulnerabilitySpec&, const VulnerabilitySpec&) = default;
};

struct ThreatSpec {
    std::string name;
    BoundedRange probability;  // annual occurrence likelihood
    double importance = 1.0;  // fixed weight, never sampled
    std::vector<VulnerabilitySpec> vulnerabilities;

    [[nodiscard]] const VulnerabilitySpec* find_vulnerability(std::string_view name) const;
    VulnerabilitySpec* find_vulnerability(std::string_view name);

    friend bool operator==(const ThreatSpec&, const ThreatSpec&) = default;
};

/// A site's complete risk register.
struct Scenario {
    std::string name;
    std::string description;
    std::vector<ThreatSpec> threats;

    [[nodiscard]] const ThreatSpec* find_threat(std::string_view name) const;
    ThreatSpec* find_threat(std::string_view name);
    [[nodiscard]] std::size_t pair_count() const noexcept;

    friend bool operator==(const Scenario&, const Scenario&) = default;
};

struct ValidationIssue {
    std::string path;  // e.g. "threats[2].vulnerabilities[0].probability"
    std::string message;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

/// Raised when a document or patch result violates the register invariants.
class ValidationError : public Error {
public:
    explicit ValidationError(std::vector<ValidationIssue> issues);
    [[nodiscard]] const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

private:
    std::vector<ValidationIssue> issues_;
};

[[nodiscard]] BoundedRange rating_to_range(RatingLevel level) noexcept;

/// Display name, e.g. "Very Low".
[[nodiscard]] std::string_view rating_name(RatingLevel level) noexcept;

/// Case-insensitive; accepts "Very Low" and "VeryLow". Returns nullopt for unknown names.
[[nodiscard]] std::optional<RatingLevel> rating_from_name(std::string_view name);

/// Resolves a single level ("Low") or an ordered span ("Negligible to Moderate").
/// Throws DomainError on unknown names or a reversed span.
[[nodiscard]] BoundedRange parse_rating_label(std::string_view label);

/// Level whose canonical range holds x. Breakpoints belong to the upper level,
/// except 1 which is VeryHigh.
[[nodiscard]] RatingLevel classify_value(double x);

/// Inverse of parse_rating_label for ranges that start and end on breakpoints,
/// e.g. [0, 0.5] -> "Negligible to Moderate".
[[nodiscard]] std::optional<std::string> describe_range(const BoundedRange& r);

[[nodiscard]] std::vector<ValidationIssue> validate_scenario(const Scenario& s);

[[nodiscard]] std::string_view dimension_name(Dimension d) noexcept;
[[nodiscard]] std::optional<Dimension> dimension_from_name(std::string_view name);

}  // namespace microres
