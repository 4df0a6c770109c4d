#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "microres/risk_model.hpp"

namespace microres {

namespace ops {

struct SetVulnerabilityProbability {
    std::string threat;
    std::string vulnerability;
    BoundedRange range;
    friend bool operator==(const SetVulnerabilityProbability&, const SetVulnerabilityProbability&) = default;
};

struct SetImpact {
    std::string threat;
    std::string vulnerability;
    Dimension dimension = Dimension::Operational;
    BoundedRange range;
    friend bool operator==(const SetImpact&, const SetImpact&) = default;
};

/// hi := min(hi, max_hi), then lo := min(lo, hi).
struct CapVulnerabilityProbability {
    std::string threat;
    std::string vulnerability;
    double max_hi = 1.0;
    friend bool operator==(const CapVulnerabilityProbability&, const CapVulnerabilityProbability&) = default;
};

struct CapImpact {
    std::string threat;
    std::string vulnerability;
    Dimension dimension = Dimension::Operational;
    double max_hi = 1.0;
    friend bool operator==(const CapImpact&, const CapImpact&) = default;
};

struct AddVulnerability {
    std::string threat;
    VulnerabilitySpec vulnerability;
    friend bool operator==(const AddVulnerability&, const AddVulnerability&) = default;
};

struct RemoveVulnerability {
    std::string threat;
    std::string vulnerability;
    friend bool operator==(const RemoveVulnerability&, const RemoveVulnerability&) = default;
};

struct SetImportance {
    std::string threat;
    double importance = 1.0;
    friend bool operator==(const SetImportance&, const SetImportance&) = default;
};

}  // namespace ops

using PatchOp = std::variant<ops::SetVulnerabilityProbability, ops::SetImpact, ops::CapVulnerabilityProbability,
                             ops::CapImpact, ops::AddVulnerability, ops::RemoveVulnerability, ops::SetImportance>;

/// Wire name of the op, e.g. "cap_impact".
[[nodiscard]] std::string_view op_kind(const PatchOp& op) noexcept;

/// An ordered list of edits that turns a scenario into a mitigated one.
struct InterventionPatch {
    std::string name;
    std::string description;
    std::vector<PatchOp> ops;

    friend bool operator==(const InterventionPatch&, const InterventionPatch&) = default;
};

/// An op could not be resolved against the scenario it was applied to.
class PatchError : public Error {
public:
    PatchError(std::size_t op_index, std::string path, const std::string& message);
    [[nodiscard]] std::size_t op_index() const noexcept { return op_index_; }
    [[nodiscard]] const std::string& path() const noexcept { return path_; }

private:
    std::size_t op_index_;
    std::string path_;
};

}  // namespace microres
