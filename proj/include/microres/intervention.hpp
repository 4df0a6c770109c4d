#pragma once

#include <optional>
#include <string>
#include <vector>

#include "microres/patch.hpp"
#include "microres/sim_engine.hpp"

namespace microres {

/// Returns a patched copy; `s` is never modified. Ops apply in order.
/// Throws PatchError for unresolvable references and ValidationError when
/// the result breaks a register invariant.
[[nodiscard]] Scenario apply_patch(const Scenario& s, const InterventionPatch& p);

/// Move distribution lines underground.
[[nodiscard]] InterventionPatch builtin_underground_distribution();

/// Harden generator and storage assets.
[[nodiscard]] InterventionPatch builtin_harden_generation();

/// (base - new) / base * 100. Throws DomainError when base is 0.
[[nodiscard]] double percent_reduction(double base, double updated);

/// Positive values are improvements: risk fell or resilience rose.
struct Deltas {
    double op_risk_abs = 0.0;
    std::optional<double> op_risk_pct;  // empty when the baseline risk is 0
    double infra_risk_abs = 0.0;
    std::optional<double> infra_risk_pct;
    double resilience_abs = 0.0;

    friend bool operator==(const Deltas&, const Deltas&) = default;
};

struct PatchOutcome {
    std::string name;
    RunReport report;
    Deltas deltas;

    friend bool operator==(const PatchOutcome&, const PatchOutcome&) = default;
};

struct ComparisonReport {
    RunReport baseline;
    std::vector<PatchOutcome> patches;
    std::vector<std::string> ranking;  // by resilience mean, best first; ties keep input order

    friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

[[nodiscard]] Deltas compute_deltas(const RunReport& baseline, const RunReport& patched);

/// Simulates the baseline and every patched scenario with the same config and seed.
[[nodiscard]] ComparisonReport compare(const Scenario& s, const std::vector<InterventionPatch>& patches,
                                       const SimConfig& cfg, const RunOptions& opts = {});

}  // namespace microres
