#pragma once

#include <vector>

#include "microres/risk_model.hpp"
#include "microres/sampling.hpp"

// Exact moments of l * t * v * i for independent t, v, i, plus a brute-force
// midpoint-rule integrator that checks them. Nothing here touches the sampler.
namespace microres::oracle {

struct PairMoments {
    double mean = 0.0;
    double variance = 0.0;
};

struct PairRanges {
    BoundedRange threat;
    BoundedRange vulnerability;
    BoundedRange impact;
};

/// E[X] for one factor.
[[nodiscard]] double factor_mean(const BoundedRange& r, Distribution dist) noexcept;
/// E[X^2] for one factor.
[[nodiscard]] double factor_second_moment(const BoundedRange& r, Distribution dist) noexcept;

[[nodiscard]] double expected_pair_risk(double importance, const PairRanges& ranges, Distribution dist);
[[nodiscard]] double pair_risk_variance(double importance, const PairRanges& ranges, Distribution dist);

/// Midpoint-rule triple integral with grid_n nodes per axis, weighted by the
/// density. Degenerate ranges are a point mass. grid_n must be >= 2.
[[nodiscard]] PairMoments grid_pair_risk(double importance, const PairRanges& ranges, Distribution dist,
                                         int grid_n);

/// Linear weight of each pair (threat-major order) in the per-iteration aggregate.
[[nodiscard]] std::vector<double> aggregation_weights(const Scenario& s, Aggregation agg);

[[nodiscard]] double expected_scenario_risk(const Scenario& s, Dimension d, Aggregation agg, Distribution dist);

/// Variance of a single iteration's aggregate (pairs are independent draws).
[[nodiscard]] double scenario_risk_variance(const Scenario& s, Dimension d, Aggregation agg, Distribution dist);

/// Expected within-threat aggregate per threat (mean of pair expectations,
/// or their sum under PairSum).
[[nodiscard]] std::vector<double> expected_threat_risks(const Scenario& s, Dimension d, Aggregation agg,
                                                        Distribution dist);

[[nodiscard]] inline PairRanges pair_ranges(const ThreatSpec& t, const VulnerabilitySpec& v, Dimension d) {
    return {t.probability, v.probability, v.impact(d)};
}

}  // namespace microres::oracle
