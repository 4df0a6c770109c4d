#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "microres/risk_model.hpp"
#include "microres/sampling.hpp"

namespace microres {

inline constexpr std::uint64_t kDefaultIterations = 1'000'000;
inline constexpr std::uint32_t kDefaultBins = 50;

struct SimConfig {
    std::uint64_t iterations = kDefaultIterations;
    std::uint64_t seed = 0;
    Distribution distribution = Distribution::Uniform;
    Aggregation aggregation = Aggregation::ThreatMeanOfMeans;
    std::uint32_t histogram_bins = kDefaultBins;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Equal-width bins spanning [min, max] of the observed samples.
struct Histogram {
    std::vector<double> edges;  // bins + 1 entries
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t total() const noexcept;
    friend bool operator==(const Histogram&, const Histogram&) = default;
};

/// Throws DomainError for empty input or zero bins.
[[nodiscard]] Histogram histogram(std::span<const double> samples, std::uint32_t bins);

struct PairRisk {
    std::string threat;
    std::string vulnerability;
    Dimension dimension = Dimension::Operational;
    double mean = 0.0;
    double std = 0.0;

    friend bool operator==(const PairRisk&, const PairRisk&) = default;
};

struct ThreatRisk {
    std::string threat;
    double mean = 0.0;

    friend bool operator==(const ThreatRisk&, const ThreatRisk&) = default;
};

struct SampleSummary {
    double mean = 0.0;
    double std = 0.0;
    double min = 0.0;
    double max = 0.0;
    Histogram histogram;

    friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

struct DimensionResult {
    Dimension dimension = Dimension::Operational;
    std::vector<ThreatRisk> threats;  // within-threat aggregate of pair means
    SampleSummary aggregate;

    friend bool operator==(const DimensionResult&, const DimensionResult&) = default;
};

struct RunReport {
    std::string scenario;
    SimConfig config;
    DimensionResult operational;
    DimensionResult infrastructural;
    SampleSummary resilience;
    std::vector<PairRisk> pairs;  // threat-major, vulnerability, then dimension

    [[nodiscard]] const DimensionResult& dimension(Dimension d) const noexcept {
        return d == Dimension::Operational ? operational : infrastructural;
    }
    friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct RunOptions {
    unsigned workers = 0;  // 0 = hardware concurrency
};

/// 1 - (op + infra) / 2. Both inputs must lie in [0, 1].
[[nodiscard]] double total_resilience(double op_risk, double infra_risk);

/// Monte Carlo evaluation of the scenario. Output is a pure function of
/// (scenario, config); the worker count only affects wall time.
[[nodiscard]] RunReport run_scenario(const Scenario& s, const SimConfig& cfg, const RunOptions& opts = {});

}  // namespace microres
