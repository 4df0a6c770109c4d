#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "microres/risk_model.hpp"

namespace microres {

/// Density used when drawing a value from a BoundedRange.
enum class Distribution {
    Uniform,            // flat on [lo, hi]
    TriangularLowMode,  // triangular, mode at lo
};

/// How per-pair residual risks combine into one dimension value. All linear.
enum class Aggregation {
    ThreatMeanOfMeans,  // mean over each threat's pairs, then mean over threats
    PairMean,           // mean over every pair in the register
    PairSum,            // sum over every pair (not bounded by 1)
};

[[nodiscard]] std::string_view distribution_name(Distribution d) noexcept;
[[nodiscard]] std::optional<Distribution> distribution_from_name(std::string_view name);
[[nodiscard]] std::string_view aggregation_name(Aggregation a) noexcept;
[[nodiscard]] std::optional<Aggregation> aggregation_from_name(std::string_view name);

/// Counter-based generator: the n-th value of a stream depends only on
/// (key, n), so any block of iterations can be evaluated on any worker.
class CounterRng {
public:
    constexpr explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

    /// Key for the stream labelled (seed, a, b, c).
    static std::uint64_t stream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                    std::uint64_t c) noexcept;

    [[nodiscard]] std::uint64_t bits(std::uint64_t counter) const noexcept;

    /// Uniform double in [0, 1) with 53 random bits.
    [[nodiscard]] double unit(std::uint64_t counter) const noexcept {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }

private:
    std::uint64_t key_;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

/// Maps a unit variate u in [0, 1) onto the range using the inverse CDF.
[[nodiscard]] double draw_from_unit(const BoundedRange& range, Distribution dist, double u) noexcept;

/// Single draw from `range`; advances nothing, reads `counter` from the stream.
[[nodiscard]] inline double draw(const BoundedRange& range, Distribution dist, const CounterRng& rng,
                                 std::uint64_t counter) noexcept {
    return draw_from_unit(range, dist, rng.unit(counter));
}

/// Residual risk of one threat/vulnerability pair for one draw: l * t * v * i.
[[nodiscard]] double residual_risk(double importance, double threat, double vulnerability, double impact);

}  // namespace microres
