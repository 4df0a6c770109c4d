#include "microres/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace microres {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::string lower_alnum(std::string_view s) {
    std::string out;
    for (char c : s) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    return out;
}

bool in_unit(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    // SplitMix64 finalizer.
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t CounterRng::stream_key(std::uint64_t seed, std::uint64_t a, std::uint64_t b,
                                     std::uint64_t c) noexcept {
    std::uint64_t h = mix64(seed + kGolden);
    h = mix64(h ^ (a + 0x243F6A8885A308D3ULL));
    h = mix64(h ^ (b + 0x13198A2E03707344ULL));
    h = mix64(h ^ (c + 0xA4093822299F31D0ULL));
    return h;
}

std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
    return mix64(key_ + (counter + 1) * kGolden);
}

double draw_from_unit(const BoundedRange& range, Distribution dist, double u) noexcept {
    const double w = range.hi - range.lo;
    double x = range.lo;
    switch (dist) {
        case Distribution::Uniform:
            x = range.lo + w * u;
            break;
        case Distribution::TriangularLowMode:
            // F(x) = 1 - ((hi - x) / w)^2
            x = range.lo + w * (1.0 - std::sqrt(1.0 - u));
            break;
    }
    return std::clamp(x, range.lo, range.hi);
}

double residual_risk(double importance, double threat, double vulnerability, double impact) {
    if (!in_unit(importance) || !in_unit(threat) || !in_unit(vulnerability) || !in_unit(impact)) {
        throw DomainError("residual_risk: every factor must lie in [0, 1]");
    }
    return importance * threat * vulnerability * impact;
}

std::string_view distribution_name(Distribution d) noexcept {
    return d == Distribution::Uniform ? "uniform" : "triangular_low_mode";
}

std::optional<Distribution> distribution_from_name(std::string_view name) {
    const std::string key = lower_alnum(name);
    if (key == "uniform") return Distribution::Uniform;
    if (key == "triangularlowmode" || key == "triangular") return Distribution::TriangularLowMode;
    return std::nullopt;
}

std::string_view aggregation_name(Aggregation a) noexcept {
    switch (a) {
        case Aggregation::ThreatMeanOfMeans: return "threat_mean_of_means";
        case Aggregation::PairMean: return "pair_mean";
        case Aggregation::PairSum: return "pair_sum";
    }
    return "threat_mean_of_means";
}

std::optional<Aggregation> aggregation_from_name(std::string_view name) {
    const std::string key = lower_alnum(name);
    if (key == "threatmeanofmeans") return Aggregation::ThreatMeanOfMeans;
    if (key == "pairmean") return Aggregation::PairMean;
    if (key == "pairsum") return Aggregation::PairSum;
    return std::nullopt;
}

}  // namespace microres
