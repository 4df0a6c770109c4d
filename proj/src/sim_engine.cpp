#include "microres/sim_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

namespace microres {

namespace {

constexpr std::uint64_t kBlockSize = 8192;
constexpr std::uint64_t kDrawsPerPair = 3;  // threat, vulnerability, impact

struct PairPlan {
    std::size_t threat = 0;
    std::size_t vulnerability = 0;
    double importance = 0.0;
    BoundedRange threat_p;
    BoundedRange vuln_p;
    BoundedRange impact[2];
    CounterRng rng[2]{CounterRng{0}, CounterRng{0}};
};

// Per-block first and second raw moments of one pair/dimension stream.
struct BlockMoments {
    double sum = 0.0;
    double sumsq = 0.0;
};

struct Moments {
    double n = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void merge(double nb, const BlockMoments& b) {
        if (nb == 0.0) return;
        const double mb = b.sum / nb;
        const double m2b = std::max(0.0, b.sumsq - b.sum * mb);
        const double total = n + nb;
        const double delta = mb - mean;
        mean += delta * nb / total;
        m2 += m2b + delta * delta * n * nb / total;
        n = total;
    }
    [[nodiscard]] double stddev() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0)) : 0.0; }
};

SampleSummary summarize(std::span<const double> xs, std::uint32_t bins) {
    SampleSummary s;
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    s.min = *lo;
    s.max = *hi;
    double sum = 0.0;
    for (double x : xs) sum += x;
    s.mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std = xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
    s.histogram = histogram(xs, bins);
    return s;
}

// Combines the per-threat values of one iteration.
double combine_threats(std::span<const double> threat_values, Aggregation agg, std::size_t pair_total,
                       std::span<const std::size_t> pairs_per_threat) {
    double acc = 0.0;
    switch (agg) {
        case Aggregation::ThreatMeanOfMeans:
            for (std::size_t k = 0; k < threat_values.size(); ++k) {
                acc += threat_values[k] / static_cast<double>(pairs_per_threat[k]);
            }
            return acc / static_cast<double>(threat_values.size());
        case Aggregation::PairMean:
            for (double v : threat_values) acc += v;
            return acc / static_cast<double>(pair_total);
        case Aggregation::PairSum:
            for (double v : threat_values) acc += v;
            return acc;
    }
    return acc;
}

}  // namespace

std::uint64_t Histogram::total() const noexcept {
    return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Histogram histogram(std::span<const double> samples, std::uint32_t bins) {
    if (bins == 0) throw DomainError("histogram needs at least one bin");
    if (samples.empty()) throw DomainError("histogram of an empty sample stream");
    const auto [lo_it, hi_it] = std::minmax_element(samples.begin(), samples.end());
    const double lo = *lo_it;
    const double hi = *hi_it;
    const double width = (hi - lo) / bins;

    Histogram h;
    h.edges.resize(bins + 1);
    for (std::uint32_t b = 0; b <= bins; ++b) h.edges[b] = lo + width * b;
    h.edges.back() = hi;
    h.counts.assign(bins, 0);
    for (double x : samples) {
        std::size_t b = 0;
        if (width > 0.0) {
            b = static_cast<std::size_t>((x - lo) / width);
            b = std::min<std::size_t>(b, bins - 1);
        }
        ++h.counts[b];
    }
    return h;
}

double total_resilience(double op_risk, double infra_risk) {
    if (!(op_risk >= 0.0 && op_risk <= 1.0) || !(infra_risk >= 0.0 && infra_risk <= 1.0)) {
        throw DomainError("total_resilience: risks must lie in [0, 1]");
    }
    return 1.0 - (op_risk + infra_risk) / 2.0;
}

RunReport run_scenario(const Scenario& s, const SimConfig& cfg, const RunOptions& opts) {
    if (auto issues = validate_scenario(s); !issues.empty()) throw ValidationError(std::move(issues));
    if (cfg.iterations == 0) throw DomainError("iterations must be at least 1");
    if (cfg.histogram_bins == 0) throw DomainError("histogram_bins must be at least 1");

    std::vector<PairPlan> plan;
    std::vector<std::size_t> pairs_per_threat;
    for (std::size_t ti = 0; ti < s.threats.size(); ++ti) {
        const ThreatSpec& t = s.threats[ti];
        pairs_per_threat.push_back(t.vulnerabilities.size());
        for (std::size_t vi = 0; vi < t.vulnerabilities.size(); ++vi) {
            const VulnerabilitySpec& v = t.vulnerabilities[vi];
            PairPlan p;
            p.threat = ti;
            p.vulnerability = vi;
            p.importance = t.importance;
            p.threat_p = t.probability;
            p.vuln_p = v.probability;
            for (Dimension d : kAllDimensions) {
                const auto di = static_cast<std::size_t>(d);
                p.impact[di] = v.impact(d);
                p.rng[di] = CounterRng{CounterRng::stream_key(cfg.seed, ti, vi, di)};
            }
            plan.push_back(p);
        }
    }

    const std::uint64_t n = cfg.iterations;
    const std::size_t n_pairs = plan.size();
    const std::size_t n_threats = s.threats.size();
    const std::uint64_t n_blocks = (n + kBlockSize - 1) / kBlockSize;

    std::vector<double> samples[2] = {std::vector<double>(n), std::vector<double>(n)};
    // [block][pair][dimension]
    std::vector<BlockMoments> block_moments(n_blocks * n_pairs * 2);

    auto run_block = [&](std::uint64_t block) {
        std::vector<double> threat_values(n_threats);
        BlockMoments* moments = &block_moments[block * n_pairs * 2];
        const std::uint64_t begin = block * kBlockSize;
        const std::uint64_t end = std::min(n, begin + kBlockSize);
        for (std::uint64_t it = begin; it < end; ++it) {
            const std::uint64_t counter = it * kDrawsPerPair;
            for (std::size_t di = 0; di < 2; ++di) {
                std::fill(threat_values.begin(), threat_values.end(), 0.0);
                for (std::size_t p = 0; p < n_pairs; ++p) {
                    const PairPlan& pp = plan[p];
                    const CounterRng& rng = pp.rng[di];
                    const double t = draw(pp.threat_p, cfg.distribution, rng, counter);
                    const double v = draw(pp.vuln_p, cfg.distribution, rng, counter + 1);
                    const double i = draw(pp.impact[di], cfg.distribution, rng, counter + 2);
                    const double r = pp.importance * t * v * i;
                    threat_values[pp.threat] += r;
                    BlockMoments& m = moments[p * 2 + di];
                    m.sum += r;
                    m.sumsq += r * r;
                }
                samples[di][it] = combine_threats(threat_values, cfg.aggregation, n_pairs, pairs_per_threat);
            }
        }
    };

    unsigned workers = opts.workers != 0 ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_blocks));
    if (workers <= 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::uint64_t b = next++; b < n_blocks; b = next++) run_block(b);
            });
        }
    }

    RunReport report;
    report.scenario = s.name;
    report.config = cfg;

    std::vector<Moments> pair_moments(n_pairs * 2);
    for (std::uint64_t b = 0; b < n_blocks; ++b) {
        const double nb = static_cast<double>(std::min(n, (b + 1) * kBlockSize) - b * kBlockSize);
        for (std::size_t k = 0; k < n_pairs * 2; ++k) pair_moments[k].merge(nb, block_moments[b * n_pairs * 2 + k]);
    }
    for (std::size_t p = 0; p < n_pairs; ++p) {
        for (Dimension d : kAllDimensions) {
            const Moments& m = pair_moments[p * 2 + static_cast<std::size_t>(d)];
            const ThreatSpec& t = s.threats[plan[p].threat];
            report.pairs.push_back(
                {t.name, t.vulnerabilities[plan[p].vulnerability].name, d, m.mean, m.stddev()});
        }
    }

    for (Dimension d : kAllDimensions) {
        const auto di = static_cast<std::size_t>(d);
        DimensionResult& dr = d == Dimension::Operational ? report.operational : report.infrastructural;
        dr.dimension = d;
        std::size_t p = 0;
        for (std::size_t ti = 0; ti < n_threats; ++ti) {
            double acc = 0.0;
            for (std::size_t k = 0; k < pairs_per_threat[ti]; ++k, ++p) acc += pair_moments[p * 2 + di].mean;
            if (cfg.aggregation != Aggregation::PairSum) acc /= static_cast<double>(pairs_per_threat[ti]);
            dr.threats.push_back({s.threats[ti].name, acc});
        }
        dr.aggregate = summarize(samples[di], cfg.histogram_bins);
    }

    std::vector<double>& resilience = samples[0];
    for (std::uint64_t it = 0; it < n; ++it) resilience[it] = 1.0 - (samples[0][it] + samples[1][it]) / 2.0;
    report.resilience = summarize(resilience, cfg.histogram_bins);
    return report;
}

}  // namespace microres
