#include "microres/analytic_oracle.hpp"

#include <array>

namespace microres::oracle {

namespace {

struct Axis {
    std::vector<double> nodes;
    std::vector<double> weights;
};

double density(const BoundedRange& r, Distribution dist, double x) {
    const double w = r.hi - r.lo;
    switch (dist) {
        case Distribution::Uniform: return 1.0 / w;
        case Distribution::TriangularLowMode: return 2.0 * (r.hi - x) / (w * w);
    }
    return 0.0;
}

Axis make_axis(const BoundedRange& r, Distribution dist, int n) {
    Axis a;
    if (r.hi == r.lo) {
        a.nodes = {r.lo};
        a.weights = {1.0};
        return a;
    }
    const double h = (r.hi - r.lo) / n;
    for (int k = 0; k < n; ++k) {
        const double x = r.lo + (k + 0.5) * h;
        a.nodes.push_back(x);
        a.weights.push_back(density(r, dist, x) * h);
    }
    return a;
}

void check_importance(double l) {
    if (!(l >= 0.0 && l <= 1.0)) throw DomainError("importance must lie in [0, 1]");
}

}  // namespace

double factor_mean(const BoundedRange& r, Distribution dist) noexcept {
    switch (dist) {
        case Distribution::Uniform: return (r.lo + r.hi) / 2.0;
        case Distribution::TriangularLowMode: return (2.0 * r.lo + r.hi) / 3.0;
    }
    return 0.0;
}

double factor_second_moment(const BoundedRange& r, Distribution dist) noexcept {
    const double lo = r.lo;
    const double hi = r.hi;
    switch (dist) {
        case Distribution::Uniform: return (lo * lo + lo * hi + hi * hi) / 3.0;
        case Distribution::TriangularLowMode: {
            // Var = (hi - lo)^2 / 18 for a triangle with mode at lo.
            const double m = factor_mean(r, dist);
            return (hi - lo) * (hi - lo) / 18.0 + m * m;
        }
    }
    return 0.0;
}

double expected_pair_risk(double importance, const PairRanges& p, Distribution dist) {
    check_importance(importance);
    return importance * factor_mean(p.threat, dist) * factor_mean(p.vulnerability, dist) *
           factor_mean(p.impact, dist);
}

double pair_risk_variance(double importance, const PairRanges& p, Distribution dist) {
    check_importance(importance);
    const double second = factor_second_moment(p.threat, dist) * factor_second_moment(p.vulnerability, dist) *
                          factor_second_moment(p.impact, dist);
    const double first = factor_mean(p.threat, dist) * factor_mean(p.vulnerability, dist) *
                         factor_mean(p.impact, dist);
    const double var = importance * importance * (second - first * first);
    return var > 0.0 ? var : 0.0;
}

PairMoments grid_pair_risk(double importance, const PairRanges& p, Distribution dist, int grid_n) {
    check_importance(importance);
    if (grid_n < 2) throw DomainError("grid_pair_risk needs grid_n >= 2");
    const Axis at = make_axis(p.threat, dist, grid_n);
    const Axis av = make_axis(p.vulnerability, dist, grid_n);
    const Axis ai = make_axis(p.impact, dist, grid_n);

    double m1 = 0.0;
    double m2 = 0.0;
    for (std::size_t a = 0; a < at.nodes.size(); ++a) {
        for (std::size_t b = 0; b < av.nodes.size(); ++b) {
            const double wab = at.weights[a] * av.weights[b];
            const double tv = importance * at.nodes[a] * av.nodes[b];
            for (std::size_t c = 0; c < ai.nodes.size(); ++c) {
                const double f = tv * ai.nodes[c];
                const double w = wab * ai.weights[c];
                m1 += w * f;
                m2 += w * f * f;
            }
        }
    }
    const double var = m2 - m1 * m1;
    return {m1, var > 0.0 ? var : 0.0};
}

std::vector<double> aggregation_weights(const Scenario& s, Aggregation agg) {
    const double pairs = static_cast<double>(s.pair_count());
    const double threats = static_cast<double>(s.threats.size());
    std::vector<double> w;
    for (const auto& t : s.threats) {
        for (std::size_t k = 0; k < t.vulnerabilities.size(); ++k) {
            switch (agg) {
                case Aggregation::ThreatMeanOfMeans:
                    w.push_back(1.0 / (threats * static_cast<double>(t.vulnerabilities.size())));
                    break;
                case Aggregation::PairMean: w.push_back(1.0 / pairs); break;
                case Aggregation::PairSum: w.push_back(1.0); break;
            }
        }
    }
    return w;
}

double expected_scenario_risk(const Scenario& s, Dimension d, Aggregation agg, Distribution dist) {
    const auto w = aggregation_weights(s, agg);
    double acc = 0.0;
    std::size_t k = 0;
    for (const auto& t : s.threats) {
        for (const auto& v : t.vulnerabilities) {
            acc += w[k++] * expected_pair_risk(t.importance, pair_ranges(t, v, d), dist);
        }
    }
    return acc;
}

double scenario_risk_variance(const Scenario& s, Dimension d, Aggregation agg, Distribution dist) {
    const auto w = aggregation_weights(s, agg);
    double acc = 0.0;
    std::size_t k = 0;
    for (const auto& t : s.threats) {
        for (const auto& v : t.vulnerabilities) {
            acc += w[k] * w[k] * pair_risk_variance(t.importance, pair_ranges(t, v, d), dist);
            ++k;
        }
    }
    return acc;
}

std::vector<double> expected_threat_risks(const Scenario& s, Dimension d, Aggregation agg, Distribution dist) {
    std::vector<double> out;
    for (const auto& t : s.threats) {
        double acc = 0.0;
        for (const auto& v : t.vulnerabilities) acc += expected_pair_risk(t.importance, pair_ranges(t, v, d), dist);
        if (agg != Aggregation::PairSum && !t.vulnerabilities.empty()) {
            acc /= static_cast<double>(t.vulnerabilities.size());
        }
        out.push_back(acc);
    }
    return out;
}

}  // namespace microres::oracle
