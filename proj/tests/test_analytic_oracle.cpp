#include <doctest.h>

#include <random>

#include "microres/analytic_oracle.hpp"
#include "microres/scenario_io.hpp"
#include "test_support.hpp"

using namespace microres;
using namespace microres::oracle;

namespace {

const PairRanges kHurricaneClouds{{0.2, 0.7}, {0.5, 0.7}, {0.0, 0.05}};

}  // namespace

TEST_CASE("grid integrator confirms the hurricane clouds pair expectation") {
    const PairMoments grid = grid_pair_risk(1.0, kHurricaneClouds, Distribution::Uniform, 200);
    CHECK(std::abs(grid.mean - 0.00675) < 1e-6);
    CHECK(std::abs(expected_pair_risk(1.0, kHurricaneClouds, Distribution::Uniform) - 0.00675) < 1e-15);
}

TEST_CASE("expected_pair_risk trivial cases") {
    CHECK(expected_pair_risk(0.0, kHurricaneClouds, Distribution::Uniform) == 0.0);
    CHECK(expected_pair_risk(0.0, kHurricaneClouds, Distribution::TriangularLowMode) == 0.0);
    const PairRanges point{{0.3, 0.3}, {0.5, 0.5}, {0.2, 0.2}};
    for (Distribution d : {Distribution::Uniform, Distribution::TriangularLowMode}) {
        CHECK(expected_pair_risk(1.0, point, d) == doctest::Approx(0.03));
        CHECK(pair_risk_variance(1.0, point, d) == doctest::Approx(0.0));
        const PairMoments g = grid_pair_risk(1.0, point, d, 2);
        CHECK(g.mean == doctest::Approx(0.03));
        CHECK(g.variance == doctest::Approx(0.0));
    }
    CHECK(expected_pair_risk(1.0, {{0.2, 0.8}, {0.0, 0.6}, {0.3, 0.3}}, Distribution::TriangularLowMode) ==
          doctest::Approx(0.4 * 0.2 * 0.3));
    CHECK_THROWS_AS((void)expected_pair_risk(1.2, kHurricaneClouds, Distribution::Uniform), DomainError);
    CHECK_THROWS_AS((void)grid_pair_risk(1.0, kHurricaneClouds, Distribution::Uniform, 1), DomainError);
}

TEST_CASE("pair_risk_variance on the unit cube") {
    const PairRanges unit{{0, 1}, {0, 1}, {0, 1}};
    const double expected = 37.0 / 1728.0;  // 1/27 - 1/64
    CHECK(pair_risk_variance(1.0, unit, Distribution::Uniform) == doctest::Approx(expected).epsilon(1e-12));
    const PairMoments g = grid_pair_risk(1.0, unit, Distribution::Uniform, 400);
    CHECK(std::abs(g.variance - expected) < 1e-6);
}

TEST_CASE("closed forms agree with the grid on random ranges (property)") {
    std::mt19937_64 gen(2024);
    for (int k = 0; k < 100; ++k) {
        const double l = testing::unit(gen);
        const PairRanges p{testing::random_range(gen), testing::random_range(gen), testing::random_range(gen)};
        const PairMoments g = grid_pair_risk(l, p, Distribution::Uniform, 400);
        CHECK(std::abs(expected_pair_risk(l, p, Distribution::Uniform) - g.mean) < 1e-7);
        CHECK(std::abs(pair_risk_variance(l, p, Distribution::Uniform) - g.variance) < 1e-6);
    }
}

TEST_CASE("triangular closed forms converge to the grid") {
    std::mt19937_64 gen(77);
    for (int k = 0; k < 20; ++k) {
        const PairRanges p{testing::random_range(gen), testing::random_range(gen), testing::random_range(gen)};
        const PairMoments g = grid_pair_risk(1.0, p, Distribution::TriangularLowMode, 400);
        CHECK(std::abs(expected_pair_risk(1.0, p, Distribution::TriangularLowMode) - g.mean) < 1e-6);
        CHECK(std::abs(pair_risk_variance(1.0, p, Distribution::TriangularLowMode) - g.variance) < 1e-6);
    }
}

TEST_CASE("expected_scenario_risk on the built-in register") {
    const Scenario s = builtin_new_england();
    // Frozen from an exact rational evaluation of the uniform-midpoint products.
    struct Expect {
        Aggregation agg;
        double op;
        double infra;
    };
    const Expect cases[] = {
        {Aggregation::ThreatMeanOfMeans, 0.01062122619047619, 0.0084550934523809525},
        {Aggregation::PairMean, 0.012102794117647059, 0.010144426470588235},
        {Aggregation::PairSum, 0.61724250000000003, 0.51736574999999996},
    };
    for (const auto& e : cases) {
        CHECK(expected_scenario_risk(s, Dimension::Operational, e.agg, Distribution::Uniform) ==
              doctest::Approx(e.op).epsilon(1e-12));
        CHECK(expected_scenario_risk(s, Dimension::Infrastructural, e.agg, Distribution::Uniform) ==
              doctest::Approx(e.infra).epsilon(1e-12));
    }
    CHECK(expected_scenario_risk(s, Dimension::Operational, Aggregation::ThreatMeanOfMeans,
                                 Distribution::TriangularLowMode) == doctest::Approx(0.0041443821281599057).epsilon(1e-12));
    CHECK(s.pair_count() == 51);
}

TEST_CASE("expected_scenario_risk trivial cases") {
    Scenario s = builtin_new_england();
    for (auto& t : s.threats) t.importance = 0.0;
    CHECK(expected_scenario_risk(s, Dimension::Operational, Aggregation::PairSum, Distribution::Uniform) == 0.0);
    CHECK(scenario_risk_variance(s, Dimension::Infrastructural, Aggregation::PairMean, Distribution::Uniform) == 0.0);

    Scenario one;
    one.name = "one";
    one.threats = {{"Hurricane", {0.2, 0.7}, 1.0, {{"Clouds", {0.5, 0.7}, {0.0, 0.05}, {0.0, 0.01}}}}};
    for (Aggregation a : {Aggregation::ThreatMeanOfMeans, Aggregation::PairMean, Aggregation::PairSum}) {
        CHECK(expected_scenario_risk(one, Dimension::Operational, a, Distribution::Uniform) ==
              doctest::Approx(0.00675).epsilon(1e-14));
    }
}

TEST_CASE("scenario risk is linear in each threat's importance") {
    const Scenario base = builtin_new_england();
    std::mt19937_64 gen(5);
    for (int k = 0; k < 30; ++k) {
        Scenario s = base;
        const std::size_t ti = gen() % s.threats.size();
        const double c = testing::unit(gen);
        s.threats[ti].importance *= c;
        for (Dimension d : kAllDimensions) {
            const auto before = expected_threat_risks(base, d, Aggregation::ThreatMeanOfMeans, Distribution::Uniform);
            const auto after = expected_threat_risks(s, d, Aggregation::ThreatMeanOfMeans, Distribution::Uniform);
            CHECK(after[ti] == doctest::Approx(c * before[ti]).epsilon(1e-12));
            const double total_before =
                expected_scenario_risk(base, d, Aggregation::ThreatMeanOfMeans, Distribution::Uniform);
            const double total_after = expected_scenario_risk(s, d, Aggregation::ThreatMeanOfMeans, Distribution::Uniform);
            CHECK(total_before - total_after ==
                  doctest::Approx((1.0 - c) * before[ti] / static_cast<double>(s.threats.size())).epsilon(1e-9));
        }
    }
}

TEST_CASE("widening any range never lowers the expected pair risk (property)") {
    std::mt19937_64 gen(99);
    for (Distribution dist : {Distribution::Uniform, Distribution::TriangularLowMode}) {
        for (int k = 0; k < 200; ++k) {
            PairRanges p{testing::random_range(gen), testing::random_range(gen), testing::random_range(gen)};
            const double before = expected_pair_risk(1.0, p, dist);
            BoundedRange* target[] = {&p.threat, &p.vulnerability, &p.impact};
            BoundedRange& r = *target[gen() % 3];
            if (gen() % 2 == 0) {
                r.hi = r.hi + (1.0 - r.hi) * testing::unit(gen);
            } else {
                r.lo = r.lo + (r.hi - r.lo) * testing::unit(gen);  // raising lo
            }
            CHECK(expected_pair_risk(1.0, p, dist) >= before);
        }
    }
}
