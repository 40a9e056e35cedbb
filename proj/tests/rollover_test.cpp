#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "fixtures.hpp"
#include "lotto_edge/error.hpp"
#include "lotto_edge/rollover.hpp"

using namespace lotto_edge;

TEST(SurvivalBound, ZeroRolloversIsCertain) {
    for (const auto& name : fixtures::bundled_names()) {
        EXPECT_EQ(rollover_survival_bound(fixtures::bundled(name), 0), 1.0);
    }
}

TEST(SurvivalBound, PowerballLikeThreeRollovers) {
    const double bound = rollover_survival_bound(fixtures::f082_lottery(), 3);
    EXPECT_NEAR(bound, 0.085434949916, 1e-9);
    EXPECT_NEAR(bound, std::exp(-0.82 * 3), 1e-5);
    EXPECT_LT(bound, 1.0 / 11.0);
}

TEST(SurvivalBound, SmallLotteryOneRollover) {
    // t = 1000 with F = 0.9, so j0 = 900.
    const LotteryConfig toy("toy", 1000, {{100.0, 1}}, {});
    ASSERT_NEAR(derive_stats(toy).j0, 900.0, 1e-9);
    const double bound = rollover_survival_bound(toy, 1);
    EXPECT_NEAR(bound, 0.406386622545, 1e-10);
    EXPECT_NEAR(bound, std::exp(-0.9), 1e-3);
}

TEST(SurvivalBound, RejectsNegativeK) {
    EXPECT_THROW(rollover_survival_bound(fixtures::bundled("powerball"), -1), DomainError);
}

TEST(RolloversToTarget, Examples) {
    EXPECT_EQ(rollovers_to_target(1.19, 2.0, 1.27), 3);
    EXPECT_EQ(rollovers_to_target(1.0, 1.0 + 1e-9, 1.27), 1);
    EXPECT_EQ(rollovers_to_target(1.0, 2.0, 1.27), 3);
}

TEST(RolloversToTarget, ExactPowersLandOnTheTarget) {
    EXPECT_EQ(rollovers_to_target(1.0, 4.0, 2.0), 2);
    EXPECT_EQ(rollovers_to_target(1.0, 1.5 * 1.5 * 1.5, 1.5), 3);
}

TEST(RolloversToTarget, DomainErrors) {
    EXPECT_THROW(rollovers_to_target(1.0, 2.0, 1.0), DomainError);
    EXPECT_THROW(rollovers_to_target(1.0, 2.0, 0.9), DomainError);
    EXPECT_THROW(rollovers_to_target(0.0, 2.0, 1.27), DomainError);
    EXPECT_THROW(rollovers_to_target(1.0, -2.0, 1.27), DomainError);
    EXPECT_THROW(rollovers_to_target(2.0, 2.0, 1.27), DomainError);
    EXPECT_THROW(rollovers_to_target(3.0, 2.0, 1.27), DomainError);
    EXPECT_THROW(rollovers_to_target(1.0, std::numeric_limits<double>::infinity(), 1.27),
                 DomainError);
}

TEST(Forecast, PowerballLike) {
    const auto f = forecast(fixtures::f082_lottery(), 1.19, 2.0);
    EXPECT_EQ(f.k, 3);
    EXPECT_NEAR(f.survival_probability_bound, 0.0854, 1e-4);
    EXPECT_LT(f.survival_probability_bound, 1.0 / 11.0);
    EXPECT_EQ(f.growth_ratio, kDefaultGrowthRatio);
}

TEST(Forecast, TinyStep) {
    const auto config = fixtures::f082_lottery();
    const auto f = forecast(config, 1.5, 1.5 + 1e-9);
    EXPECT_EQ(f.k, 1);
    EXPECT_NEAR(f.survival_probability_bound, std::exp(-0.82), 1e-6);
}

TEST(Forecast, LottoTexas) {
    const auto f = forecast(fixtures::bundled("lotto-texas"), 1.0, 2.0);
    EXPECT_EQ(f.k, 3);
    EXPECT_NEAR(f.survival_probability_bound, 0.0652, 5e-4);
    EXPECT_NEAR(f.survival_probability_bound, std::exp(-3 * derive_stats(fixtures::bundled("lotto-texas")).F), 1e-5);
}

TEST(SurvivalBoundProperty, MultiplicativeAndDecreasing) {
    for (const auto& name : fixtures::bundled_names()) {
        const auto config = fixtures::bundled(name);
        double previous = 1.0;
        for (int k = 1; k <= 12; ++k) {
            const double b = rollover_survival_bound(config, k);
            EXPECT_LT(b, previous);
            previous = b;
            for (int j = 0; j <= k; ++j) {
                const double product =
                    rollover_survival_bound(config, j) * rollover_survival_bound(config, k - j);
                EXPECT_NEAR(product / b, 1.0, 1e-13) << name << " " << j << "+" << k - j;
            }
        }
    }
}

TEST(SurvivalBoundProperty, LimitingValueIsAccurateForMajorLotteries) {
    std::vector<LotteryConfig> configs;
    for (const auto& name : fixtures::bundled_names()) configs.push_back(fixtures::bundled(name));
    configs.push_back(fixtures::jackpot_only(1000));
    configs.push_back(LotteryConfig("t-500", 500, {{20.0, 5}}, {{0.05, 3}}));
    for (const auto& config : configs) {
        const double F = derive_stats(config).F;
        const double exact = rollover_survival_bound(config, 1);
        EXPECT_LT(std::abs(exact - std::exp(-F)) / std::exp(-F), 1e-3) << config.name();
    }
}

TEST(RolloversToTargetProperty, AntitoneInGrowthMonotoneInTarget) {
    for (double current : {0.5, 1.0, 1.19, 1.7}) {
        int previous = std::numeric_limits<int>::max();
        for (double g = 1.05; g < 3.0; g += 0.05) {
            const int k = rollovers_to_target(current, 2.6, g);
            EXPECT_LE(k, previous);
            previous = k;
        }
        int last = 1;
        for (double target = current + 0.01; target < 10.0; target += 0.1) {
            const int k = rollovers_to_target(current, target, 1.27);
            EXPECT_GE(k, last);
            last = k;
            EXPECT_GE(current * std::pow(1.27, k), target * (1 - 1e-12));
            EXPECT_LT(current * std::pow(1.27, k - 1), target);
        }
    }
}
