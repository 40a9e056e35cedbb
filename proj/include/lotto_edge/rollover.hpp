#pragma once

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

// Largest jackpot growth per rollover observed for big jackpots.
inline constexpr double kDefaultGrowthRatio = 1.27;

struct RolloverForecast {
    int k = 0;                                // rollovers needed to reach the target
    double survival_probability_bound = 1.0;  // (1 - 1/t)^{k j0}
    double growth_ratio = kDefaultGrowthRatio;
};

/// Upper bound on the chance that a jackpot at or above j0 rolls over k more
/// times, assuming every such drawing sells at least j0 tickets:
/// (1 - 1/t)^{k j0}, roughly e^{-kF} for large t.
double rollover_survival_bound(const LotteryConfig& config, int k);

// Smallest k with current_ratio * growth_ratio^k >= target_ratio.
int rollovers_to_target(double current_ratio, double target_ratio,
                        double growth_ratio = kDefaultGrowthRatio);

RolloverForecast forecast(const LotteryConfig& config, double current_ratio, double target_ratio,
                          double growth_ratio = kDefaultGrowthRatio);

}  // namespace lotto_edge
