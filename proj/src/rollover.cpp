#include "lotto_edge/rollover.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lotto_edge/error.hpp"
#include "lotto_edge/returns.hpp"

namespace lotto_edge {

double rollover_survival_bound(const LotteryConfig& config, int k) {
    if (k < 0) {
        throw DomainError(fmt::format("rollover count must be >= 0, got {}", k));
    }
    if (k == 0) {
        return 1.0;
    }
    const LotteryStats stats = derive_stats(config);
    return prob_no_success(config.jackpot_probability(), static_cast<double>(k) * stats.j0);
}

int rollovers_to_target(double current_ratio, double target_ratio, double growth_ratio) {
    if (!(current_ratio > 0.0)) {
        throw DomainError(fmt::format("current ratio must be positive, got {}", current_ratio));
    }
    if (!(target_ratio > current_ratio) || !std::isfinite(target_ratio)) {
        throw DomainError(fmt::format("target ratio {} must exceed current ratio {}",
                                      target_ratio, current_ratio));
    }
    if (!(growth_ratio > 1.0) || !std::isfinite(growth_ratio)) {
        throw DomainError(fmt::format("growth ratio must exceed 1, got {}", growth_ratio));
    }
    // The logarithm gives a starting guess; the loops settle rounding at the boundary.
    auto k = static_cast<int>(
        std::ceil(std::log(target_ratio / current_ratio) / std::log(growth_ratio)));
    k = std::max(k, 1);
    while (k > 1 && current_ratio * std::pow(growth_ratio, k - 1) >= target_ratio) {
        --k;
    }
    while (current_ratio * std::pow(growth_ratio, k) < target_ratio) {
        ++k;
    }
    return k;
}

RolloverForecast forecast(const LotteryConfig& config, double current_ratio, double target_ratio,
                          double growth_ratio) {
    RolloverForecast out;
    out.k = rollovers_to_target(current_ratio, target_ratio, growth_ratio);
    out.survival_probability_bound = rollover_survival_bound(config, out.k);
    out.growth_ratio = growth_ratio;
    return out;
}

}  // namespace lotto_edge
