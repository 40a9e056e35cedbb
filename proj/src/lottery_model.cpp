#include "lotto_edge/lottery_model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lotto_edge/error.hpp"

namespace lotto_edge {

LotteryConfig::LotteryConfig(std::string name, std::uint64_t tickets,
                             std::vector<FixedPrize> fixed,
                             std::vector<PariMutuelPool> pari)
    : name_(std::move(name)), tickets_(tickets), fixed_(std::move(fixed)),
      pari_(std::move(pari)) {
    if (tickets_ == 0) {
        throw ConfigError(fmt::format("lottery '{}': ticket count must be positive", name_));
    }
    // The jackpot ticket itself.
    std::uint64_t winning_ways = 1;
    for (std::size_t i = 0; i < fixed_.size(); ++i) {
        const auto& prize = fixed_[i];
        if (!(prize.payout_after_tax > 0.0) || !std::isfinite(prize.payout_after_tax)) {
            throw ConfigError(
                fmt::format("lottery '{}': fixed prize {} has non-positive payout", name_, i));
        }
        if (prize.ways == 0) {
            throw ConfigError(fmt::format("lottery '{}': fixed prize {} has zero ways", name_, i));
        }
        winning_ways += prize.ways;
    }
    for (std::size_t i = 0; i < pari_.size(); ++i) {
        const auto& pool = pari_[i];
        if (!(pool.rate > 0.0 && pool.rate < 1.0)) {
            throw ConfigError(
                fmt::format("lottery '{}': pari-mutuel rate {} must lie in (0, 1)", name_, i));
        }
        if (pool.ways == 0) {
            throw ConfigError(fmt::format("lottery '{}': pari pool {} has zero ways", name_, i));
        }
        winning_ways += pool.ways;
    }
    if (winning_ways > tickets_) {
        throw ConfigError(fmt::format(
            "lottery '{}': {} winning tickets exceed the {} distinct tickets", name_,
            winning_ways, tickets_));
    }
}

double LotteryConfig::jackpot_probability() const noexcept {
    return 1.0 / static_cast<double>(tickets_);
}

double LotteryConfig::pari_probability(std::size_t i) const {
    return static_cast<double>(pari_.at(i).ways) / static_cast<double>(tickets_);
}

std::vector<std::string> LotteryConfig::warnings() const {
    std::vector<std::string> out;
    if (!is_major()) {
        out.push_back(fmt::format("lottery '{}' has only {} tickets (< {}); bound rules do not apply",
                                  name_, tickets_, kMajorTicketCount));
    }
    return out;
}

DrawingParams::DrawingParams(double sales, double jackpot) : N(sales), J(jackpot) {
    if (!(N > 0.0) || !std::isfinite(N)) {
        throw DomainError(fmt::format("ticket sales N must be positive, got {}", N));
    }
    if (!(J > 0.0) || !std::isfinite(J)) {
        throw DomainError(fmt::format("jackpot J must be positive, got {}", J));
    }
}

LotteryStats derive_stats(const LotteryConfig& config) {
    const double t = static_cast<double>(config.tickets());
    double fixed_payout = 0.0;
    for (const auto& prize : config.fixed()) {
        fixed_payout += prize.payout_after_tax * static_cast<double>(prize.ways);
    }
    double pari_rates = 0.0;
    for (const auto& pool : config.pari()) {
        pari_rates += pool.rate;
    }

    LotteryStats stats;
    stats.f = 1.0 - fixed_payout / t;
    stats.F = stats.f - pari_rates;
    if (!(stats.f > 0.0)) {
        throw ConfigError(fmt::format(
            "lottery '{}': fixed prizes return more than the ticket price (f = {})",
            config.name(), stats.f));
    }
    if (!(stats.F > 0.0)) {
        throw ConfigError(fmt::format(
            "lottery '{}': non-jackpot prizes return more than the ticket price (F = {})",
            config.name(), stats.F));
    }
    stats.j0 = stats.F * t;
    return stats;
}

double apply_withholding(double pre_tax_payout, double tax_rate, double threshold) {
    if (!(tax_rate >= 0.0 && tax_rate < 1.0)) {
        throw DomainError(fmt::format("tax rate must lie in [0, 1), got {}", tax_rate));
    }
    if (!(threshold >= 0.0)) {
        throw DomainError(fmt::format("withholding threshold must be >= 0, got {}", threshold));
    }
    return pre_tax_payout > threshold ? pre_tax_payout * (1.0 - tax_rate) : pre_tax_payout;
}

}  // namespace lotto_edge
