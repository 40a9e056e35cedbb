#include "lotto_edge/returns.hpp"

#include <cmath>

#include <fmt/format.h>

#include "lotto_edge/error.hpp"

namespace lotto_edge {

namespace {

void check_probability(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(fmt::format("probability must lie in (0, 1), got {}", p));
    }
}

void check_sales(double n) {
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw DomainError(fmt::format("ticket count must be positive and finite, got {}", n));
    }
}

// Sharing terms with the other players' ticket count replaced by
// sharing_sales; pools are still funded by the full drawing.N.
ERoRBreakdown breakdown(const LotteryConfig& config, const DrawingParams& drawing,
                        double sharing_sales) {
    const LotteryStats stats = derive_stats(config);
    ERoRBreakdown out;
    out.cost_and_fixed = -stats.f;
    out.pari_terms.reserve(config.pari().size());
    double sum = out.cost_and_fixed;
    for (std::size_t i = 0; i < config.pari().size(); ++i) {
        const double rate = config.pari()[i].rate;
        check_sales(sharing_sales);
        const double term = rate * prob_any_success(config.pari_probability(i), sharing_sales) *
                            (drawing.N / sharing_sales);
        out.pari_terms.push_back(term);
        sum += term;
    }
    out.jackpot_term = drawing.J * share_factor(config.jackpot_probability(), sharing_sales);
    out.total = sum + out.jackpot_term;
    return out;
}

}  // namespace

double prob_any_success(double p, double n) {
    check_probability(p);
    if (!(n >= 0.0)) {
        throw DomainError(fmt::format("exponent must be non-negative, got {}", n));
    }
    return -std::expm1(n * std::log1p(-p));
}

double prob_no_success(double p, double n) {
    check_probability(p);
    if (!(n >= 0.0)) {
        throw DomainError(fmt::format("exponent must be non-negative, got {}", n));
    }
    return std::exp(n * std::log1p(-p));
}

double share_factor(double p, double N) {
    check_probability(p);
    check_sales(N);
    return prob_any_success(p, N) / N;
}

ERoRBreakdown expected_ror(const LotteryConfig& config, const DrawingParams& drawing) {
    return breakdown(config, drawing, drawing.N);
}

bool jackpot_cutoff_test(const LotteryStats& stats, const DrawingParams& drawing) {
    return drawing.J < stats.j0;
}

ERoRBreakdown unpopular_adjusted_ror(const LotteryConfig& config, const DrawingParams& drawing,
                                     double quick_pick_fraction) {
    if (!(quick_pick_fraction > 0.0 && quick_pick_fraction <= 1.0)) {
        throw DomainError(fmt::format("quick-pick fraction must lie in (0, 1], got {}",
                                      quick_pick_fraction));
    }
    return breakdown(config, drawing, quick_pick_fraction * drawing.N);
}

}  // namespace lotto_edge
