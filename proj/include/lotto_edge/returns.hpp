#pragma once

#include <vector>

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

/// Expected rate of return of one ticket, split by prize tier.
///
/// total = cost_and_fixed + sum(pari_terms) + jackpot_term.
struct ERoRBreakdown {
    double cost_and_fixed = 0.0;     // -f
    std::vector<double> pari_terms;  // r_i * (1 - (1 - p_i)^N)
    double jackpot_term = 0.0;       // J * s(1/t, N)
    double total = 0.0;
};

// 1 - (1 - p)^n, evaluated as -expm1(n * log1p(-p)) so that p ~ 1e-9 with
// n ~ 1e8 keeps full precision. Requires 0 < p < 1 and n >= 0.
double prob_any_success(double p, double n);

// (1 - p)^n through the same log1p/exp route.
double prob_no_success(double p, double n);

/// Expected share of a prize when your ticket wins it and the other N - 1
/// tickets are uniformly random: s(p, N) = (1 - (1 - p)^N) / N.
///
/// Throws DomainError unless 0 < p < 1 and N > 0.
double share_factor(double p, double N);

/// -f + sum_i r_i (1 - (1 - p_i)^N) + J s(1/t, N).
ERoRBreakdown expected_ror(const LotteryConfig& config, const DrawingParams& drawing);

// True iff J < j0, in which case the ticket is certainly a bad bet.
bool jackpot_cutoff_test(const LotteryStats& stats, const DrawingParams& drawing);

/// Upper bound on the return of playing numbers nobody picks by hand: only
/// the quick_pick_fraction of sales can share a prize with you. The reduced
/// count replaces N in every sharing term, pari-mutuel pools included; the
/// pari pools themselves still pay rate * N. The fixed-prize term is unchanged.
ERoRBreakdown unpopular_adjusted_ror(const LotteryConfig& config, const DrawingParams& drawing,
                                     double quick_pick_fraction);

}  // namespace lotto_edge
