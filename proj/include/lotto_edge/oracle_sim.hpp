#pragma once

#include <cstdint>
#include <string>

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

// Brute-force and Monte-Carlo checks of the analytic returns on small lotteries.

inline constexpr double kExhaustiveMaxSales = 5000.0;
inline constexpr std::uint64_t kExhaustiveMaxTickets = 1'000'000;

// s(p, N) from the raw binomial sum over every co-winner count; integer N only.
double exhaustive_share_factor(double p, double N);

/// eRoR from the definitional sums -f + sum_i r_i N s(p_i, N) + J s(1/t, N)
/// with every s evaluated by exhaustive_share_factor. Throws SizeGuard when
/// N > 5000 or t > 10^6, DomainError when N is not an integer.
double exhaustive_eror(const LotteryConfig& config, const DrawingParams& drawing);

/// Exact variance of one ticket's realized rate of return (ticket-price
/// units, not %^2), over the winning tier and the number of co-winners.
/// Same size guard as exhaustive_eror.
double exhaustive_ror_variance(const LotteryConfig& config, const DrawingParams& drawing);

struct SimResult {
    std::uint64_t n_trials = 0;
    double mean_ror = 0.0;
    double var_ror = 0.0;    // unbiased sample variance; 0 for a single trial
    double std_error = 0.0;  // sqrt(var_ror / n_trials)
    std::string rng;         // generator and seeding scheme, for audit trails
};

struct SimOptions {
    unsigned workers = 1;
};

// Trials are split into blocks of this size; block b draws from its own
// std::mt19937_64 seeded with seed_seq{seed_lo, seed_hi, b_lo, b_hi}.
inline constexpr std::uint64_t kSimBlockSize = 1 << 16;

/// Simulates n_trials drawings in which your ticket is fixed and the other
/// N - 1 tickets are uniformly random. Each trial draws the winning tier for
/// your ticket, then the number of other tickets sharing it from
/// Binomial(N - 1, ways / t). The result depends only on the inputs and the
/// seed, not on the number of workers. N must be an integer.
SimResult simulate_drawings(const LotteryConfig& config, const DrawingParams& drawing,
                            std::uint64_t n_trials, std::uint64_t seed,
                            SimOptions options = {});

}  // namespace lotto_edge
