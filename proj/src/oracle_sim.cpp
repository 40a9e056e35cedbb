#include "lotto_edge/oracle_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "lotto_edge/binomial_series.hpp"
#include "lotto_edge/error.hpp"

namespace lotto_edge {

namespace {

void require_integral_sales(double N) {
    if (!(N >= 1.0) || std::floor(N) != N) {
        throw DomainError(fmt::format("this oracle needs a positive integer N, got {}", N));
    }
}

void require_tractable(const LotteryConfig& config, const DrawingParams& drawing) {
    require_integral_sales(drawing.N);
    if (drawing.N > kExhaustiveMaxSales) {
        throw SizeGuard(fmt::format("N = {} exceeds the exhaustive limit {}", drawing.N,
                                    kExhaustiveMaxSales));
    }
    if (config.tickets() > kExhaustiveMaxTickets) {
        throw SizeGuard(fmt::format("t = {} exceeds the exhaustive limit {}", config.tickets(),
                                    kExhaustiveMaxTickets));
    }
}

double fixed_prize_value(const LotteryConfig& config) {
    const double t = static_cast<double>(config.tickets());
    double sum = 0.0;
    for (const auto& prize : config.fixed()) {
        sum += prize.payout_after_tax * static_cast<double>(prize.ways) / t;
    }
    return sum;
}

// Running mean and sum of squared deviations (Welford), mergeable (Chan et al.).
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (x - mean);
    }

    void merge(const Moments& other) {
        if (other.n == 0) return;
        if (n == 0) {
            *this = other;
            return;
        }
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(other.n);
        const double total = na + nb;
        const double delta = other.mean - mean;
        mean += delta * nb / total;
        m2 += other.m2 + delta * delta * na * nb / total;
        n += other.n;
    }
};

// Ticket index layout: [0] jackpot, then fixed tiers, then pari tiers, then losers.
class TrialSampler {
public:
    TrialSampler(const LotteryConfig& config, const DrawingParams& drawing)
        : config_(config), drawing_(drawing), ticket_(0, config.tickets() - 1) {
        const auto others = static_cast<std::uint64_t>(drawing.N) - 1;
        jackpot_cowinners_ = std::binomial_distribution<std::uint64_t>(
            others, config.jackpot_probability());
        std::uint64_t edge = 1;
        for (const auto& prize : config.fixed()) {
            edge += prize.ways;
            fixed_edges_.push_back(edge);
        }
        for (std::size_t i = 0; i < config.pari().size(); ++i) {
            edge += config.pari()[i].ways;
            pari_edges_.push_back(edge);
            pari_cowinners_.emplace_back(others, config.pari_probability(i));
        }
    }

    double operator()(std::mt19937_64& rng) {
        const std::uint64_t ticket = ticket_(rng);
        if (ticket == 0) {
            const auto sharers = 1 + jackpot_cowinners_(rng);
            return drawing_.J / static_cast<double>(sharers) - 1.0;
        }
        auto it = std::upper_bound(fixed_edges_.begin(), fixed_edges_.end(), ticket);
        if (it != fixed_edges_.end()) {
            return config_.fixed()[static_cast<std::size_t>(it - fixed_edges_.begin())]
                       .payout_after_tax -
                   1.0;
        }
        it = std::upper_bound(pari_edges_.begin(), pari_edges_.end(), ticket);
        if (it != pari_edges_.end()) {
            const auto tier = static_cast<std::size_t>(it - pari_edges_.begin());
            const auto sharers = 1 + pari_cowinners_[tier](rng);
            return config_.pari()[tier].rate * drawing_.N / static_cast<double>(sharers) - 1.0;
        }
        return -1.0;
    }

private:
    const LotteryConfig& config_;
    DrawingParams drawing_;
    std::uniform_int_distribution<std::uint64_t> ticket_;
    std::binomial_distribution<std::uint64_t> jackpot_cowinners_;
    std::vector<std::uint64_t> fixed_edges_;
    std::vector<std::uint64_t> pari_edges_;
    std::vector<std::binomial_distribution<std::uint64_t>> pari_cowinners_;
};

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

double exhaustive_share_factor(double p, double N) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(fmt::format("probability must lie in (0, 1), got {}", p));
    }
    require_integral_sales(N);
    return sum_cowinner_series(
        N, p, [](double w) { return 1.0 / w; }, SeriesTruncation::Exhaustive);
}

double exhaustive_eror(const LotteryConfig& config, const DrawingParams& drawing) {
    require_tractable(config, drawing);
    double total = -1.0 + fixed_prize_value(config);
    for (std::size_t i = 0; i < config.pari().size(); ++i) {
        total += config.pari()[i].rate * drawing.N *
                 exhaustive_share_factor(config.pari_probability(i), drawing.N);
    }
    return total + drawing.J * exhaustive_share_factor(config.jackpot_probability(), drawing.N);
}

double exhaustive_ror_variance(const LotteryConfig& config, const DrawingParams& drawing) {
    require_tractable(config, drawing);
    const double t = static_cast<double>(config.tickets());
    const double N = drawing.N;

    // E[payout] and E[payout^2]; the loss tier pays 0.
    CompensatedSum first, second;
    const auto add_shared = [&](double pool, double p) {
        first.add(sum_cowinner_series(N, p, [pool](double w) { return pool / w; },
                                      SeriesTruncation::Exhaustive));
        second.add(sum_cowinner_series(
            N, p, [pool](double w) { return (pool / w) * (pool / w); },
            SeriesTruncation::Exhaustive));
    };
    add_shared(drawing.J, config.jackpot_probability());
    for (std::size_t i = 0; i < config.pari().size(); ++i) {
        add_shared(config.pari()[i].rate * N, config.pari_probability(i));
    }
    for (const auto& prize : config.fixed()) {
        const double p = static_cast<double>(prize.ways) / t;
        first.add(prize.payout_after_tax * p);
        second.add(prize.payout_after_tax * prize.payout_after_tax * p);
    }
    // Var(payout - 1) = Var(payout).
    const double mean = first.value();
    return second.value() - mean * mean;
}

SimResult simulate_drawings(const LotteryConfig& config, const DrawingParams& drawing,
                            std::uint64_t n_trials, std::uint64_t seed, SimOptions options) {
    if (n_trials == 0) {
        throw DomainError("simulation needs at least one trial");
    }
    require_integral_sales(drawing.N);

    const std::uint64_t blocks = (n_trials + kSimBlockSize - 1) / kSimBlockSize;
    std::vector<Moments> block_moments(blocks);
    const auto run_block = [&](std::uint64_t b) {
        TrialSampler sample(config, drawing);
        auto rng = block_rng(seed, b);
        const std::uint64_t begin = b * kSimBlockSize;
        const std::uint64_t end = std::min(n_trials, begin + kSimBlockSize);
        Moments m;
        for (std::uint64_t i = begin; i < end; ++i) {
            m.add(sample(rng));
        }
        block_moments[b] = m;
    };

    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(options.workers, 1, blocks));
    if (workers == 1) {
        for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t b = w; b < blocks; b += workers) run_block(b);
            });
        }
    }

    Moments total;
    for (const auto& m : block_moments) total.merge(m);

    SimResult out;
    out.n_trials = n_trials;
    out.mean_ror = total.mean;
    out.var_ror = n_trials > 1 ? total.m2 / static_cast<double>(n_trials - 1) : 0.0;
    out.std_error = std::sqrt(out.var_ror / static_cast<double>(n_trials));
    out.rng = fmt::format("mt19937_64/seed_seq(seed={},block)/block_size={}", seed, kSimBlockSize);
    return out;
}

}  // namespace lotto_edge
