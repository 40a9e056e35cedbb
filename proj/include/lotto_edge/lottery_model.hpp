#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lotto_edge {

// All money amounts are doubles in units of the ticket price.

struct FixedPrize {
    double payout_after_tax = 0.0;
    std::uint64_t ways = 0;  // distinct tickets winning this prize
};

// A pool of rate * N split among every ticket matching this tier.
struct PariMutuelPool {
    double rate = 0.0;  // fraction of net sales, already net of tax
    std::uint64_t ways = 0;
};

/// Static rules of one rolling-jackpot lottery.
///
/// The jackpot is always won by exactly one of the t distinct tickets; the
/// fixed and pari-mutuel tiers account for the remaining winning tickets.
/// Construction validates the prize table and throws ConfigError on
/// violations. Lotteries with fewer than 500 tickets are accepted (they make
/// handy test fixtures) but is_major() reports false and the bound-based
/// classifiers refuse them.
class LotteryConfig {
public:
    static constexpr std::uint64_t kMajorTicketCount = 500;

    LotteryConfig(std::string name, std::uint64_t tickets,
                  std::vector<FixedPrize> fixed, std::vector<PariMutuelPool> pari);

    const std::string& name() const noexcept { return name_; }
    std::uint64_t tickets() const noexcept { return tickets_; }
    const std::vector<FixedPrize>& fixed() const noexcept { return fixed_; }
    const std::vector<PariMutuelPool>& pari() const noexcept { return pari_; }

    bool is_major() const noexcept { return tickets_ >= kMajorTicketCount; }

    // Probability that a single random ticket wins the jackpot, 1/t.
    double jackpot_probability() const noexcept;
    // ways / t for pari pool i.
    double pari_probability(std::size_t i) const;

    // Human-readable warnings (currently only the minor-lottery flag).
    std::vector<std::string> warnings() const;

private:
    std::string name_;
    std::uint64_t tickets_;
    std::vector<FixedPrize> fixed_;
    std::vector<PariMutuelPool> pari_;
};

/// Per-lottery constants. f is the ticket cost less the expected fixed-prize
/// winnings, F additionally subtracts every pari-mutuel rate, and j0 = F * t
/// is the jackpot cutoff below which every ticket is a bad bet.
struct LotteryStats {
    double f = 0.0;
    double F = 0.0;
    double j0 = 0.0;
};

// One drawing: total sales N (tickets) and after-tax lump-sum jackpot J.
// N is real-valued; the sharing formulas extend to non-integral sales.
struct DrawingParams {
    double N = 0.0;
    double J = 0.0;

    DrawingParams() = default;
    DrawingParams(double sales, double jackpot);
};

// Throws ConfigError if f <= 0 or F <= 0.
LotteryStats derive_stats(const LotteryConfig& config);

inline constexpr double kDefaultTaxRate = 0.25;
inline constexpr double kDefaultWithholdingThreshold = 5000.0;

// Deducts withholding from a pre-tax prize strictly above threshold.
double apply_withholding(double pre_tax_payout, double tax_rate = kDefaultTaxRate,
                         double threshold = kDefaultWithholdingThreshold);

}  // namespace lotto_edge
