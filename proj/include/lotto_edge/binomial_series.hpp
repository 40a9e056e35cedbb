#pragma once

#include <cmath>
#include <cstdint>

namespace lotto_edge {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double value) noexcept {
        const double t = sum_ + value;
        if (std::abs(sum_) >= std::abs(value)) {
            compensation_ += (sum_ - t) + value;
        } else {
            compensation_ += (value - t) + sum_;
        }
        sum_ = t;
    }
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

enum class SeriesTruncation {
    // Stop once w is more than 12 standard deviations above the mean N p and
    // the latest weight times the bound on the remaining terms is below 1e-18
    // of the running total.
    Adaptive,
    // Sum every w with w <= N.
    Exhaustive,
};

/// Sums term(w) * C(N-1, w-1) p^w (1-p)^{N-w} over w = 1, 2, ... with w <= N.
///
/// The weight is the probability that your ticket wins a tier of probability p
/// together with exactly w - 1 of the other N - 1 uniformly random tickets.
/// Weights are propagated in log space so that terms far from the mode
/// underflow to zero instead of poisoning the recurrence.
///
/// bound(w) must dominate |term(w')| for every w' >= w; the default |term(w)|
/// is right for terms whose magnitude does not increase with w.
template <class Term, class Bound>
double sum_cowinner_series(double N, double p, Term&& term, Bound&& bound,
                           SeriesTruncation mode = SeriesTruncation::Adaptive) {
    const double log_odds = std::log(p) - std::log1p(-p);
    const double mean = N * p;
    const double tail = mean + 12.0 * std::sqrt(N * p * (1.0 - p));
    double log_weight = std::log(p) + (N - 1.0) * std::log1p(-p);

    CompensatedSum total;
    for (std::uint64_t w = 1; static_cast<double>(w) <= N; ++w) {
        const double wd = static_cast<double>(w);
        const double contribution = term(wd) * std::exp(log_weight);
        total.add(contribution);
        if (mode == SeriesTruncation::Adaptive && wd > tail &&
            bound(wd) * std::exp(log_weight) < 1e-18 * std::abs(total.value())) {
            break;
        }
        if (wd + 1.0 > N) {
            break;
        }
        log_weight += std::log((N - wd) / wd) + log_odds;
    }
    return total.value();
}

template <class Term>
double sum_cowinner_series(double N, double p, Term&& term,
                           SeriesTruncation mode = SeriesTruncation::Adaptive) {
    return sum_cowinner_series(
        N, p, term, [&term](double w) { return std::abs(term(w)); }, mode);
}

}  // namespace lotto_edge
