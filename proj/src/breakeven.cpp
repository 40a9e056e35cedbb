#include "lotto_edge/breakeven.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "lotto_edge/error.hpp"
#include "lotto_edge/returns.hpp"

namespace lotto_edge {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSmallSalesX = 0.2;
constexpr double kSmallSalesY = 1.4;
constexpr double kLargeSalesX = 1.12;
constexpr double kLargeSalesY = 2.0;

void check_x(const LotteryStats& stats, double x) {
    if (!(x > 0.0)) {
        throw DomainError(fmt::format("x = N/J must be positive, got {}", x));
    }
    if (x * stats.F >= 1.0) {
        throw DomainError(fmt::format(
            "x = {} is outside (0, 1/F) = (0, {}); every such drawing has negative eRoR", x,
            1.0 / stats.F));
    }
}

}  // namespace

std::string_view to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Positive: return "POSITIVE";
        case Verdict::Negative: return "NEGATIVE";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::string_view to_string(Rule rule) {
    switch (rule) {
        case Rule::Cutoff: return "CUTOFF";
        case Rule::AboveU: return "ABOVE_U";
        case Rule::BelowL: return "BELOW_L";
        case Rule::ExactCurve: return "EXACT_CURVE";
        case Rule::SmallSalesRect: return "SMALL_SALES_RECT";
        case Rule::LargeSalesRect: return "LARGE_SALES_RECT";
        case Rule::None: return "NONE";
    }
    return "?";
}

NormalizedDrawing normalize(const LotteryStats& stats, const DrawingParams& drawing) {
    return {drawing.N / drawing.J, drawing.J / stats.j0};
}

namespace bounds {

double one_term_residual(double base, double level, double x, double y) {
    // 1 - base^{xy} = -expm1(xy ln base)
    return -level - std::expm1(x * y * std::log(base)) / x;
}

double one_term_curve(double base, double level, double x) {
    if (!(x > 0.0)) {
        throw DomainError(fmt::format("x must be positive, got {}", x));
    }
    if (level * x >= 1.0) {
        return kInf;
    }
    return std::log1p(-level * x) / (x * std::log(base));
}

double upper_curve(double x) { return one_term_curve(kUpperBase, kUpperLevel, x); }
double lower_curve(double x) { return one_term_curve(kLowerBase, kLowerLevel, x); }

}  // namespace bounds

void require_bound_hypotheses(const LotteryConfig& config) {
    if (!config.is_major()) {
        throw HypothesisViolation(fmt::format(
            "lottery '{}' has {} tickets; the bound rules need at least {}", config.name(),
            config.tickets(), LotteryConfig::kMajorTicketCount));
    }
    const LotteryStats stats = derive_stats(config);
    if (stats.F < bounds::kMinF) {
        throw HypothesisViolation(fmt::format(
            "lottery '{}' has F = {}; the bound rules need F >= {}", config.name(), stats.F,
            bounds::kMinF));
    }
}

BetClassification general_bound_classify(const NormalizedDrawing& coords) {
    if (!(coords.x > 0.0 && coords.y > 0.0)) {
        throw DomainError(
            fmt::format("normalized coordinates must be positive, got ({}, {})", coords.x, coords.y));
    }
    using namespace bounds;
    if (coords.y < 1.0) {
        return {Verdict::Negative, Rule::Cutoff, coords};
    }
    if (one_term_residual(kUpperBase, kUpperLevel, coords.x, coords.y) > kBoundaryTolerance) {
        return {Verdict::Positive, Rule::AboveU, coords};
    }
    if (one_term_residual(kLowerBase, kLowerLevel, coords.x, coords.y) < -kBoundaryTolerance) {
        return {Verdict::Negative, Rule::BelowL, coords};
    }
    return {Verdict::Inconclusive, Rule::None, coords};
}

BetClassification general_bound_classify(const LotteryConfig& config,
                                         const DrawingParams& drawing) {
    require_bound_hypotheses(config);
    return general_bound_classify(normalize(derive_stats(config), drawing));
}

bool small_sales_rule(const DrawingParams& drawing, const LotteryStats& stats) {
    return drawing.N < kSmallSalesX * drawing.J && drawing.J > kSmallSalesY * stats.j0;
}

bool large_sales_rule(const DrawingParams& drawing, const LotteryStats& stats) {
    return drawing.N > kLargeSalesX * drawing.J && drawing.J < kLargeSalesY * stats.j0;
}

BetClassification rectangle_classify(const LotteryConfig& config, const DrawingParams& drawing) {
    require_bound_hypotheses(config);
    const LotteryStats stats = derive_stats(config);
    const NormalizedDrawing coords = normalize(stats, drawing);
    if (jackpot_cutoff_test(stats, drawing)) {
        return {Verdict::Negative, Rule::Cutoff, coords};
    }
    if (small_sales_rule(drawing, stats)) {
        return {Verdict::Positive, Rule::SmallSalesRect, coords};
    }
    if (large_sales_rule(drawing, stats)) {
        return {Verdict::Negative, Rule::LargeSalesRect, coords};
    }
    return {Verdict::Inconclusive, Rule::None, coords};
}

double normalized_eror(const LotteryConfig& config, const LotteryStats& stats, double x,
                       double y) {
    const double sales = x * y * stats.j0;
    double total = -stats.f;
    for (std::size_t i = 0; i < config.pari().size(); ++i) {
        total += config.pari()[i].rate * prob_any_success(config.pari_probability(i), sales);
    }
    return total + prob_any_success(config.jackpot_probability(), sales) / x;
}

double breakeven_curve(const LotteryConfig& config, double x) {
    const LotteryStats stats = derive_stats(config);
    check_x(stats, x);

    double lo = 0.0;
    double hi = 1.0;
    while (normalized_eror(config, stats, x, hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (!std::isfinite(hi)) {
            throw DomainError(fmt::format("no break-even point found at x = {}", x));
        }
    }
    // Invariant: eRoR(lo) <= 0 < eRoR(hi). Returning lo keeps the curve
    // consistent with a direct evaluation of the sign at any y.
    for (int iter = 0; iter < 4096; ++iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (normalized_eror(config, stats, x, mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return lo;
}

BetClassification exact_curve_classify(const LotteryConfig& config,
                                       const DrawingParams& drawing) {
    const LotteryStats stats = derive_stats(config);
    const NormalizedDrawing coords = normalize(stats, drawing);
    if (coords.x * stats.F >= 1.0) {
        return {Verdict::Negative, Rule::ExactCurve, coords};
    }
    const double level = breakeven_curve(config, coords.x);
    return {coords.y > level ? Verdict::Positive : Verdict::Negative, Rule::ExactCurve, coords};
}

std::vector<CurvePoint> curve_points(const LotteryConfig& config, double x_min, double x_max,
                                     int n) {
    if (n < 2) {
        throw DomainError(fmt::format("need at least 2 curve points, got {}", n));
    }
    const LotteryStats stats = derive_stats(config);
    check_x(stats, x_min);
    check_x(stats, x_max);
    if (!(x_min < x_max)) {
        throw DomainError(fmt::format("x_min = {} must be below x_max = {}", x_min, x_max));
    }
    std::vector<CurvePoint> points;
    points.reserve(static_cast<std::size_t>(n));
    const double log_ratio = std::log(x_max / x_min);
    for (int i = 0; i < n; ++i) {
        double x = x_min * std::exp(log_ratio * i / (n - 1));
        if (i == 0) x = x_min;
        if (i == n - 1) x = x_max;
        points.push_back({x, breakeven_curve(config, x)});
    }
    return points;
}

}  // namespace lotto_edge
