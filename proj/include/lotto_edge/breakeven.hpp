#pragma once

#include <string_view>
#include <vector>

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

// Drawing in normalized coordinates x = N / J and y = J / j0.
struct NormalizedDrawing {
    double x = 0.0;
    double y = 0.0;
};

NormalizedDrawing normalize(const LotteryStats& stats, const DrawingParams& drawing);

enum class Verdict { Positive, Negative, Inconclusive };

enum class Rule {
    Cutoff,          // y < 1
    AboveU,          // above the universal upper curve U
    BelowL,          // below or right of the universal lower curve L
    ExactCurve,      // compared against the lottery's own break-even curve
    SmallSalesRect,  // N < 0.2 J and J > 1.4 j0
    LargeSalesRect,  // N > 1.12 J and J < 2 j0
    None,            // no rule decided the drawing
};

std::string_view to_string(Verdict verdict);
std::string_view to_string(Rule rule);

struct BetClassification {
    Verdict verdict = Verdict::Inconclusive;
    Rule rule = Rule::None;
    NormalizedDrawing coords;
};

// Universal bounding curves, valid for every major lottery with F >= 0.8.
//   U: -1   + (1 - 0.45^{xy}) / x = 0
//   L: -0.8 + (1 - 0.36^{xy}) / x = 0
namespace bounds {
inline constexpr double kUpperBase = 0.45;
inline constexpr double kUpperLevel = 1.0;
inline constexpr double kLowerBase = 0.36;
inline constexpr double kLowerLevel = 0.8;
inline constexpr double kMinF = 0.8;

// Residual -level + (1 - base^{xy}) / x of a one-term curve.
double one_term_residual(double base, double level, double x, double y);
// y on the one-term curve, ln(1 - level x) / (x ln base); +inf once x >= 1/level.
double one_term_curve(double base, double level, double x);

// Points whose residual magnitude falls below this are treated as lying on U or L.
inline constexpr double kBoundaryTolerance = 1e-12;

double upper_curve(double x);  // U(x)
double lower_curve(double x);  // L(x)
}  // namespace bounds

// Throws HypothesisViolation unless t >= 500 and F >= 0.8.
void require_bound_hypotheses(const LotteryConfig& config);

/// Classifies a drawing with the cutoff rule and the curves U and L. The
/// caller vouches that the lottery satisfies the bound hypotheses; use the
/// config overload to have them checked. Points within kBoundaryTolerance of
/// U or L are INCONCLUSIVE.
BetClassification general_bound_classify(const NormalizedDrawing& coords);
BetClassification general_bound_classify(const LotteryConfig& config,
                                         const DrawingParams& drawing);

// N < 0.2 J and J > 1.4 j0; implies positive eRoR.
bool small_sales_rule(const DrawingParams& drawing, const LotteryStats& stats);
// N > 1.12 J and J < 2 j0; implies negative eRoR.
bool large_sales_rule(const DrawingParams& drawing, const LotteryStats& stats);

// Both rectangles plus the cutoff rule. Checks the bound hypotheses.
BetClassification rectangle_classify(const LotteryConfig& config, const DrawingParams& drawing);

/// eRoR as a function of normalized coordinates,
///   -f + sum_i r_i (1 - (1 - p_i)^{x y j0}) + (1 - (1 - 1/t)^{x y j0}) / x.
double normalized_eror(const LotteryConfig& config, const LotteryStats& stats, double x,
                       double y);

/// The break-even curve y = l(x), defined on 0 < x < 1/F.
///
/// At fixed x the eRoR is strictly increasing in y, so the root is found by
/// bisection on [0, y_hi] with y_hi doubled until the sign changes. The
/// bisection runs until the bracket stops shrinking, well past the 1e-9
/// relative accuracy the classifiers need. Throws DomainError outside (0, 1/F).
double breakeven_curve(const LotteryConfig& config, double x);

/// POSITIVE iff y > l(x), NEGATIVE otherwise (zero eRoR is not a good bet).
/// Drawings with x >= 1/F are NEGATIVE without solving for the curve.
BetClassification exact_curve_classify(const LotteryConfig& config,
                                       const DrawingParams& drawing);

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;
};

// n points of the break-even curve on a geometric grid from x_min to x_max.
std::vector<CurvePoint> curve_points(const LotteryConfig& config, double x_min, double x_max,
                                     int n);

}  // namespace lotto_edge
