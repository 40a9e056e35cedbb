#pragma once

#include <optional>
#include <span>
#include <string>

#include "lotto_edge/breakeven.hpp"
#include "lotto_edge/oracle_sim.hpp"
#include "lotto_edge/returns.hpp"
#include "lotto_edge/risk_portfolio.hpp"
#include "lotto_edge/rollover.hpp"

namespace lotto_edge {

// Plain-text "key: value" reports. Every number is printed with 6
// significant figures so that golden outputs stay stable.

std::string format_number(double value);

std::string stats_report(const LotteryConfig& config, const LotteryStats& stats);

std::string eror_report(const LotteryConfig& config, const DrawingParams& drawing,
                        const ERoRBreakdown& breakdown,
                        std::optional<double> quick_pick_fraction = std::nullopt);

std::string classification_report(const BetClassification& classification);

// CSV with header x,y.
std::string curve_csv(std::span<const CurvePoint> points);

std::string forecast_report(const RolloverForecast& forecast,
                            std::optional<double> arrivals_per_year = std::nullopt);

std::string variance_report(const LotteryVariance& variance);

struct LotteryScreen {
    double r_l = 0.0;
    double v = 0.0;
    double z2_floor = kDefaultZ2Floor;
    double threshold = 0.0;
    bool negligible = false;
    std::optional<double> universe_floor;  // smallest positive Z_k of the risky assets
    PortfolioSolution augmented;
};

std::string portfolio_report(const AssetUniverse& universe, const PortfolioSolution& solution,
                             const std::optional<LotteryScreen>& screen = std::nullopt);

std::string simulation_report(const SimResult& result, double analytic_eror);

}  // namespace lotto_edge
