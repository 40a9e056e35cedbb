#include "lotto_edge/report.hpp"

#include <fmt/format.h>

namespace lotto_edge {

std::string format_number(double value) { return fmt::format("{:.6g}", value); }

std::string stats_report(const LotteryConfig& config, const LotteryStats& stats) {
    std::string out;
    out += fmt::format("lottery: {}\n", config.name());
    out += fmt::format("t: {}\n", config.tickets());
    out += fmt::format("f: {}\n", format_number(stats.f));
    out += fmt::format("F: {}\n", format_number(stats.F));
    out += fmt::format("j0: {}\n", format_number(stats.j0));
    for (const auto& warning : config.warnings()) {
        out += fmt::format("warning: {}\n", warning);
    }
    return out;
}

std::string eror_report(const LotteryConfig& config, const DrawingParams& drawing,
                        const ERoRBreakdown& breakdown,
                        std::optional<double> quick_pick_fraction) {
    std::string out;
    out += fmt::format("lottery: {}\n", config.name());
    out += fmt::format("N: {}\n", format_number(drawing.N));
    out += fmt::format("J: {}\n", format_number(drawing.J));
    if (quick_pick_fraction) {
        out += fmt::format("quick_pick_fraction: {}\n", format_number(*quick_pick_fraction));
        out += "note: upper bound for playing unpopular numbers\n";
    }
    out += fmt::format("cost_and_fixed: {}\n", format_number(breakdown.cost_and_fixed));
    for (std::size_t i = 0; i < breakdown.pari_terms.size(); ++i) {
        out += fmt::format("pari[{}]: {}\n", i, format_number(breakdown.pari_terms[i]));
    }
    out += fmt::format("jackpot_term: {}\n", format_number(breakdown.jackpot_term));
    out += fmt::format("total: {}\n", format_number(breakdown.total));
    out += fmt::format("total_percent: {}\n", format_number(100.0 * breakdown.total));
    return out;
}

std::string classification_report(const BetClassification& classification) {
    std::string out;
    out += fmt::format("verdict: {}\n", to_string(classification.verdict));
    out += fmt::format("rule: {}\n", to_string(classification.rule));
    out += fmt::format("x: {}\n", format_number(classification.coords.x));
    out += fmt::format("y: {}\n", format_number(classification.coords.y));
    if (classification.verdict == Verdict::Inconclusive) {
        out += "hint: the bounds do not decide this drawing; rerun with --method exact\n";
    }
    return out;
}

std::string curve_csv(std::span<const CurvePoint> points) {
    std::string out = "x,y\n";
    for (const auto& p : points) {
        out += fmt::format("{},{}\n", format_number(p.x), format_number(p.y));
    }
    return out;
}

std::string forecast_report(const RolloverForecast& forecast,
                            std::optional<double> arrivals_per_year) {
    std::string out;
    out += fmt::format("k: {}\n", forecast.k);
    out += fmt::format("growth_ratio: {}\n", format_number(forecast.growth_ratio));
    out += fmt::format("survival_probability_bound: {}\n",
                       format_number(forecast.survival_probability_bound));
    if (arrivals_per_year) {
        out += fmt::format("target_rate_per_year_bound: {}\n",
                           format_number(*arrivals_per_year * forecast.survival_probability_bound));
    }
    return out;
}

std::string variance_report(const LotteryVariance& variance) {
    std::string out;
    out += fmt::format("v1: {}\n", format_number(variance.v1));
    out += fmt::format("S: {}\n", variance.S);
    out += fmt::format("v: {}\n", format_number(variance.v));
    if (variance.syndicate_too_large) {
        out += "warning: S exceeds t/100; v = v1/S is no longer a good approximation\n";
    }
    return out;
}

std::string portfolio_report(const AssetUniverse& universe, const PortfolioSolution& solution,
                             const std::optional<LotteryScreen>& screen) {
    std::string out;
    out += fmt::format("r_f: {}\n", format_number(solution.r_f));
    out += fmt::format("theta: {}\n", format_number(solution.theta));
    out += "asset,Z,X,negligible\n";
    for (std::size_t k = 0; k < universe.size(); ++k) {
        const auto i = static_cast<Eigen::Index>(k);
        out += fmt::format("{},{},{},{}\n", universe.names()[k], format_number(solution.Z[i]),
                           format_number(solution.X[i]), solution.negligible[k] ? "yes" : "no");
    }
    if (screen) {
        const auto& aug = screen->augmented;
        const auto last = aug.Z.size() - 1;
        out += fmt::format("lottery,{},{},{}\n", format_number(aug.Z[last]),
                           format_number(aug.X[last]),
                           aug.negligible[static_cast<std::size_t>(last)] ? "yes" : "no");
        out += fmt::format("lottery_r_l: {}\n", format_number(screen->r_l));
        out += fmt::format("lottery_v: {}\n", format_number(screen->v));
        out += fmt::format("z2_floor: {}\n", format_number(screen->z2_floor));
        if (screen->universe_floor) {
            out += fmt::format("universe_min_positive_Z: {}\n", format_number(*screen->universe_floor));
        }
        out += fmt::format("screen_threshold: {}\n", format_number(screen->threshold));
        out += fmt::format("screen: {}\n",
                           screen->negligible ? "NEGLIGIBLE" : "INCONCLUSIVE (see augmented solve)");
    }
    return out;
}

std::string simulation_report(const SimResult& result, double analytic_eror) {
    std::string out;
    out += fmt::format("n_trials: {}\n", result.n_trials);
    out += fmt::format("mean_ror: {}\n", format_number(result.mean_ror));
    out += fmt::format("var_ror: {}\n", format_number(result.var_ror));
    out += fmt::format("std_error: {}\n", format_number(result.std_error));
    out += fmt::format("analytic_eror: {}\n", format_number(analytic_eror));
    if (result.std_error > 0.0) {
        out += fmt::format("z_score: {}\n",
                           format_number((result.mean_ror - analytic_eror) / result.std_error));
    }
    out += fmt::format("rng: {}\n", result.rng);
    return out;
}

}  // namespace lotto_edge
