#include "lotto_edge/cli.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "lotto_edge/breakeven.hpp"
#include "lotto_edge/config_io.hpp"
#include "lotto_edge/drawings_io.hpp"
#include "lotto_edge/error.hpp"
#include "lotto_edge/oracle_sim.hpp"
#include "lotto_edge/report.hpp"
#include "lotto_edge/returns.hpp"
#include "lotto_edge/risk_portfolio.hpp"
#include "lotto_edge/rollover.hpp"
#include "lotto_edge/universe_io.hpp"

namespace lotto_edge {

namespace {

// Malformed numeric arguments are usage errors, not domain errors.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double amount_arg(const std::string& text, const char* flag) {
    try {
        return parse_amount(text);
    } catch (const ParseError& e) {
        throw UsageError(fmt::format("{}: {}", flag, e.what()));
    }
}

struct DrawingArgs {
    std::string config;
    std::string sales;
    std::string jackpot;

    void attach(CLI::App& cmd) {
        cmd.add_option("config", config, "Bundled lottery name or path to a config JSON")
            ->required();
        cmd.add_option("--N", sales, "Ticket sales (accepts 212e6 or 212m)")->required();
        cmd.add_option("--J", jackpot, "After-tax lump-sum jackpot")->required();
    }

    DrawingParams drawing() const {
        return DrawingParams(amount_arg(sales, "--N"), amount_arg(jackpot, "--J"));
    }
};

std::string batch_report(const DrawingLoad& load) {
    std::map<std::string, LotteryConfig> configs;
    std::string out = "date,lottery,N,J,eror,x,y,bounds_verdict,bounds_rule,exact_verdict\n";
    for (const auto& record : load.records) {
        auto it = configs.find(record.lottery);
        if (it == configs.end()) {
            it = configs.emplace(record.lottery, resolve_lottery_config(record.lottery)).first;
        }
        const LotteryConfig& config = it->second;
        const DrawingParams drawing = record.params();
        const auto eror = expected_ror(config, drawing);
        const auto exact = exact_curve_classify(config, drawing);
        std::string bounds_verdict = "n/a";
        std::string bounds_rule = "n/a";
        try {
            const auto bounds = general_bound_classify(config, drawing);
            bounds_verdict = to_string(bounds.verdict);
            bounds_rule = to_string(bounds.rule);
        } catch (const HypothesisViolation&) {
        }
        out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", record.date, record.lottery,
                           format_number(drawing.N), format_number(drawing.J),
                           format_number(eror.total), format_number(exact.coords.x),
                           format_number(exact.coords.y), bounds_verdict, bounds_rule,
                           to_string(exact.verdict));
    }
    return out;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Expected returns, break-even curves and portfolio screens for rolling-jackpot lotteries",
                 "lotto-edge"};
    app.require_subcommand(1);

    std::function<void()> action;

    // stats
    std::string stats_config;
    auto* stats_cmd = app.add_subcommand("stats", "Print f, F and the jackpot cutoff j0");
    stats_cmd->add_option("config", stats_config, "Bundled lottery name or config path")->required();
    stats_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(stats_config);
            out << stats_report(config, derive_stats(config));
        };
    });

    // eror
    DrawingArgs eror_args;
    std::optional<double> quick_pick;
    auto* eror_cmd = app.add_subcommand("eror", "Expected rate of return of one ticket");
    eror_args.attach(*eror_cmd);
    eror_cmd->add_option("--quick-pick-fraction", quick_pick,
                         "Share of sales that are random quick picks (unpopular-numbers bound)");
    eror_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(eror_args.config);
            const auto drawing = eror_args.drawing();
            const auto breakdown = quick_pick ? unpopular_adjusted_ror(config, drawing, *quick_pick)
                                              : expected_ror(config, drawing);
            out << eror_report(config, drawing, breakdown, quick_pick);
        };
    });

    // classify
    DrawingArgs classify_args;
    std::string method = "bounds";
    auto* classify_cmd = app.add_subcommand("classify", "Classify a drawing as a good or bad bet");
    classify_args.attach(*classify_cmd);
    classify_cmd->add_option("--method", method, "bounds (U and L), exact (own curve) or rects")
        ->check(CLI::IsMember({"bounds", "exact", "rects"}));
    classify_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(classify_args.config);
            const auto drawing = classify_args.drawing();
            BetClassification result;
            if (method == "exact") {
                result = exact_curve_classify(config, drawing);
            } else if (method == "rects") {
                result = rectangle_classify(config, drawing);
            } else {
                result = general_bound_classify(config, drawing);
            }
            out << classification_report(result);
        };
    });

    // breakeven
    std::string curve_config;
    double x_min = 0.0;
    double x_max = 0.0;
    int n_points = 0;
    auto* curve_cmd = app.add_subcommand("breakeven", "Sample the break-even curve as CSV");
    curve_cmd->add_option("config", curve_config, "Bundled lottery name or config path")->required();
    curve_cmd->add_option("--x-min", x_min, "Smallest N/J")->required();
    curve_cmd->add_option("--x-max", x_max, "Largest N/J (below 1/F)")->required();
    curve_cmd->add_option("--n", n_points, "Number of points (>= 2)")->required();
    curve_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(curve_config);
            out << curve_csv(curve_points(config, x_min, x_max, n_points));
        };
    });

    // rollover
    std::string rollover_config;
    double current_ratio = 0.0;
    double target_ratio = 0.0;
    double growth = kDefaultGrowthRatio;
    std::optional<double> arrivals;
    auto* rollover_cmd = app.add_subcommand("rollover", "Rollovers needed to reach a target J/j0");
    rollover_cmd->add_option("config", rollover_config, "Bundled lottery name or config path")
        ->required();
    rollover_cmd->add_option("--current-ratio", current_ratio, "Current J/j0")->required();
    rollover_cmd->add_option("--target-ratio", target_ratio, "Target J/j0")->required();
    rollover_cmd->add_option("--growth", growth, "Jackpot growth per rollover")
        ->capture_default_str();
    rollover_cmd->add_option("--arrivals-per-year", arrivals,
                             "How often the jackpot reaches the current ratio, per year");
    rollover_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(rollover_config);
            out << forecast_report(forecast(config, current_ratio, target_ratio, growth), arrivals);
        };
    });

    // variance
    DrawingArgs variance_args;
    std::uint64_t syndicate = 1;
    auto* variance_cmd = app.add_subcommand("variance", "Variance of a ticket or syndicate share (%^2)");
    variance_args.attach(*variance_cmd);
    variance_cmd->add_option("--syndicate", syndicate, "Tickets bought by the syndicate")
        ->capture_default_str();
    variance_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(variance_args.config);
            const double v1 = lottery_variance(config, variance_args.drawing());
            out << variance_report(syndicate_variance(config, v1, syndicate));
        };
    });

    // portfolio
    std::string universe_path;
    double r_f = 0.0;
    std::optional<double> lottery_rl;
    std::optional<double> lottery_v;
    double theta = kDefaultTheta;
    double z2_floor = kDefaultZ2Floor;
    auto* portfolio_cmd = app.add_subcommand("portfolio", "Lintner efficient portfolio and lottery screen");
    portfolio_cmd->add_option("--universe", universe_path, "Universe JSON fixture or return-series CSV")
        ->required();
    portfolio_cmd->add_option("--rf", r_f, "Risk-free weekly rate in %")->required();
    auto* rl_opt = portfolio_cmd->add_option("--lottery-rl", lottery_rl, "Lottery eRoR in %");
    auto* v_opt = portfolio_cmd->add_option("--lottery-v", lottery_v, "Lottery variance in %^2");
    rl_opt->needs(v_opt);
    v_opt->needs(rl_opt);
    portfolio_cmd->add_option("--theta", theta, "Negligibility threshold")->capture_default_str();
    portfolio_cmd->add_option("--z2-floor", z2_floor, "Lower bound on Z_2 used by the screen")
        ->capture_default_str();
    portfolio_cmd->callback([&] {
        action = [&] {
            const auto universe = load_universe(universe_path);
            const auto solution = lintner_portfolio(universe, r_f, theta);
            std::optional<LotteryScreen> screen;
            if (lottery_rl && lottery_v) {
                LotteryScreen s;
                s.r_l = *lottery_rl;
                s.v = *lottery_v;
                s.z2_floor = z2_floor;
                s.threshold = negative_theorem_threshold(s.r_l, r_f, theta, z2_floor);
                s.negligible = negative_theorem_screen(s.r_l, r_f, s.v, theta, z2_floor);
                s.universe_floor = smallest_positive_weight(solution);
                s.augmented = augmented_portfolio(universe, s.r_l, s.v, r_f, theta);
                screen = std::move(s);
            }
            out << portfolio_report(universe, solution, screen);
        };
    });

    // simulate
    DrawingArgs sim_args;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte-Carlo estimate of the rate of return");
    sim_args.attach(*sim_cmd);
    sim_cmd->add_option("--trials", trials, "Number of simulated drawings")->required();
    sim_cmd->add_option("--seed", seed, "Random seed")->required();
    sim_cmd->add_option("--workers", workers, "Worker threads (result does not depend on it)")
        ->capture_default_str();
    sim_cmd->callback([&] {
        action = [&] {
            const auto config = resolve_lottery_config(sim_args.config);
            const auto drawing = sim_args.drawing();
            const auto result = simulate_drawings(config, drawing, trials, seed, {workers});
            out << simulation_report(result, expected_ror(config, drawing).total);
        };
    });

    // batch
    std::string drawings_path;
    double tax_rate = kDefaultTaxRate;
    auto* batch_cmd = app.add_subcommand("batch", "Analyze every drawing in a drawings CSV");
    batch_cmd->add_option("drawings", drawings_path, "CSV with header date,lottery,annuity,lump_sum,J,N")
        ->required();
    batch_cmd->add_option("--tax-rate", tax_rate, "Tax applied when J must be derived from the lump sum")
        ->capture_default_str();
    int batch_status = kExitOk;
    batch_cmd->callback([&] {
        action = [&] {
            const auto load = load_drawings(drawings_path, tax_rate);
            for (const auto& e : load.errors) {
                err << fmt::format("row {}: {}\n", e.row, e.message);
            }
            out << batch_report(load);
            if (!load.errors.empty()) batch_status = kExitDomainError;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    try {
        action();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsageError;
    } catch (const Error& e) {
        err << "error: " << e.name() << ": " << e.what() << '\n';
        return kExitDomainError;
    }
    return batch_status;
}

}  // namespace lotto_edge
