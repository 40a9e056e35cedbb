#include "lotto_edge/risk_portfolio.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "lotto_edge/binomial_series.hpp"
#include "lotto_edge/error.hpp"

namespace lotto_edge {

namespace {

constexpr double kPercentSquared = 100.0 * 100.0;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kPivotTolerance = 1e-12;

void check_screen_params(double theta, double z2_floor) {
    if (!(theta > 0.0)) {
        throw DomainError(fmt::format("negligibility threshold theta must be positive, got {}", theta));
    }
    if (!(z2_floor > 0.0)) {
        throw DomainError(fmt::format("Z_2 floor must be positive, got {}", z2_floor));
    }
}

PortfolioSolution normalize_solution(Eigen::VectorXd Z, double r_f, double theta) {
    PortfolioSolution out;
    out.r_f = r_f;
    out.theta = theta;
    const double scale = Z.cwiseAbs().sum();
    if (!(scale > 0.0)) {
        throw DomainError("every efficient weight is zero; mu equals the risk-free rate");
    }
    out.X = Z / scale;
    out.Z = std::move(Z);
    out.negligible.resize(static_cast<std::size_t>(out.X.size()));
    for (Eigen::Index k = 0; k < out.X.size(); ++k) {
        out.negligible[static_cast<std::size_t>(k)] = std::abs(out.X[k]) < theta;
    }
    return out;
}

}  // namespace

double lottery_variance(const LotteryConfig& config, const DrawingParams& drawing) {
    const double J = drawing.J;
    const auto squared_gain = [J](double w) {
        const double gain = J / w - 1.0;
        return gain * gain;
    };
    // (J/w - 1)^2 falls to 0 at w = J and then climbs back towards 1.
    const auto remaining = [&](double w) { return std::max(squared_gain(w), 1.0); };
    return kPercentSquared *
           sum_cowinner_series(drawing.N, config.jackpot_probability(), squared_gain, remaining);
}

LotteryVariance syndicate_variance(const LotteryConfig& config, double v1, std::uint64_t S) {
    if (!(v1 > 0.0)) {
        throw DomainError(fmt::format("single-ticket variance must be positive, got {}", v1));
    }
    if (S == 0) {
        throw DomainError("syndicate size must be at least 1");
    }
    LotteryVariance out;
    out.v1 = v1;
    out.S = S;
    out.v = v1 / static_cast<double>(S);
    out.syndicate_too_large = static_cast<double>(S) > static_cast<double>(config.tickets()) / 100.0;
    return out;
}

AssetUniverse::AssetUniverse(std::vector<std::string> names, Eigen::VectorXd mu,
                             Eigen::MatrixXd C)
    : names_(std::move(names)), mu_(std::move(mu)), C_(std::move(C)) {
    const auto n = static_cast<Eigen::Index>(names_.size());
    if (n == 0) {
        throw DomainError("asset universe is empty");
    }
    if (mu_.size() != n || C_.rows() != n || C_.cols() != n) {
        throw DomainError(fmt::format(
            "universe dimensions disagree: {} names, {} returns, {}x{} covariance", n,
            mu_.size(), C_.rows(), C_.cols()));
    }
    const double scale = std::max(C_.cwiseAbs().maxCoeff(), 1.0);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (std::abs(C_(i, j) - C_(j, i)) > kSymmetryTolerance * scale) {
                throw DomainError(fmt::format("covariance matrix is not symmetric at ({}, {})", i, j));
            }
        }
    }
}

AssetUniverse estimate_universe(std::span<const AssetSeries> series) {
    const std::size_t n = series.size();
    if (n == 0) {
        throw DomainError("no asset series supplied");
    }
    const std::size_t dates = series.front().returns.size();
    for (const auto& s : series) {
        if (s.returns.size() != dates) {
            throw DomainError(fmt::format("series '{}' has {} dates, expected {}", s.name,
                                          s.returns.size(), dates));
        }
    }

    std::vector<std::string> names;
    Eigen::VectorXd mu(static_cast<Eigen::Index>(n));
    Eigen::MatrixXd C(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(series[a].name);
        CompensatedSum sum;
        std::size_t count = 0;
        for (const auto& r : series[a].returns) {
            if (r) {
                sum.add(*r);
                ++count;
            }
        }
        if (count < 2) {
            throw DomainError(fmt::format("series '{}' has fewer than 2 observations", series[a].name));
        }
        mu[static_cast<Eigen::Index>(a)] = sum.value() / static_cast<double>(count);
    }

    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            CompensatedSum sum_a, sum_b;
            std::size_t count = 0;
            for (std::size_t d = 0; d < dates; ++d) {
                const auto& ra = series[a].returns[d];
                const auto& rb = series[b].returns[d];
                if (ra && rb) {
                    sum_a.add(*ra);
                    sum_b.add(*rb);
                    ++count;
                }
            }
            if (count < 2) {
                throw DomainError(fmt::format("series '{}' and '{}' overlap on fewer than 2 dates",
                                              series[a].name, series[b].name));
            }
            const double mean_a = sum_a.value() / static_cast<double>(count);
            const double mean_b = sum_b.value() / static_cast<double>(count);
            CompensatedSum cross;
            for (std::size_t d = 0; d < dates; ++d) {
                const auto& ra = series[a].returns[d];
                const auto& rb = series[b].returns[d];
                if (ra && rb) {
                    cross.add((*ra - mean_a) * (*rb - mean_b));
                }
            }
            const double cov = cross.value() / static_cast<double>(count - 1);
            C(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = cov;
            C(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(a)) = cov;
        }
    }
    return AssetUniverse(std::move(names), std::move(mu), std::move(C));
}

PortfolioSolution lintner_portfolio(const AssetUniverse& universe, double r_f, double theta) {
    if (!(r_f >= 0.0)) {
        throw DomainError(fmt::format("risk-free rate must be >= 0, got {}", r_f));
    }
    if (!(theta > 0.0)) {
        throw DomainError(fmt::format("negligibility threshold theta must be positive, got {}", theta));
    }
    const Eigen::MatrixXd& C = universe.C();
    if ((C.diagonal().array() <= 0.0).any() || C.llt().info() != Eigen::Success) {
        throw NotPositiveDefinite("covariance matrix is not positive definite");
    }

    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(C);
    const double row_norm = C.cwiseAbs().rowwise().sum().maxCoeff();
    const Eigen::VectorXd pivots = lu.matrixLU().diagonal();
    for (Eigen::Index k = 0; k < pivots.size(); ++k) {
        if (std::abs(pivots[k]) < kPivotTolerance * row_norm) {
            throw SingularMatrix(fmt::format(
                "pivot {} has magnitude {} (largest row norm {})", k, std::abs(pivots[k]), row_norm));
        }
    }
    const Eigen::VectorXd excess =
        universe.mu() - Eigen::VectorXd::Constant(universe.mu().size(), r_f);
    return normalize_solution(lu.solve(excess), r_f, theta);
}

std::optional<double> smallest_positive_weight(const PortfolioSolution& solution) {
    std::optional<double> out;
    for (Eigen::Index k = 0; k < solution.Z.size(); ++k) {
        if (solution.Z[k] > 0.0 && (!out || solution.Z[k] < *out)) {
            out = solution.Z[k];
        }
    }
    return out;
}

double negative_theorem_threshold(double r_l, double r_f, double theta, double z2_floor) {
    check_screen_params(theta, z2_floor);
    return (r_l - r_f) / (z2_floor * theta);
}

bool negative_theorem_screen(double r_l, double r_f, double v, double theta, double z2_floor) {
    check_screen_params(theta, z2_floor);
    if (!(v > 0.0)) {
        throw DomainError(fmt::format("lottery variance must be positive, got {}", v));
    }
    if (r_l <= r_f) {
        return true;
    }
    return v >= negative_theorem_threshold(r_l, r_f, theta, z2_floor);
}

std::uint64_t min_syndicate_size(double r_l, double r_f, double v1, double theta,
                                 double z2_floor) {
    check_screen_params(theta, z2_floor);
    if (!(v1 > 0.0)) {
        throw DomainError(fmt::format("single-ticket variance must be positive, got {}", v1));
    }
    if (!(r_l > r_f)) {
        throw DomainError("a lottery returning no more than the risk-free rate is never worth holding");
    }
    const double threshold = negative_theorem_threshold(r_l, r_f, theta, z2_floor);
    auto S = static_cast<std::uint64_t>(std::floor(v1 / threshold)) + 1;
    // Settle floating-point rounding at the boundary v1 / S == threshold.
    while (S > 1 && v1 / static_cast<double>(S - 1) < threshold) {
        --S;
    }
    while (!(v1 / static_cast<double>(S) < threshold)) {
        ++S;
    }
    return S;
}

PortfolioSolution augmented_portfolio(const AssetUniverse& universe, double r_l, double v,
                                      double r_f, double theta) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(fmt::format("lottery variance must be positive and finite, got {}", v));
    }
    const PortfolioSolution risky = lintner_portfolio(universe, r_f, theta);
    // The lottery is uncorrelated with the other assets, so the augmented
    // covariance is block diagonal and its last coordinate decouples.
    Eigen::VectorXd Z(risky.Z.size() + 1);
    Z.head(risky.Z.size()) = risky.Z;
    Z[risky.Z.size()] = (r_l - r_f) / v;
    return normalize_solution(std::move(Z), r_f, theta);
}

}  // namespace lotto_edge
