#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

// ---------------------------------------------------------------------------
// Lottery variance
// ---------------------------------------------------------------------------

/// Variance of a syndicate position. v1 is the single-ticket variance of the
/// rate of return in %^2; a syndicate buying S tickets has v = v1 / S as long
/// as S is small next to t.
struct LotteryVariance {
    double v1 = 0.0;
    std::uint64_t S = 1;
    double v = 0.0;
    bool syndicate_too_large = false;  // S > t / 100
};

/// Jackpot-dominated estimate of the single-ticket variance in %^2:
///   sum_{w>=1} 100^2 (J/w - 1)^2 C(N-1, w-1) p^w (1-p)^{N-w},  p = 1/t.
/// The cross terms E(X)^2 and the fixed prizes are ignored, which is harmless
/// because the jackpot term dwarfs them.
double lottery_variance(const LotteryConfig& config, const DrawingParams& drawing);

LotteryVariance syndicate_variance(const LotteryConfig& config, double v1, std::uint64_t S);

// ---------------------------------------------------------------------------
// Asset universe
// ---------------------------------------------------------------------------

/// Risky assets with expected weekly returns mu (in %) and covariances C (in %^2).
///
/// Construction checks dimensions and symmetry; positive definiteness is
/// checked when a portfolio is solved.
class AssetUniverse {
public:
    AssetUniverse(std::vector<std::string> names, Eigen::VectorXd mu, Eigen::MatrixXd C);

    const std::vector<std::string>& names() const noexcept { return names_; }
    const Eigen::VectorXd& mu() const noexcept { return mu_; }
    const Eigen::MatrixXd& C() const noexcept { return C_; }
    std::size_t size() const noexcept { return names_.size(); }

private:
    std::vector<std::string> names_;
    Eigen::VectorXd mu_;
    Eigen::MatrixXd C_;
};

// Weekly % returns of one asset, one slot per date; std::nullopt where missing.
struct AssetSeries {
    std::string name;
    std::vector<std::optional<double>> returns;
};

/// Sample means and unbiased (n - 1) covariances. Each covariance uses only
/// the dates where both series are present, with means taken over that
/// overlap. Throws DomainError if any pair overlaps on fewer than 2 dates or
/// the series lengths differ.
AssetUniverse estimate_universe(std::span<const AssetSeries> series);

// ---------------------------------------------------------------------------
// Lintner portfolio
// ---------------------------------------------------------------------------

// Default negligibility threshold: one dollar-rounding step on $1000.
inline constexpr double kDefaultTheta = 1.0 / 2000.0;
// Lower bound on Z_2 for the five-asset example universe at positive R_F.
inline constexpr double kDefaultZ2Floor = 0.022;

struct PortfolioSolution {
    double r_f = 0.0;
    Eigen::VectorXd Z;  // C^{-1} (mu - r_f 1)
    Eigen::VectorXd X;  // Z / sum |Z_k|
    double theta = kDefaultTheta;
    std::vector<bool> negligible;  // |X_k| < theta
};

/// Efficient risky portfolio under Lintnerian short sales (sum |X_k| = 1).
///
/// Throws NotPositiveDefinite if C is not positive definite and
/// SingularMatrix if a pivot of the partial-pivoting LU falls below 1e-12
/// times the largest row norm of C.
PortfolioSolution lintner_portfolio(const AssetUniverse& universe, double r_f,
                                    double theta = kDefaultTheta);

// Smallest positive Z_k, the universe's own analogue of the 0.022 floor.
// Empty when no weight is positive.
std::optional<double> smallest_positive_weight(const PortfolioSolution& solution);

// (r_l - r_f) / (z2_floor * theta).
double negative_theorem_threshold(double r_l, double r_f, double theta,
                                  double z2_floor = kDefaultZ2Floor);

/// True when the lottery's weight in every efficient portfolio is below theta:
/// v >= (r_l - r_f) / (z2_floor * theta). A lottery with r_l <= r_f is
/// rejected outright (true), since it adds risk for a worse return.
bool negative_theorem_screen(double r_l, double r_f, double v, double theta = kDefaultTheta,
                             double z2_floor = kDefaultZ2Floor);

// Smallest syndicate size S for which v1 / S drops below the screen threshold.
std::uint64_t min_syndicate_size(double r_l, double r_f, double v1, double theta = kDefaultTheta,
                                 double z2_floor = kDefaultZ2Floor);

/// Appends the lottery as an extra, uncorrelated asset with return r_l and
/// variance v. Its Z coordinate is (r_l - r_f) / v exactly.
PortfolioSolution augmented_portfolio(const AssetUniverse& universe, double r_l, double v,
                                      double r_f, double theta = kDefaultTheta);

}  // namespace lotto_edge
