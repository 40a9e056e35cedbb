#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "lotto_edge/risk_portfolio.hpp"

namespace lotto_edge {

/// Universe fixture: {"names": [...], "mu": [...], "covariance": [[...], ...]}
/// with weekly returns in % and covariances in %^2.
AssetUniverse parse_universe_json(std::string_view json_text);

/// Weekly return series, header date,asset1,asset2,... with ISO dates in the
/// first column. Empty cells are missing observations.
std::vector<AssetSeries> parse_return_series_csv(std::istream& in);

// .json files are read as fixtures; anything else as a return-series CSV
// passed through estimate_universe.
AssetUniverse load_universe(const std::filesystem::path& path);

}  // namespace lotto_edge
