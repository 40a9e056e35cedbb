#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

// Environment variable that replaces the bundled config directory.
inline constexpr const char* kConfigDirEnv = "LOTTO_EDGE_CONFIG_DIR";

/// Parses a lottery description:
///   {"name": "...", "t": 175711536,
///    "fixed": [{"payout": 187500, "ways": 45}, ...],
///    "pari":  [{"rate": 0.033, "ways": 16920}, ...]}
/// Payouts and rates are after tax. Throws ParseError on malformed JSON or
/// missing keys and ConfigError when the prize table is invalid.
LotteryConfig parse_lottery_config(std::string_view json_text);
LotteryConfig load_lottery_config(const std::filesystem::path& path);

std::string lottery_config_to_json(const LotteryConfig& config);

// $LOTTO_EDGE_CONFIG_DIR if set, otherwise the bundled data/configs directory.
std::filesystem::path config_directory();

/// Accepts either a path to a JSON file or the name of a bundled config
/// (e.g. "mega-millions", looked up as <config_directory()>/<name>.json).
LotteryConfig resolve_lottery_config(std::string_view name_or_path);

}  // namespace lotto_edge
