#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lotto_edge/config_io.hpp"
#include "lotto_edge/lottery_model.hpp"
#include "lotto_edge/universe_io.hpp"

namespace fixtures {

inline std::filesystem::path data_dir() { return LOTTO_EDGE_TEST_DATA_DIR; }

inline lotto_edge::LotteryConfig bundled(const std::string& name) {
    return lotto_edge::load_lottery_config(data_dir() / "configs" / (name + ".json"));
}

inline std::vector<std::string> bundled_names() {
    return {"mega-millions", "powerball", "lotto-texas", "nj-pick6"};
}

inline lotto_edge::AssetUniverse typical_universe() {
    return lotto_edge::load_universe(data_dir() / "universe" / "typical-risky-investments.json");
}

inline lotto_edge::LotteryConfig jackpot_only(std::uint64_t t) {
    return lotto_edge::LotteryConfig("jackpot-only", t, {}, {});
}

// Small lotteries with every prize kind, for the exhaustive and Monte-Carlo oracles.
inline std::vector<lotto_edge::LotteryConfig> toy_corpus() {
    using lotto_edge::LotteryConfig;
    return {
        LotteryConfig("toy-100", 100, {}, {}),
        LotteryConfig("toy-2", 2, {}, {}),
        LotteryConfig("toy-mixed", 1000, {{5.0, 20}}, {{0.1, 30}}),
        LotteryConfig("toy-major", 500, {{2.0, 50}}, {{0.05, 10}, {0.2, 40}}),
    };
}

// A large lottery with F = 0.82 exactly and no pari-mutuel prizes.
inline lotto_edge::LotteryConfig f082_lottery() {
    return lotto_edge::LotteryConfig("f-0.82", 100'000'000, {{18.0, 1'000'000}}, {});
}

}  // namespace fixtures
