#include "lotto_edge/config_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "lotto_edge/error.hpp"

namespace lotto_edge {

namespace {

using nlohmann::json;

const json& require_key(const json& object, const char* key, std::string_view context) {
    if (!object.is_object() || !object.contains(key)) {
        throw ParseError(fmt::format("{}: missing key '{}'", context, key));
    }
    return object.at(key);
}

std::uint64_t read_count(const json& value, std::string_view context) {
    if (!value.is_number_integer() || value.get<long long>() < 0) {
        throw ParseError(fmt::format("{}: expected a non-negative integer", context));
    }
    return value.get<std::uint64_t>();
}

double read_real(const json& value, std::string_view context) {
    if (!value.is_number()) {
        throw ParseError(fmt::format("{}: expected a number", context));
    }
    return value.get<double>();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("cannot open '{}'", path.string()));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

LotteryConfig parse_lottery_config(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("lottery config is not valid JSON: {}", e.what()));
    }
    const auto& name_value = require_key(doc, "name", "lottery config");
    if (!name_value.is_string()) {
        throw ParseError("lottery config: 'name' must be a string");
    }
    const auto name = name_value.get<std::string>();
    const auto tickets = read_count(require_key(doc, "t", name), fmt::format("{}.t", name));

    std::vector<FixedPrize> fixed;
    if (doc.contains("fixed")) {
        const auto& list = doc.at("fixed");
        if (!list.is_array()) throw ParseError(fmt::format("{}.fixed must be an array", name));
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto ctx = fmt::format("{}.fixed[{}]", name, i);
            fixed.push_back({read_real(require_key(list[i], "payout", ctx), ctx + ".payout"),
                             read_count(require_key(list[i], "ways", ctx), ctx + ".ways")});
        }
    }

    std::vector<PariMutuelPool> pari;
    if (doc.contains("pari")) {
        const auto& list = doc.at("pari");
        if (!list.is_array()) throw ParseError(fmt::format("{}.pari must be an array", name));
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto ctx = fmt::format("{}.pari[{}]", name, i);
            pari.push_back({read_real(require_key(list[i], "rate", ctx), ctx + ".rate"),
                            read_count(require_key(list[i], "ways", ctx), ctx + ".ways")});
        }
    }
    return LotteryConfig(name, tickets, std::move(fixed), std::move(pari));
}

LotteryConfig load_lottery_config(const std::filesystem::path& path) {
    return parse_lottery_config(read_file(path));
}

std::string lottery_config_to_json(const LotteryConfig& config) {
    json doc;
    doc["name"] = config.name();
    doc["t"] = config.tickets();
    doc["fixed"] = json::array();
    for (const auto& prize : config.fixed()) {
        doc["fixed"].push_back({{"payout", prize.payout_after_tax}, {"ways", prize.ways}});
    }
    doc["pari"] = json::array();
    for (const auto& pool : config.pari()) {
        doc["pari"].push_back({{"rate", pool.rate}, {"ways", pool.ways}});
    }
    return doc.dump(2);
}

std::filesystem::path config_directory() {
    if (const char* dir = std::getenv(kConfigDirEnv); dir != nullptr && *dir != '\0') {
        return dir;
    }
    return LOTTO_EDGE_DEFAULT_CONFIG_DIR;
}

LotteryConfig resolve_lottery_config(std::string_view name_or_path) {
    const std::filesystem::path as_path(name_or_path);
    if (as_path.extension() == ".json" || name_or_path.find('/') != std::string_view::npos) {
        return load_lottery_config(as_path);
    }
    const auto candidate = config_directory() / (std::string(name_or_path) + ".json");
    if (!std::filesystem::exists(candidate)) {
        throw ParseError(fmt::format("unknown lottery '{}' (looked for {})", name_or_path,
                                     candidate.string()));
    }
    return load_lottery_config(candidate);
}

}  // namespace lotto_edge
