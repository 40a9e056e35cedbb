#include "lotto_edge/universe_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "lotto_edge/drawings_io.hpp"
#include "lotto_edge/error.hpp"

namespace lotto_edge {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string strip(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

AssetUniverse parse_universe_json(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
        const auto names = doc.at("names").get<std::vector<std::string>>();
        const auto mu = doc.at("mu").get<std::vector<double>>();
        const auto rows = doc.at("covariance").get<std::vector<std::vector<double>>>();
        Eigen::VectorXd mu_vec = Eigen::Map<const Eigen::VectorXd>(
            mu.data(), static_cast<Eigen::Index>(mu.size()));
        Eigen::MatrixXd C(static_cast<Eigen::Index>(rows.size()),
                          static_cast<Eigen::Index>(rows.empty() ? 0 : rows.front().size()));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<Eigen::Index>(rows[i].size()) != C.cols()) {
                throw ParseError(fmt::format("covariance row {} has {} entries, expected {}", i,
                                             rows[i].size(), C.cols()));
            }
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                C(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
            }
        }
        return AssetUniverse(names, std::move(mu_vec), std::move(C));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(fmt::format("universe JSON is malformed: {}", e.what()));
    }
}

std::vector<AssetSeries> parse_return_series_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("return series file is empty");
    }
    auto header = split(line);
    if (header.size() < 2 || strip(header.front()) != "date") {
        throw ParseError("return series header must be date,asset1,asset2,...");
    }
    std::vector<AssetSeries> series;
    for (std::size_t i = 1; i < header.size(); ++i) {
        series.push_back({strip(header[i]), {}});
    }
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (strip(line).empty()) continue;
        const auto fields = split(line);
        if (fields.size() != header.size()) {
            throw ParseError(fmt::format("row {}: expected {} fields, got {}", row, header.size(),
                                         fields.size()));
        }
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const auto cell = strip(fields[i]);
            try {
                series[i - 1].returns.push_back(
                    cell.empty() ? std::nullopt : std::optional<double>(parse_amount(cell)));
            } catch (const ParseError& e) {
                throw ParseError(fmt::format("row {}: {}", row, e.what()));
            }
        }
    }
    return series;
}

AssetUniverse load_universe(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("cannot open '{}'", path.string()));
    }
    if (path.extension() == ".json") {
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return parse_universe_json(buffer.str());
    }
    const auto series = parse_return_series_csv(in);
    return estimate_universe(series);
}

}  // namespace lotto_edge
