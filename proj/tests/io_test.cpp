#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "lotto_edge/config_io.hpp"
#include "lotto_edge/drawings_io.hpp"
#include "lotto_edge/error.hpp"
#include "lotto_edge/universe_io.hpp"

using namespace lotto_edge;

namespace {

DrawingLoad parse_csv(const std::string& body) {
    std::istringstream in(std::string(kDrawingsHeader) + "\n" + body);
    return parse_drawings(in);
}

class ScopedEnv {
public:
    ScopedEnv(const char* name, const std::string& value) : name_(name) {
        if (const char* old = std::getenv(name)) old_ = old;
        ::setenv(name, value.c_str(), 1);
    }
    ~ScopedEnv() {
        if (old_) {
            ::setenv(name_, old_->c_str(), 1);
        } else {
            ::unsetenv(name_);
        }
    }

private:
    const char* name_;
    std::optional<std::string> old_;
};

}  // namespace

TEST(ConfigJson, BundledConfigsLoadByName) {
    for (const auto& name : fixtures::bundled_names()) {
        EXPECT_EQ(resolve_lottery_config(name).name(), fixtures::bundled(name).name());
    }
    EXPECT_EQ(fixtures::bundled("mega-millions").tickets(), 175'711'536u);
}

TEST(ConfigJson, RoundTrip) {
    for (const auto& config : fixtures::toy_corpus()) {
        const auto again = parse_lottery_config(lottery_config_to_json(config));
        EXPECT_EQ(again.name(), config.name());
        EXPECT_EQ(again.tickets(), config.tickets());
        ASSERT_EQ(again.fixed().size(), config.fixed().size());
        ASSERT_EQ(again.pari().size(), config.pari().size());
        for (std::size_t i = 0; i < config.fixed().size(); ++i) {
            EXPECT_EQ(again.fixed()[i].payout_after_tax, config.fixed()[i].payout_after_tax);
            EXPECT_EQ(again.fixed()[i].ways, config.fixed()[i].ways);
        }
        for (std::size_t i = 0; i < config.pari().size(); ++i) {
            EXPECT_EQ(again.pari()[i].rate, config.pari()[i].rate);
            EXPECT_EQ(again.pari()[i].ways, config.pari()[i].ways);
        }
    }
}

TEST(ConfigJson, MalformedInput) {
    EXPECT_THROW(parse_lottery_config("{"), ParseError);
    EXPECT_THROW(parse_lottery_config(R"({"t": 10})"), ParseError);
    EXPECT_THROW(parse_lottery_config(R"({"name": "x"})"), ParseError);
    EXPECT_THROW(parse_lottery_config(R"({"name": "x", "t": -5})"), ParseError);
    EXPECT_THROW(parse_lottery_config(R"({"name": "x", "t": 10, "fixed": {}})"), ParseError);
    EXPECT_THROW(parse_lottery_config(R"({"name": "x", "t": 10, "fixed": [{"ways": 1}]})"),
                 ParseError);
    EXPECT_THROW(parse_lottery_config(R"({"name": "x", "t": 10, "pari": [{"rate": "a", "ways": 1}]})"),
                 ParseError);
}

TEST(ConfigJson, InvalidPrizeTableIsAConfigError) {
    EXPECT_THROW(parse_lottery_config(R"({"name": "x", "t": 10, "pari": [{"rate": 1.5, "ways": 1}]})"),
                 ConfigError);
    EXPECT_THROW(parse_lottery_config(R"({"name": "x", "t": 0})"), ConfigError);
}

TEST(ConfigJson, UnknownNameAndMissingFile) {
    EXPECT_THROW(resolve_lottery_config("no-such-lottery"), ParseError);
    EXPECT_THROW(resolve_lottery_config("/nonexistent/config.json"), ParseError);
}

TEST(ConfigJson, EnvironmentOverridesDirectory) {
    const auto dir = std::filesystem::temp_directory_path() / "lotto-edge-io-test";
    std::filesystem::create_directories(dir);
    std::ofstream(dir / "tiny.json") << lottery_config_to_json(fixtures::jackpot_only(77));
    {
        ScopedEnv env(kConfigDirEnv, dir.string());
        EXPECT_EQ(config_directory(), dir);
        EXPECT_EQ(resolve_lottery_config("tiny").tickets(), 77u);
        EXPECT_THROW(resolve_lottery_config("mega-millions"), ParseError);
    }
    std::filesystem::remove_all(dir);
}

TEST(ParseAmount, Forms) {
    EXPECT_DOUBLE_EQ(parse_amount("212e6"), 212e6);
    EXPECT_DOUBLE_EQ(parse_amount("212m"), 212e6);
    EXPECT_DOUBLE_EQ(parse_amount("123.3M"), 123.3e6);
    EXPECT_DOUBLE_EQ(parse_amount("4200000"), 4.2e6);
    EXPECT_DOUBLE_EQ(parse_amount("1.5e-3"), 1.5e-3);
    for (const char* bad : {"", "m", "12x", "1e", "abc", "12mm"}) {
        EXPECT_THROW(parse_amount(bad), ParseError) << bad;
    }
}

TEST(Drawings, JackpotBackFilledFromLumpSum) {
    const auto load = parse_csv("2007-03-06,mega-millions,390m,233m,,212m\n");
    ASSERT_TRUE(load.errors.empty());
    ASSERT_EQ(load.records.size(), 1u);
    const auto& r = load.records[0];
    EXPECT_EQ(r.date, "2007-03-06");
    EXPECT_EQ(r.lottery, "mega-millions");
    EXPECT_DOUBLE_EQ(r.J, 174.75e6);
    EXPECT_NEAR(r.J, 175e6, 0.5e6);
    EXPECT_DOUBLE_EQ(r.N, 212e6);
    EXPECT_DOUBLE_EQ(*r.annuity_pre_tax, 390e6);
}

TEST(Drawings, ExplicitJackpotIsUsedVerbatim) {
    const auto load = parse_csv("2007-04-07,lotto-texas,75m,45m,33.8m,4.2m\n");
    ASSERT_EQ(load.records.size(), 1u);
    EXPECT_DOUBLE_EQ(load.records[0].J, 33.8e6);
    EXPECT_DOUBLE_EQ(load.records[0].N, 4.2e6);
}

TEST(Drawings, CustomTaxRate) {
    std::istringstream in(std::string(kDrawingsHeader) + "\n2007-03-06,mega-millions,,200m,,212m\n");
    const auto load = parse_drawings(in, 0.4);
    ASSERT_EQ(load.records.size(), 1u);
    EXPECT_DOUBLE_EQ(load.records[0].J, 120e6);
    EXPECT_FALSE(load.records[0].annuity_pre_tax.has_value());
}

TEST(Drawings, RowErrorsCarryRowNumbers) {
    const auto load = parse_csv(
        "2007-04-07,lotto-texas,75m,45m,33.8m,4.2m\n"
        "2007-03-06,mega-millions,390m,,,212m\n"
        "2007-03-07,mega-millions,390m,233m,,\n"
        "03/06/2007,mega-millions,390m,233m,,212m\n"
        "2007-03-06,mega-millions,390m,233m,212m\n"
        "2007-03-06,mega-millions,zz,233m,,212m\n"
        "2006-02-18,powerball,365m,177.3m,,157m\n");
    EXPECT_EQ(load.records.size(), 2u);
    ASSERT_EQ(load.errors.size(), 5u);
    EXPECT_EQ(load.errors[0].row, 3u);
    EXPECT_EQ(load.errors[1].row, 4u);
    EXPECT_EQ(load.errors[2].row, 5u);
    EXPECT_EQ(load.errors[3].row, 6u);
    EXPECT_EQ(load.errors[4].row, 7u);
}

TEST(Drawings, HeaderIsRequired) {
    std::istringstream wrong("date,lottery,J,N\n2007-03-06,mega-millions,1,2\n");
    EXPECT_THROW(parse_drawings(wrong), ParseError);
    std::istringstream empty("");
    EXPECT_THROW(parse_drawings(empty), ParseError);
    EXPECT_THROW(load_drawings("/nonexistent/drawings.csv"), ParseError);
}

TEST(Drawings, BundledExampleFile) {
    const auto load = load_drawings(fixtures::data_dir() / "drawings" / "example-drawings.csv");
    EXPECT_TRUE(load.errors.empty());
    ASSERT_EQ(load.records.size(), 4u);
    EXPECT_NEAR(load.records[2].J, 133e6, 0.5e6);
}

TEST(DrawingsProperty, FormatThenParseIsIdentity) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> amount(1.0, 1e9);
    std::bernoulli_distribution present(0.5);
    for (int i = 0; i < 500; ++i) {
        DrawingRecord r;
        r.date = "2001-01-01";
        r.lottery = i % 2 ? "powerball" : "nj-pick6";
        if (present(rng)) r.annuity_pre_tax = amount(rng);
        if (present(rng)) r.lump_sum_pre_tax = amount(rng);
        r.J = amount(rng);
        r.N = std::floor(amount(rng));
        std::istringstream in(std::string(kDrawingsHeader) + "\n" + format_drawing_row(r) + "\n");
        const auto load = parse_drawings(in);
        ASSERT_TRUE(load.errors.empty()) << format_drawing_row(r);
        ASSERT_EQ(load.records.size(), 1u);
        EXPECT_EQ(load.records[0], r) << format_drawing_row(r);
    }
}

TEST(UniverseIo, BundledFixture) {
    const auto u = fixtures::typical_universe();
    ASSERT_EQ(u.size(), 5u);
    EXPECT_EQ(u.names()[1], "EAFE");
    EXPECT_DOUBLE_EQ(u.mu()[1], 0.242);
    EXPECT_DOUBLE_EQ(u.C()(4, 4), 12.857);
}

TEST(UniverseIo, ReturnSeriesCsv) {
    std::istringstream in(
        "date,a,b\n"
        "2003-01-03,1,\n"
        "2003-01-10,2,4\n"
        "2003-01-17,3,6\n"
        "2003-01-24,4,8\n");
    const auto series = parse_return_series_csv(in);
    ASSERT_EQ(series.size(), 2u);
    EXPECT_EQ(series[1].name, "b");
    EXPECT_FALSE(series[1].returns[0].has_value());
    const auto u = estimate_universe(series);
    EXPECT_DOUBLE_EQ(u.mu()[0], 2.5);
    EXPECT_DOUBLE_EQ(u.mu()[1], 6.0);
    EXPECT_DOUBLE_EQ(u.C()(0, 1), 2.0);
}

TEST(UniverseIo, CsvFileGoesThroughEstimator) {
    const auto path = std::filesystem::temp_directory_path() / "lotto-edge-universe.csv";
    std::ofstream(path) << "date,a,b\n2003-01-03,1,2\n2003-01-10,2,4\n2003-01-17,3,7\n";
    const auto u = load_universe(path);
    EXPECT_EQ(u.size(), 2u);
    EXPECT_DOUBLE_EQ(u.C()(0, 0), 1.0);
    std::filesystem::remove(path);
}

TEST(UniverseIo, MalformedInput) {
    EXPECT_THROW(parse_universe_json(R"({"names": ["a"], "mu": [1]})"), ParseError);
    EXPECT_THROW(parse_universe_json("[1, 2"), ParseError);
    EXPECT_THROW(parse_universe_json(R"({"names": ["a", "b"], "mu": [1, 2], "covariance": [[1, 0]]})"),
                 Error);
    std::istringstream bad_header("when,a\n2003-01-03,1\n");
    EXPECT_THROW(parse_return_series_csv(bad_header), ParseError);
    std::istringstream bad_cell("date,a\n2003-01-03,x\n");
    EXPECT_THROW(parse_return_series_csv(bad_cell), ParseError);
}
