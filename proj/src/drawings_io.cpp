#include "lotto_edge/drawings_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>

#include <fmt/format.h>

#include "lotto_edge/error.hpp"

namespace lotto_edge {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

bool is_iso_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

std::optional<double> optional_amount(std::string_view field) {
    if (field.empty()) return std::nullopt;
    return parse_amount(field);
}

std::string format_exact(double value) { return fmt::format("{}", value); }

}  // namespace

double parse_amount(std::string_view text) {
    text = trim(text);
    double scale = 1.0;
    if (!text.empty() && (text.back() == 'm' || text.back() == 'M')) {
        scale = 1e6;
        text.remove_suffix(1);
    }
    double value = 0.0;
    const auto* begin = text.data();
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (text.empty() || ec != std::errc() || ptr != end) {
        throw ParseError(fmt::format("'{}' is not a number", text));
    }
    return value * scale;
}

DrawingLoad parse_drawings(std::istream& in, double tax_rate) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError("drawings file is empty; expected header " + std::string(kDrawingsHeader));
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line) != kDrawingsHeader) {
        throw ParseError(fmt::format("drawings header must be '{}', got '{}'", kDrawingsHeader, line));
    }

    DrawingLoad out;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        const auto fields = split_csv(line);
        try {
            if (fields.size() != 6) {
                throw ParseError(fmt::format("expected 6 fields, got {}", fields.size()));
            }
            DrawingRecord record;
            if (!is_iso_date(fields[0])) {
                throw ParseError(fmt::format("'{}' is not an ISO date", fields[0]));
            }
            record.date = std::string(fields[0]);
            if (fields[1].empty()) throw ParseError("lottery name is empty");
            record.lottery = std::string(fields[1]);
            record.annuity_pre_tax = optional_amount(fields[2]);
            record.lump_sum_pre_tax = optional_amount(fields[3]);
            const auto jackpot = optional_amount(fields[4]);
            if (jackpot) {
                record.J = *jackpot;
            } else if (record.lump_sum_pre_tax) {
                record.J = *record.lump_sum_pre_tax * (1.0 - tax_rate);
            } else {
                throw ParseError("row needs J or lump_sum");
            }
            if (fields[5].empty()) throw ParseError("ticket sales N is missing");
            record.N = parse_amount(fields[5]);
            if (!(record.N > 0.0) || !(record.J > 0.0)) {
                throw ParseError("N and J must be positive");
            }
            out.records.push_back(std::move(record));
        } catch (const ParseError& e) {
            out.errors.push_back({row, e.what()});
        }
    }
    return out;
}

DrawingLoad load_drawings(const std::filesystem::path& path, double tax_rate) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(fmt::format("cannot open '{}'", path.string()));
    }
    return parse_drawings(in, tax_rate);
}

std::string format_drawing_row(const DrawingRecord& record) {
    const auto opt = [](const std::optional<double>& v) {
        return v ? format_exact(*v) : std::string();
    };
    return fmt::format("{},{},{},{},{},{}", record.date, record.lottery, opt(record.annuity_pre_tax),
                       opt(record.lump_sum_pre_tax), format_exact(record.J), format_exact(record.N));
}

}  // namespace lotto_edge
