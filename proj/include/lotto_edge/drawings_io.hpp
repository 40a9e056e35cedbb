#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lotto_edge/lottery_model.hpp"

namespace lotto_edge {

/// One historical drawing. J is the after-tax lump sum; when the source row
/// omits it, it is back-filled as lump_sum * (1 - tax_rate).
struct DrawingRecord {
    std::string date;  // ISO yyyy-mm-dd
    std::string lottery;
    std::optional<double> annuity_pre_tax;
    std::optional<double> lump_sum_pre_tax;
    double J = 0.0;
    double N = 0.0;

    DrawingParams params() const { return DrawingParams(N, J); }
    bool operator==(const DrawingRecord&) const = default;
};

struct RowError {
    std::size_t row = 0;  // 1-based line number in the file, header is row 1
    std::string message;
};

struct DrawingLoad {
    std::vector<DrawingRecord> records;
    std::vector<RowError> errors;
};

// Number with optional scientific exponent and optional 'm' (x 10^6) suffix.
// Throws ParseError.
double parse_amount(std::string_view text);

/// Reads CSV with header date,lottery,annuity,lump_sum,J,N. Bad rows are
/// collected into errors with their row numbers; a missing or different
/// header throws ParseError.
DrawingLoad parse_drawings(std::istream& in, double tax_rate = kDefaultTaxRate);
DrawingLoad load_drawings(const std::filesystem::path& path, double tax_rate = kDefaultTaxRate);

inline constexpr std::string_view kDrawingsHeader = "date,lottery,annuity,lump_sum,J,N";

// One CSV row (no newline) that parse_drawings reads back to the same record.
std::string format_drawing_row(const DrawingRecord& record);

}  // namespace lotto_edge
