#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ridgekit {

/// A parsed numeric CSV: one header row of labels, then rows of doubles.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

/// Parses CSV text with a header row and '.'-decimal numeric fields.
/// Raises parse_error with 1-based row/column location on malformed input;
/// `origin` names the source in messages.
CsvTable parse_numeric_csv(std::string_view text, std::string_view origin);

/// Reads and parses a CSV file; missing or unreadable files raise data_error.
CsvTable read_numeric_csv(const std::string& path);

}  // namespace ridgekit
