#include "ridgekit/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ridgekit/errors.hpp"

namespace ridgekit {

namespace {

std::string_view trim(std::string_view field) {
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
        field.remove_prefix(1);
    }
    while (!field.empty() &&
           (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
        field.remove_suffix(1);
    }
    return field;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

CsvTable parse_numeric_csv(std::string_view text, std::string_view origin) {
    CsvTable table;
    std::size_t row_number = 0;
    std::size_t offset = 0;
    while (offset <= text.size()) {
        const std::size_t newline = text.find('\n', offset);
        std::string_view line = newline == std::string_view::npos
                                    ? text.substr(offset)
                                    : text.substr(offset, newline - offset);
        offset = newline == std::string_view::npos ? text.size() + 1 : newline + 1;
        if (trim(line).empty()) continue;
        ++row_number;

        const auto fields = split_fields(line);
        if (row_number == 1) {
            for (const auto field : fields) table.header.emplace_back(field);
            continue;
        }
        if (fields.size() != table.header.size()) {
            throw parse_error(std::string(origin) + ": row " +
                                  std::to_string(row_number) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(table.header.size()),
                              row_number, fields.size());
        }
        std::vector<double> row(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            const std::string_view field = fields[c];
            double value = 0.0;
            const auto [end, ec] =
                std::from_chars(field.data(), field.data() + field.size(), value);
            if (ec != std::errc{} || end != field.data() + field.size() ||
                field.empty()) {
                throw parse_error(std::string(origin) + ": non-numeric value '" +
                                      std::string(field) + "' at row " +
                                      std::to_string(row_number) + ", column " +
                                      std::to_string(c + 1),
                                  row_number, c + 1);
            }
            row[c] = value;
        }
        table.rows.push_back(std::move(row));
    }
    if (table.header.empty()) {
        throw data_error(std::string(origin) + ": empty CSV, header row required");
    }
    return table;
}

CsvTable read_numeric_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw data_error("cannot open '" + path + "' for reading");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_numeric_csv(buffer.str(), path);
}

}  // namespace ridgekit
