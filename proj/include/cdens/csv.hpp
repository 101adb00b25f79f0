#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cdens::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    int column(const std::string& name) const;  // -1 when absent
};

// RFC-4180-ish reader: comma separated, double quotes with "" escapes,
// accepts both LF and CRLF input. Every row must match the header width.
Table read_file(const std::string& path);
Table read_string(const std::string& text);

// Quotes only when needed; always writes LF endings and UTF-8 as-is.
std::string escape_field(const std::string& field);
void write_row(std::ostream& os, const std::vector<std::string>& fields);

// Canonical numeric formats for the output dialect: integers verbatim,
// ratios with 6 decimals, '.' separator.
std::string format_ratio(double v);
std::string format_int(std::int64_t v);

}  // namespace cdens::csv
