#include "cdens/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "cdens/errors.hpp"

namespace cdens::csv {

int Table::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

namespace {

// Splits one logical CSV record starting at `pos`; handles quoted fields that
// may contain commas and newlines. Returns false at end of input.
bool next_record(const std::string& text, std::size_t& pos, std::vector<std::string>& out) {
    out.clear();
    if (pos >= text.size()) return false;
    std::string field;
    bool in_quotes = false;
    bool any = false;
    while (pos < text.size()) {
        char c = text[pos];
        if (in_quotes) {
            if (c == '"') {
                if (pos + 1 < text.size() && text[pos + 1] == '"') {
                    field.push_back('"');
                    pos += 2;
                } else {
                    in_quotes = false;
                    ++pos;
                }
            } else {
                field.push_back(c);
                ++pos;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            any = true;
            ++pos;
        } else if (c == ',') {
            out.push_back(std::move(field));
            field.clear();
            any = true;
            ++pos;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') ++pos;
            ++pos;
            out.push_back(std::move(field));
            return true;
        } else {
            field.push_back(c);
            any = true;
            ++pos;
        }
    }
    if (any || !field.empty()) {
        out.push_back(std::move(field));
        return true;
    }
    return false;
}

}  // namespace

Table read_string(const std::string& text) {
    Table t;
    std::size_t pos = 0;
    std::vector<std::string> rec;
    if (!next_record(text, pos, rec)) return t;
    t.header = rec;
    while (next_record(text, pos, rec)) {
        if (rec.size() == 1 && rec[0].empty()) continue;  // trailing blank line
        if (rec.size() != t.header.size()) {
            throw schema_error("csv row has " + std::to_string(rec.size()) + " fields, header has " +
                               std::to_string(t.header.size()));
        }
        t.rows.push_back(rec);
    }
    return t;
}

Table read_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw config_error("cannot open csv file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return read_string(ss.str());
}

std::string escape_field(const std::string& field) {
    bool needs = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) os << ',';
        os << escape_field(fields[i]);
    }
    os << '\n';
}

std::string format_ratio(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string format_int(std::int64_t v) { return std::to_string(v); }

}  // namespace cdens::csv
