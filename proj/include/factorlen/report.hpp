#pragma once

// Tabular report model shared by the CLI subcommands. Cells are typed
// (integer, exact rational, floating value, text) and serialize losslessly:
// rationals as "p/q", reals as shortest round-trip decimals. CSV output
// additionally carries a 6-decimal companion column (round-half-to-even)
// next to every rational or real column, mirroring the precision used in
// printed tables.

#include <charconv>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "factorlen/rational.hpp"

namespace factorlen {

using Cell = std::variant<i128, Rat, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> cells) { rows.push_back(std::move(cells)); }
};

struct Report {
    std::vector<std::pair<std::string, std::string>> config;  // ordered
    Table table;
};

namespace detail {

inline std::string real_to_string(double d) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), d);
    std::string s(buf, res.ptr);
    // Keep reals syntactically distinct from integers.
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos &&
        s.find("inf") == std::string::npos && s.find("nan") == std::string::npos)
        s += ".0";
    return s;
}

inline std::string cell_to_string(const Cell& cell) {
    switch (cell.index()) {
    case 0: return to_string_i128(std::get<i128>(cell));
    case 1: return std::get<Rat>(cell).to_fraction_string();
    case 2: return real_to_string(std::get<double>(cell));
    default: return std::get<std::string>(cell);
    }
}

inline std::string cell_to_6dp(const Cell& cell) {
    if (cell.index() == 1) return std::get<Rat>(cell).to_decimal_string(6);
    if (cell.index() == 2) {
        return Rat::from_double(std::get<double>(cell)).to_decimal_string(6);
    }
    return cell_to_string(cell);
}

inline bool needs_companion(const Table& t, std::size_t col) {
    for (const auto& row : t.rows)
        if (row[col].index() == 1 || row[col].index() == 2) return true;
    return false;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace detail

inline std::string to_csv(const Report& rep) {
    const Table& t = rep.table;
    std::vector<bool> companion(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c)
        companion[c] = detail::needs_companion(t, c);

    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += detail::csv_escape(t.columns[c]);
        if (companion[c]) out += "," + detail::csv_escape(t.columns[c] + "_6dp");
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out += ',';
            out += detail::csv_escape(detail::cell_to_string(row[c]));
            if (companion[c]) out += "," + detail::csv_escape(detail::cell_to_6dp(row[c]));
        }
        out += '\n';
    }
    return out;
}

// Parses a CSV produced by to_csv back into a Table, inferring cell kinds
// from the serialized syntax ("p/q" -> rational, digits -> integer,
// decimal/exponent forms -> real, anything else -> text). Companion
// columns are recognized by the _6dp suffix and skipped.
inline Table parse_csv(const std::string& csv) {
    std::vector<std::vector<std::string>> raw;
    std::vector<std::string> field_row;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < csv.size(); ++i) {
        char c = csv[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < csv.size() && csv[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            field_row.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            field_row.push_back(std::move(field));
            field.clear();
            raw.push_back(std::move(field_row));
            field_row.clear();
        } else {
            field += c;
        }
    }
    if (!field.empty() || !field_row.empty()) {
        field_row.push_back(std::move(field));
        raw.push_back(std::move(field_row));
    }
    if (raw.empty()) throw Error(Errc::BadInput, "empty CSV");

    Table t;
    std::vector<std::size_t> keep;
    const auto& header = raw[0];
    for (std::size_t c = 0; c < header.size(); ++c) {
        if (header[c].size() > 4 &&
            header[c].compare(header[c].size() - 4, 4, "_6dp") == 0)
            continue;
        keep.push_back(c);
        t.columns.push_back(header[c]);
    }

    auto parse_cell = [](const std::string& s) -> Cell {
        if (!s.empty() && s.find('/') != std::string::npos) {
            try {
                return Rat::from_string(s);
            } catch (const Error&) {
                return s;
            }
        }
        bool integral = !s.empty();
        for (std::size_t i = 0; i < s.size(); ++i) {
            char c = s[i];
            if (i == 0 && (c == '-' || c == '+') && s.size() > 1) continue;
            if (c < '0' || c > '9') {
                integral = false;
                break;
            }
        }
        if (integral) return parse_i128(s);
        double d = 0;
        auto res = std::from_chars(s.data(), s.data() + s.size(), d);
        if (res.ec == std::errc() && res.ptr == s.data() + s.size()) return d;
        return s;
    };

    for (std::size_t r = 1; r < raw.size(); ++r) {
        std::vector<Cell> row;
        row.reserve(keep.size());
        for (std::size_t c : keep) {
            if (c >= raw[r].size())
                throw Error(Errc::BadInput, "ragged CSV row");
            row.push_back(parse_cell(raw[r][c]));
        }
        t.add_row(std::move(row));
    }
    return t;
}

}  // namespace factorlen
