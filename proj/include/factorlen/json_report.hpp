#pragma once

// JSON rendering of reports: one top-level object holding the run config
// and the rows. Kept separate from report.hpp so the core library does not
// drag the JSON dependency into every translation unit.

#include <json.hpp>

#include "factorlen/report.hpp"

namespace factorlen {

namespace detail {

inline nlohmann::ordered_json cell_to_json(const Cell& cell) {
    switch (cell.index()) {
    case 0: {
        i128 v = std::get<i128>(cell);
        if (v >= std::numeric_limits<i64>::min() && v <= std::numeric_limits<i64>::max())
            return static_cast<i64>(v);
        return to_string_i128(v);
    }
    case 1: return std::get<Rat>(cell).to_fraction_string();
    case 2: return std::get<double>(cell);
    default: return std::get<std::string>(cell);
    }
}

}  // namespace detail

inline std::string to_json(const Report& rep) {
    nlohmann::ordered_json root;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    for (const auto& [key, value] : rep.config) config[key] = value;
    root["config"] = config;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : rep.table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < rep.table.columns.size(); ++c)
            obj[rep.table.columns[c]] = detail::cell_to_json(row[c]);
        rows.push_back(std::move(obj));
    }
    root["rows"] = rows;
    return root.dump(2) + "\n";
}

}  // namespace factorlen
