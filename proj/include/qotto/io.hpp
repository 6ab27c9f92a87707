#ifndef QOTTO_IO_HPP
#define QOTTO_IO_HPP

// Tabular output: CSV (comma, '.', header row, LF, 17 significant
// digits) and JSON. Cells are doubles, strings, or absent.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qotto/errors.hpp"

namespace qotto {

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string cell_to_string(const Cell& c) {
    if (std::holds_alternative<std::monostate>(c)) return "";
    if (const double* d = std::get_if<double>(&c)) return format_double(*d);
    return std::get<std::string>(c);
}

inline std::string to_csv(const Table& t) {
    std::string out;
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
        if (j) out += ',';
        out += t.columns[j];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out += ',';
            out += cell_to_string(row[j]);
        }
        out += '\n';
    }
    return out;
}

inline Cell parse_cell(const std::string& field) {
    if (field.empty()) return std::monostate{};
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end && *end == '\0' && end != field.c_str()) return v;
    return field;
}

inline Table from_csv(const std::string& text) {
    Table t;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        if (line.empty()) fields.emplace_back();
        if (header) {
            t.columns = fields;
            header = false;
        } else {
            std::vector<Cell> row;
            row.reserve(fields.size());
            for (const auto& f : fields) row.push_back(parse_cell(f));
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

inline nlohmann::json to_json(const Table& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json obj;
        for (std::size_t j = 0; j < row.size() && j < t.columns.size(); ++j) {
            const Cell& c = row[j];
            if (std::holds_alternative<std::monostate>(c))
                obj[t.columns[j]] = nullptr;
            else if (const double* d = std::get_if<double>(&c))
                obj[t.columns[j]] = *d;
            else
                obj[t.columns[j]] = std::get<std::string>(c);
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

inline void write_table(const Table& t, const std::string& path, const std::string& format) {
    std::string payload;
    if (format == "csv")
        payload = to_csv(t);
    else if (format == "json")
        payload = to_json(t).dump(2) + "\n";
    else
        throw ValidationError("unknown output format: " + format);
    if (path.empty() || path == "-") {
        std::fputs(payload.c_str(), stdout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    out << payload;
}

// "min:max:step" -> inclusive grid, deterministic cell count.
struct GridSpec {
    double min, max, step;
};

inline GridSpec parse_grid(const std::string& s) {
    GridSpec g;
    char extra = '\0';
    if (std::sscanf(s.c_str(), "%lf:%lf:%lf%c", &g.min, &g.max, &g.step, &extra) != 3)
        throw ValidationError("grid spec must be min:max:step, got: " + s);
    if (!(g.step > 0.0)) throw ValidationError("grid step must be positive");
    if (g.max < g.min) throw ValidationError("grid max must be >= min");
    return g;
}

inline std::vector<double> grid_points(const GridSpec& g) {
    std::vector<double> pts;
    const auto n = static_cast<long>(std::floor((g.max - g.min) / g.step + 1e-9));
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) pts.push_back(g.min + g.step * static_cast<double>(k));
    return pts;
}

} // namespace qotto

#endif
