#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "wythoff/tables.hpp"
#include "wythoff/wythoff_array.hpp"

namespace wythoff {

struct RenderSpec {
    enum class Format { text, csv, json };

    Format format = Format::text;
    bool show_labels = true;
    std::string empty_cell_marker = ".";
};

inline const char* table_kind_name(SparseTable::Kind kind) {
    switch (kind) {
    case SparseTable::Kind::fibbinary: return "fibbinary";
    case SparseTable::Kind::wythoff: return "wythoff";
    case SparseTable::Kind::fractal: return "fractal";
    }
    return "?";
}

namespace detail {

// Right-aligns a grid of prerendered strings, two spaces between columns.
inline std::string align_grid(const std::vector<std::vector<std::string>>& grid) {
    std::size_t cols = 0;
    for (const auto& row : grid)
        cols = std::max(cols, row.size());
    std::vector<std::size_t> widths(cols, 0);
    for (const auto& row : grid)
        for (std::size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    std::string out;
    for (const auto& row : grid) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0)
                out += "  ";
            out += std::string(widths[c] - row[c].size(), ' ');
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

inline std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

} // namespace detail

inline std::string render_array(const ArrayWindow& w, const RenderSpec& spec) {
    using Format = RenderSpec::Format;
    if (spec.format == Format::text) {
        std::vector<std::vector<std::string>> grid(w.rows);
        for (std::size_t r = 0; r < w.rows; ++r)
            for (std::size_t c = 0; c < w.cols; ++c)
                grid[r].push_back(std::to_string(w.at(r, c)));
        return detail::align_grid(grid);
    }
    if (spec.format == Format::csv) {
        std::string out;
        if (spec.show_labels) {
            std::vector<std::string> labels;
            for (std::size_t c = 0; c < w.cols; ++c)
                labels.push_back(std::to_string(w.col_label(c)));
            out += detail::csv_line(labels);
        }
        for (std::size_t r = 0; r < w.rows; ++r) {
            std::vector<std::string> fields;
            for (std::size_t c = 0; c < w.cols; ++c)
                fields.push_back(std::to_string(w.at(r, c)));
            out += detail::csv_line(fields);
        }
        return out;
    }
    nlohmann::json j;
    j["rows"] = w.rows;
    j["cols"] = w.cols;
    j["row_origin"] = w.row_origin;
    std::vector<int> labels;
    for (std::size_t c = 0; c < w.cols; ++c)
        labels.push_back(w.col_label(c));
    j["col_labels"] = labels;
    auto cells = nlohmann::json::array();
    for (std::size_t r = 0; r < w.rows; ++r) {
        auto row = nlohmann::json::array();
        for (std::size_t c = 0; c < w.cols; ++c)
            row.push_back(w.at(r, c));
        cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);
    return j.dump() + "\n";
}

inline std::string render_table(const SparseTable& t, const RenderSpec& spec) {
    using Format = RenderSpec::Format;
    if (spec.format == Format::text) {
        std::vector<std::vector<std::string>> grid;
        for (std::size_t r = 1; r <= t.rows; ++r) {
            std::vector<std::string> row;
            for (Nat x = 0; x < t.width; ++x) {
                auto v = t.at(r, x);
                row.push_back(v ? std::to_string(*v) : spec.empty_cell_marker);
            }
            grid.push_back(std::move(row));
        }
        if (spec.show_labels) {
            std::vector<std::string> footer;
            for (Nat x = 0; x < t.width; ++x)
                footer.push_back(std::to_string(x));
            grid.push_back(std::move(footer));
        }
        return detail::align_grid(grid);
    }
    if (spec.format == Format::csv) {
        std::string out;
        if (spec.show_labels) {
            std::vector<std::string> labels;
            for (Nat x = 0; x < t.width; ++x)
                labels.push_back(std::to_string(x));
            out += detail::csv_line(labels);
        }
        for (std::size_t r = 1; r <= t.rows; ++r) {
            std::vector<std::string> fields;
            for (Nat x = 0; x < t.width; ++x) {
                auto v = t.at(r, x);
                fields.push_back(v ? std::to_string(*v) : std::string());
            }
            out += detail::csv_line(fields);
        }
        return out;
    }
    nlohmann::json j;
    j["kind"] = table_kind_name(t.kind);
    j["rows"] = t.rows;
    j["x_max"] = t.x_max;
    std::vector<Nat> labels;
    for (Nat x = 0; x < t.width; ++x)
        labels.push_back(x);
    j["labels"] = labels;
    auto cells = nlohmann::json::array();
    for (std::size_t r = 1; r <= t.rows; ++r) {
        auto row = nlohmann::json::array();
        for (Nat x = 0; x < t.width; ++x) {
            auto v = t.at(r, x);
            if (v)
                row.push_back(*v);
            else
                row.push_back(nullptr);
        }
        cells.push_back(std::move(row));
    }
    j["cells"] = std::move(cells);
    return j.dump() + "\n";
}

} // namespace wythoff
