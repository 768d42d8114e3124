#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace fockcut {

using Cell = std::variant<std::monostate, bool, long long, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

// Result of one verify/evolve/study run: metadata, a grid-point table, an
// overall pass flag, and a short human-readable summary.
struct Report {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> metadata;
    Table table;
    bool passed = true;
    std::string summary;

    std::string render_csv() const;
    std::string render_json() const;
    std::string render(const std::string& format) const;
    void write(const std::string& path, const std::string& format) const;
};

std::string format_double(double v);

}  // namespace fockcut
