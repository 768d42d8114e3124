#include "fockcut/report.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "fockcut/types.hpp"

namespace fockcut {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size())
        throw Error("table row width does not match column count");
    rows.push_back(std::move(row));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string cell_csv(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(bool b) const { return b ? "true" : "false"; }
        std::string operator()(long long i) const { return std::to_string(i); }
        std::string operator()(double d) const { return format_double(d); }
        std::string operator()(const std::string& s) const {
            if (s.find_first_of(",\"\n") == std::string::npos) return s;
            std::string out = "\"";
            for (char ch : s) {
                if (ch == '"') out += '"';
                out += ch;
            }
            out += '"';
            return out;
        }
    };
    return std::visit(Visitor{}, c);
}

nlohmann::json cell_json(const Cell& c) {
    struct Visitor {
        nlohmann::json operator()(std::monostate) const { return nullptr; }
        nlohmann::json operator()(bool b) const { return b; }
        nlohmann::json operator()(long long i) const { return i; }
        nlohmann::json operator()(double d) const { return d; }
        nlohmann::json operator()(const std::string& s) const { return s; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

std::string Report::render_csv() const {
    std::string out;
    out += "# kind," + kind + "\n";
    for (const auto& [key, value] : metadata) out += "# " + key + "," + value + "\n";
    out += "# passed," + std::string(passed ? "true" : "false") + "\n";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_csv(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string Report::render_json() const {
    nlohmann::json j;
    j["kind"] = kind;
    nlohmann::json meta = nlohmann::json::object();
    for (const auto& [key, value] : metadata) meta[key] = value;
    j["metadata"] = meta;
    j["passed"] = passed;
    j["columns"] = table.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json jr = nlohmann::json::object();
        for (size_t i = 0; i < row.size(); ++i) jr[table.columns[i]] = cell_json(row[i]);
        rows.push_back(jr);
    }
    j["rows"] = rows;
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

std::string Report::render(const std::string& format) const {
    if (format == "csv") return render_csv();
    if (format == "json") return render_json();
    throw ConfigError("unknown report format '" + format + "' (expected csv or json)");
}

void Report::write(const std::string& path, const std::string& format) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output path '" + path + "'");
    out << render(format);
    if (!out) throw Error("failed writing report to '" + path + "'");
}

}  // namespace fockcut
