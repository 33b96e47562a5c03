#include "arithgrass/report.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace arithgrass {

OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw std::invalid_argument("unknown output format '" + s + "'");
}

Table::Table(std::vector<Column> columns) : columns_(std::move(columns)) {}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns_.size()) {
        throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                    std::to_string(columns_.size()) + " columns");
    }
    rows_.push_back(std::move(row));
}

std::vector<Column> rational_columns(const std::string& name) {
    return {text_col(name), text_col(name + "_approx")};
}

std::vector<std::string> rational_cells(const Rational& x) { return {to_string(x), to_decimal(x, 12)}; }

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

nlohmann::ordered_json json_cell(const std::string& s, CellKind kind) {
    switch (kind) {
        case CellKind::integer: return std::stoll(s);
        case CellKind::boolean: return s == "true";
        case CellKind::text: break;
    }
    return s;
}

}  // namespace

void emit_table(const Table& table, OutputFormat format, std::ostream& out) {
    const auto& cols = table.columns();
    if (format == OutputFormat::csv) {
        for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << csv_field(cols[c].name);
        out << '\n';
        for (const auto& row : table.rows()) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_field(row[c]);
            out << '\n';
        }
        return;
    }
    for (const auto& row : table.rows()) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t c = 0; c < cols.size(); ++c) obj[cols[c].name] = json_cell(row[c], cols[c].kind);
        out << obj.dump() << '\n';
    }
}

}  // namespace arithgrass
