#pragma once

// Plot-ready tables. Cells are strings; exact rationals go in as "p/q" and
// get a companion decimal column from add_rational_columns.

#include "arithgrass/exactmath.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace arithgrass {

enum class OutputFormat { json, csv };

OutputFormat parse_output_format(const std::string& s);

enum class CellKind { text, integer, boolean };

struct Column {
    std::string name;
    CellKind kind = CellKind::text;
};

inline Column int_col(std::string name) { return {std::move(name), CellKind::integer}; }
inline Column bool_col(std::string name) { return {std::move(name), CellKind::boolean}; }
inline Column text_col(std::string name) { return {std::move(name), CellKind::text}; }

inline std::string cell(bool b) { return b ? "true" : "false"; }
inline std::string cell(long long v) { return std::to_string(v); }
inline std::string cell(long v) { return std::to_string(v); }
inline std::string cell(int v) { return std::to_string(v); }

class Table {
public:
    explicit Table(std::vector<Column> columns);

    const std::vector<Column>& columns() const { return columns_; }
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    /// Throws std::invalid_argument if the row width differs from the header.
    void add_row(std::vector<std::string> row);

private:
    std::vector<Column> columns_;
    std::vector<std::vector<std::string>> rows_;
};

/// An exact column plus its decimal approximation: {name, name + "_approx"}.
std::vector<Column> rational_columns(const std::string& name);

/// {to_string(x), to_decimal(x, 12)}.
std::vector<std::string> rational_cells(const Rational& x);

/// CSV: header row then data rows, comma separated, fields quoted only when
/// they contain a comma, quote or newline. JSON: one object per row, one
/// row per line, keys in column order, integer and boolean columns typed.
void emit_table(const Table& table, OutputFormat format, std::ostream& out);

}  // namespace arithgrass
