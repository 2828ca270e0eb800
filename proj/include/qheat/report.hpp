#pragma once

// Tabular reports for the command-line tool: fixed column set, rows in
// insertion order, rendered as CSV or as a JSON array of row objects.

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qheat::report {

/// Empty cell, number, or text.
using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row; throws std::invalid_argument on a column-count mismatch.
  void add_row(std::vector<Cell> row);
};

/// 9 significant digits ("%.9g"): plain notation for 1e-4 <= |x| < 1e9,
/// scientific otherwise. Negative zero prints as "0"; non-finite values are
/// rendered as empty cells by the writers.
std::string format_number(double x);

/// Header line, then one line per row; ',' separated, LF terminated.
void write_csv(std::ostream& out, const Table& table);

/// Array of objects keyed by column name. Numbers carry the same 9 digits as
/// the CSV; empty cells are null.
void write_json(std::ostream& out, const Table& table);

} // namespace qheat::report
