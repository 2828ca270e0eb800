#include "qheat/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace qheat::report {

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells, table has " +
                                std::to_string(columns.size()) + " columns");
  rows.push_back(std::move(row));
}

std::string format_number(double x) {
  if (x == 0.0)
    return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

namespace {

std::string csv_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell))
    return std::isfinite(*d) ? format_number(*d) : std::string();
  if (const auto* s = std::get_if<std::string>(&cell))
    return *s;
  return {};
}

nlohmann::ordered_json json_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (!std::isfinite(*d))
      return nullptr;
    // Round-trip through the 9-digit text so the shortest representation
    // emitted by the serializer is exactly those digits.
    return std::stod(format_number(*d));
  }
  if (const auto* s = std::get_if<std::string>(&cell))
    return *s;
  return nullptr;
}

} // namespace

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c)
    out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << csv_cell(row[c]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size(); ++c)
      obj[table.columns[c]] = json_cell(row[c]);
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

} // namespace qheat::report
