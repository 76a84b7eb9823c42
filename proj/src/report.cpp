// SPDX-License-Identifier: Apache-2.0
#include "compsel/report.hpp"

#include <cstdio>
#include <sstream>

#include "compsel/errors.hpp"

namespace compsel {

namespace {

std::string number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

void Report::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw ShapeError("row width differs from column count");
  rows.push_back(std::move(row));
}

std::size_t Report::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i].name == name) return i;
  throw ShapeError("no column named " + name);
}

void write_csv(std::ostream& out, const Report& report) {
  out << "# experiment=" << report.id << '\n';
  out << "# seed=" << report.seed << '\n';
  for (const auto& [key, value] : report.config) out << "# " << key << '=' << value << '\n';
  for (const auto& note : report.notes) out << "# " << note << '\n';
  for (std::size_t i = 0; i < report.columns.size(); ++i)
    out << (i ? "," : "") << report.columns[i].name;
  out << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << number(row[i]);
    out << '\n';
  }
}

std::string to_csv(const Report& report) {
  std::ostringstream out;
  write_csv(out, report);
  return out.str();
}

std::string columns_doc(std::span<const Report> reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << r.id << ".csv\n";
    for (const auto& c : r.columns) out << "  " << c.name << ": " << c.description << '\n';
    out << '\n';
  }
  return out.str();
}

}  // namespace compsel
