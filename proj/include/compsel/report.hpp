// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace compsel {

struct Column {
  std::string name;
  std::string description;
};

/// One experiment's output table plus the settings that produced it.
struct Report {
  std::string id;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> config;
  std::vector<std::string> notes;  ///< extra `# key=value` header lines
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  std::size_t column_index(const std::string& name) const;
};

/// CSV with a `#`-prefixed header block (experiment id, seed, config echo,
/// notes) followed by the column header and the rows. Numbers use %.10g.
void write_csv(std::ostream& out, const Report& report);
std::string to_csv(const Report& report);

/// Plain-text listing of every report's columns.
std::string columns_doc(std::span<const Report> reports);

}  // namespace compsel
