#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace bosesemi {

/// One table cell: empty, integer, real (printed with 6 decimals) or text.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  /// Appends a row; missing trailing cells are left empty.
  void add(std::vector<Cell> row);
};

enum class OutputFormat { csv, json };

/// Fixed notation with 6 decimals, independent of the global locale.
/// Non-finite values print as nan / inf / -inf.
std::string format_real(double x);

/// Comma-separated, one header row, LF line endings. Cells containing commas
/// or quotes are quoted.
void write_csv(std::ostream& os, const Table& table);

/// {"config": ..., "results": [row objects keyed by column name]}. Reals are
/// rounded to the same 6 decimals as the CSV; empty cells become null.
nlohmann::ordered_json to_json(const nlohmann::ordered_json& config, const Table& table);

void write_table(std::ostream& os, OutputFormat format, const nlohmann::ordered_json& config,
                 const Table& table);

}  // namespace bosesemi
