#pragma once

#include <optional>
#include <string>
#include <vector>

namespace enso::report {

enum class CellFormat {
  fixed9,      // %.9f, the reference tables' precision
  scientific,  // %.9e, for error magnitudes far below 1e-9
  integer,
};

struct Column {
  std::string name;
  CellFormat format = CellFormat::fixed9;
  std::vector<std::optional<double>> values;  // nullopt marks a failed cell
};

/// Column-oriented CSV document: one header line, one row per grid entry,
/// then any annotations as trailing "# ..." lines.
struct CsvTable {
  std::vector<Column> columns;
  std::vector<std::string> notes;
  bool failed = false;

  [[nodiscard]] std::string to_string() const;
};

[[nodiscard]] std::string format_cell(double v, CellFormat format);
/// Compact label for a parameter value ("0.05", "1", "0.25").
[[nodiscard]] std::string format_label(double v);

}  // namespace enso::report
