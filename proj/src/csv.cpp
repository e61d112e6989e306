#include "enso/csv.hpp"

#include <cstdio>
#include <algorithm>

namespace enso::report {

std::string format_cell(double v, CellFormat format) {
  char buf[64];
  switch (format) {
    case CellFormat::fixed9:
      std::snprintf(buf, sizeof buf, "%.9f", v);
      break;
    case CellFormat::scientific:
      std::snprintf(buf, sizeof buf, "%.9e", v);
      break;
    case CellFormat::integer:
      std::snprintf(buf, sizeof buf, "%.0f", v);
      break;
  }
  std::string s(buf);
  if (s == "-0.000000000") s.erase(0, 1);
  return s;
}

std::string format_label(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string CsvTable::to_string() const {
  std::string out;
  std::size_t rows = 0;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ',';
    out += columns[i].name;
    rows = std::max(rows, columns[i].values.size());
  }
  out += '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i > 0) out += ',';
      const auto& col = columns[i];
      if (r < col.values.size() && col.values[r]) out += format_cell(*col.values[r], col.format);
    }
    out += '\n';
  }
  for (const auto& note : notes) {
    out += "# ";
    out += note;
    out += '\n';
  }
  return out;
}

}  // namespace enso::report
