#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "enso/models.hpp"

namespace enso::report {

/// Transcribed reference table. Text layout:
///
///   # title: <free text>
///   # model=<coupled|delayed> c=.. eta=.. gamma=.. theta=..  (or alpha/beta/sigma)
///   t,<METHOD>@eps=<value>,...
///   0.0,1.000000000,...
///
/// Lines starting with '#' other than those two are ignored.
struct TargetTable {
  struct Entry {
    std::string method;  // "Exact", "DTM", "ADM", "VIM"
    double eps = 0.0;
    std::vector<double> values;
  };

  std::string title;
  ModelParams params;  // eps left at zero; each column carries its own
  std::vector<double> ts;
  std::vector<Entry> columns;

  /// Throws UsageError when no column matches (method compared case-insensitively).
  [[nodiscard]] const Entry& column(std::string_view method, double eps) const;
};

/// Throws UsageError on malformed input.
[[nodiscard]] TargetTable parse_target_table(std::string_view text);
[[nodiscard]] TargetTable load_target_table(const std::filesystem::path& path);

}  // namespace enso::report
