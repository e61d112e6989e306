#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enso/csv.hpp"
#include "enso/models.hpp"
#include "enso/series.hpp"
#include "enso/vim.hpp"

namespace enso::report {

enum class Method { exact, dtm, adm, vim, rk4 };

[[nodiscard]] std::string_view display_name(Method m) noexcept;  // "Exact", "DTM", ...
/// Case-insensitive. Throws UsageError on unknown names.
[[nodiscard]] Method parse_method(std::string_view name);

struct SolverSettings {
  int order = 25;                    // DTM truncation order
  std::optional<int> terms;          // ADM component count, defaults to order+1
  int iters = 15;                    // VIM iterations
  int degree_cap = vim::kDefaultDegreeCap;
  double rk4_step = 1e-4;

  [[nodiscard]] int adm_terms() const noexcept { return terms.value_or(order + 1); }
};

/// Value of H (and h for the coupled model) along a grid, for one method.
struct Curve {
  std::vector<double> H;
  std::vector<double> h;
};

/// Solves with `method` and samples the solution on `ts`. Numeric failures
/// propagate as NumericError.
[[nodiscard]] Curve solve_on_grid(Method method, const ModelParams& params,
                                  const std::vector<double>& ts, const SolverSettings& settings);

/// 0, step, 2 step, ... up to t_max inclusive; t_max is appended when it is
/// not a multiple of step.
[[nodiscard]] std::vector<double> make_grid(double t_max, double step);

struct TableSpec {
  ModelParams params;
  std::vector<double> ts;
  std::vector<double> eps;
  std::vector<double> sigmas;  // delayed only; empty keeps params' sigma
  std::vector<Method> methods;
  SolverSettings settings;

  /// Grid non-empty and strictly increasing from 0, eps list non-empty,
  /// sigma sweep only on the delayed model.
  void validate() const;
};

/// Default method list: DTM, ADM, VIM, with Exact first for the delayed model.
[[nodiscard]] std::vector<Method> default_methods(ModelKind kind);

/// H per (method, eps) column, 9 decimals. Failed solves leave empty cells,
/// a trailing note, and set `failed`.
[[nodiscard]] CsvTable cmd_table(const TableSpec& spec);

enum class OracleKind { exact, rk4 };

/// Absolute deviation of each method in spec.methods from the oracle, per
/// (eps, sigma) cell. The exact oracle needs the delayed model.
[[nodiscard]] CsvTable cmd_errors(const TableSpec& spec, OracleKind oracle);

struct SweepSpec {
  ModelParams params;  // eps already set to the target column's value
  Method method = Method::dtm;
  std::vector<double> ts;
  std::vector<double> target;
  int from = 1;
  int to = 30;
  std::optional<double> t_limit;  // compare only entries with t <= t_limit
  int degree_cap = vim::kDefaultDegreeCap;
};

struct SweepRow {
  int index = 0;  // truncation order (DTM, ADM) or iteration count (VIM)
  std::optional<double> max_dev;
  std::string error;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  int best_index = -1;
  double best_dev = 0.0;

  [[nodiscard]] CsvTable to_csv() const;
};

/// For ADM the swept index is the highest component index (terms = index+1),
/// which makes it directly comparable with the DTM order.
[[nodiscard]] SweepReport cmd_sweep(const SweepSpec& spec);

struct TrajectorySpec {
  ModelParams params;
  double t_max = 1.0;
  double t_step = 0.1;
  std::vector<Method> methods;
  SolverSettings settings;
};

/// Columns t, then H_<METHOD> (and h_<METHOD> for the coupled model) per method.
[[nodiscard]] CsvTable cmd_trajectory(const TrajectorySpec& spec);

}  // namespace enso::report
