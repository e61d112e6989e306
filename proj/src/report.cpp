#include "enso/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>
#include <utility>

#include "enso/adm.hpp"
#include "enso/dtm.hpp"
#include "enso/errors.hpp"
#include "enso/oracle.hpp"

namespace enso::report {
namespace {

struct Cell {
  ModelParams params;
  std::string label;  // "eps=0.05" or "eps=0.05;sigma=0.25"
};

std::vector<Cell> expand_cells(const TableSpec& spec) {
  std::vector<Cell> out;
  for (double eps : spec.eps) {
    ModelParams p = with_eps(spec.params, eps);
    std::string label = "eps=" + format_label(eps);
    if (spec.sigmas.empty()) {
      out.push_back({p, label});
      continue;
    }
    for (double sigma : spec.sigmas) {
      auto d = std::get<DelayedParams>(p);
      d.sigma = sigma;
      out.push_back({d, label + ";sigma=" + format_label(sigma)});
    }
  }
  return out;
}

std::vector<std::optional<double>> as_cells(const std::vector<double>& v) {
  return {v.begin(), v.end()};
}

std::vector<std::optional<double>> empty_cells(std::size_t n) { return std::vector<std::optional<double>>(n); }

Column grid_column(const std::vector<double>& ts) {
  return {"t", CellFormat::fixed9, as_cells(ts)};
}

void check_grid(const std::vector<double>& ts) {
  if (ts.empty()) throw UsageError("time grid is empty");
  if (ts.front() != 0.0) throw UsageError("time grid must start at t = 0");
  for (std::size_t i = 1; i < ts.size(); ++i) {
    if (!(ts[i] > ts[i - 1]) || !std::isfinite(ts[i])) {
      throw UsageError("time grid must be strictly increasing and finite");
    }
  }
}

void check_methods(const std::vector<Method>& methods, ModelKind kind) {
  if (methods.empty()) throw UsageError("no methods requested");
  if (kind == ModelKind::coupled &&
      std::find(methods.begin(), methods.end(), Method::exact) != methods.end()) {
    throw UsageError("the coupled model has no exact solution; use rk4");
  }
}

}  // namespace

std::string_view display_name(Method m) noexcept {
  switch (m) {
    case Method::exact: return "Exact";
    case Method::dtm: return "DTM";
    case Method::adm: return "ADM";
    case Method::vim: return "VIM";
    case Method::rk4: return "RK4";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (n == "exact") return Method::exact;
  if (n == "dtm") return Method::dtm;
  if (n == "adm") return Method::adm;
  if (n == "vim") return Method::vim;
  if (n == "rk4") return Method::rk4;
  throw UsageError("unknown method '" + std::string(name) + "'");
}

std::vector<double> make_grid(double t_max, double step) {
  if (!(t_max >= 0.0) || !std::isfinite(t_max)) throw UsageError("t-max must be >= 0");
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("t-step must be positive");
  std::vector<double> ts;
  const auto n = static_cast<long>(std::floor(t_max / step + 1e-9));
  for (long i = 0; i <= n; ++i) ts.push_back(std::min(static_cast<double>(i) * step, t_max));
  if (t_max - ts.back() > 1e-9 * std::max(1.0, t_max)) ts.push_back(t_max);
  return ts;
}

Curve solve_on_grid(Method method, const ModelParams& params, const std::vector<double>& ts,
                    const SolverSettings& settings) {
  Curve out;
  const bool coupled = kind_of(params) == ModelKind::coupled;
  auto sample = [&](const SeriesPoly& H, const SeriesPoly* h) {
    for (double t : ts) {
      out.H.push_back(eval(H, t));
      if (h) out.h.push_back(eval(*h, t));
    }
  };
  switch (method) {
    case Method::exact: {
      const auto* d = std::get_if<DelayedParams>(&params);
      if (!d) throw UsageError("the coupled model has no exact solution");
      for (double t : ts) out.H.push_back(oracle::exact_delayed(*d, t));
      break;
    }
    case Method::dtm: {
      if (coupled) {
        const auto pair = dtm::assemble_pair(dtm::transform_coupled(std::get<CoupledParams>(params), settings.order));
        sample(pair.H, &pair.h);
      } else {
        sample(dtm::assemble_scalar(dtm::transform_delayed(std::get<DelayedParams>(params), settings.order)), nullptr);
      }
      break;
    }
    case Method::adm: {
      const int n = settings.adm_terms();
      const int cap = std::max(n, 1);
      if (coupled) {
        const auto s = adm::solve_coupled(std::get<CoupledParams>(params), n, cap);
        const SeriesPoly h = adm::partial_sum(*s.v);
        sample(adm::partial_sum(s.u), &h);
      } else {
        sample(adm::partial_sum(adm::solve_delayed(std::get<DelayedParams>(params), n, cap).u), nullptr);
      }
      break;
    }
    case Method::vim: {
      const auto s = vim::solve(params, settings.iters, settings.degree_cap);
      sample(s.H, s.h ? &*s.h : nullptr);
      break;
    }
    case Method::rk4: {
      const auto traj = oracle::rk4_at(params, ts, settings.rk4_step);
      out.H = traj.H;
      out.h = traj.h;
      break;
    }
  }
  for (double v : out.H) {
    if (!std::isfinite(v)) throw OverflowError(std::string(display_name(method)) + " produced a non-finite value", -1);
  }
  return out;
}

void TableSpec::validate() const {
  std::visit([](const auto& p) { p.validate(); }, params);
  check_grid(ts);
  if (eps.empty()) throw UsageError("at least one eps value is required");
  for (double e : eps) {
    if (!std::isfinite(e)) throw UsageError("eps values must be finite");
  }
  if (!sigmas.empty() && kind_of(params) != ModelKind::delayed) {
    throw UsageError("sigma sweeps apply to the delayed model only");
  }
  check_methods(methods, kind_of(params));
}

std::vector<Method> default_methods(ModelKind kind) {
  if (kind == ModelKind::delayed) return {Method::exact, Method::dtm, Method::adm, Method::vim};
  return {Method::dtm, Method::adm, Method::vim};
}

CsvTable cmd_table(const TableSpec& spec) {
  spec.validate();
  CsvTable out;
  out.columns.push_back(grid_column(spec.ts));
  const auto cells = expand_cells(spec);
  for (Method m : spec.methods) {
    for (const auto& cell : cells) {
      Column col{std::string(display_name(m)) + "@" + cell.label, CellFormat::fixed9, {}};
      try {
        col.values = as_cells(solve_on_grid(m, cell.params, spec.ts, spec.settings).H);
      } catch (const NumericError& e) {
        col.values = empty_cells(spec.ts.size());
        out.notes.push_back(col.name + ": " + e.what());
        out.failed = true;
      }
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

CsvTable cmd_errors(const TableSpec& spec, OracleKind oracle) {
  spec.validate();
  if (oracle == OracleKind::exact && kind_of(spec.params) != ModelKind::delayed) {
    throw UsageError("the exact oracle is available for the delayed model only");
  }
  CsvTable out;
  out.columns.push_back(grid_column(spec.ts));
  const Method truth = oracle == OracleKind::exact ? Method::exact : Method::rk4;
  for (const auto& cell : expand_cells(spec)) {
    std::optional<Curve> reference;
    try {
      reference = solve_on_grid(truth, cell.params, spec.ts, spec.settings);
    } catch (const NumericError& e) {
      out.notes.push_back(std::string(display_name(truth)) + "@" + cell.label + ": " + e.what());
      out.failed = true;
    }
    for (Method m : spec.methods) {
      Column col{"err_" + std::string(display_name(m)) + "@" + cell.label, CellFormat::scientific,
                 empty_cells(spec.ts.size())};
      if (reference) {
        try {
          const Curve c = solve_on_grid(m, cell.params, spec.ts, spec.settings);
          for (std::size_t i = 0; i < spec.ts.size(); ++i) col.values[i] = std::abs(c.H[i] - reference->H[i]);
        } catch (const NumericError& e) {
          out.notes.push_back(col.name + ": " + e.what());
          out.failed = true;
        }
      }
      out.columns.push_back(std::move(col));
    }
  }
  return out;
}

SweepReport cmd_sweep(const SweepSpec& spec) {
  check_grid(spec.ts);
  if (spec.target.size() != spec.ts.size()) throw UsageError("sweep target and grid sizes differ");
  if (spec.from < 0 || spec.to < spec.from) throw UsageError("sweep range must satisfy 0 <= from <= to");
  if (spec.method != Method::dtm && spec.method != Method::adm && spec.method != Method::vim) {
    throw UsageError("sweep supports dtm, adm and vim");
  }
  std::vector<double> ts;
  std::vector<double> target;
  for (std::size_t i = 0; i < spec.ts.size(); ++i) {
    if (spec.t_limit && spec.ts[i] > *spec.t_limit + 1e-12) continue;
    ts.push_back(spec.ts[i]);
    target.push_back(spec.target[i]);
  }
  if (ts.empty()) throw UsageError("no target entries fall inside the t limit");

  SweepReport report;
  for (int index = spec.from; index <= spec.to; ++index) {
    SolverSettings settings;
    settings.order = index;
    settings.terms = index + 1;
    settings.iters = index;
    settings.degree_cap = spec.degree_cap;
    SweepRow row{index, std::nullopt, {}};
    try {
      const Curve c = solve_on_grid(spec.method, spec.params, ts, settings);
      double dev = 0.0;
      for (std::size_t i = 0; i < ts.size(); ++i) dev = std::max(dev, std::abs(c.H[i] - target[i]));
      row.max_dev = dev;
      if (report.best_index < 0 || dev < report.best_dev) {
        report.best_index = index;
        report.best_dev = dev;
      }
    } catch (const NumericError& e) {
      row.error = e.what();
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

CsvTable SweepReport::to_csv() const {
  CsvTable out;
  Column idx{"index", CellFormat::integer, {}};
  Column dev{"max_abs_dev", CellFormat::scientific, {}};
  for (const auto& row : rows) {
    idx.values.emplace_back(static_cast<double>(row.index));
    dev.values.push_back(row.max_dev);
    if (!row.error.empty()) out.notes.push_back("index " + std::to_string(row.index) + ": " + row.error);
  }
  out.columns = {std::move(idx), std::move(dev)};
  if (best_index >= 0) {
    out.notes.push_back("best index=" + std::to_string(best_index) +
                        " max_abs_dev=" + format_cell(best_dev, CellFormat::scientific));
  } else {
    out.failed = true;
    out.notes.push_back("no index in range produced a finite solution");
  }
  return out;
}

CsvTable cmd_trajectory(const TrajectorySpec& spec) {
  std::visit([](const auto& p) { p.validate(); }, spec.params);
  const auto ts = make_grid(spec.t_max, spec.t_step);
  const ModelKind kind = kind_of(spec.params);
  check_methods(spec.methods, kind);
  CsvTable out;
  out.columns.push_back(grid_column(ts));
  for (Method m : spec.methods) {
    const std::string name(display_name(m));
    Column H{"H_" + name, CellFormat::fixed9, empty_cells(ts.size())};
    Column h{"h_" + name, CellFormat::fixed9, empty_cells(ts.size())};
    try {
      const Curve c = solve_on_grid(m, spec.params, ts, spec.settings);
      H.values = as_cells(c.H);
      if (kind == ModelKind::coupled) h.values = as_cells(c.h);
    } catch (const NumericError& e) {
      out.notes.push_back(name + ": " + e.what());
      out.failed = true;
    }
    out.columns.push_back(std::move(H));
    if (kind == ModelKind::coupled) out.columns.push_back(std::move(h));
  }
  return out;
}

}  // namespace enso::report
