// enso: reproduce the comparison tables, error curves and trajectories of the
// DTM / ADM / VIM solvers for the two ENSO oscillator models.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "enso/errors.hpp"
#include "enso/models.hpp"
#include "enso/report.hpp"
#include "enso/target_table.hpp"

namespace {

using enso::report::Method;

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Options {
  std::string model = "coupled";
  double c = 1.0, eta = 1.0, gamma = 1.0, theta = 1.0;
  double alpha = 0.5, beta = 0.3;
  std::vector<double> sigma{0.25};
  std::vector<double> eps;
  int order = 25;
  std::optional<int> terms;
  int iters = 15;
  int degree_cap = enso::vim::kDefaultDegreeCap;
  double rk4_step = 1e-4;
  std::optional<double> t_max;
  std::optional<double> t_step;
  std::string oracle;
  std::vector<std::string> methods;
  std::string out;

  // sweep
  std::string target;
  std::string method = "dtm";
  int from = 1;
  int to = 30;
  std::optional<double> t_limit;
};

enso::ModelParams build_params(const Options& o, double sigma) {
  if (enso::parse_model_kind(o.model) == enso::ModelKind::coupled) {
    return enso::CoupledParams{o.c, o.eta, o.gamma, o.theta, 0.0};
  }
  return enso::DelayedParams{o.alpha, o.beta, sigma, 0.0};
}

std::vector<double> eps_list(const Options& o, enso::ModelKind kind) {
  if (!o.eps.empty()) return o.eps;
  return kind == enso::ModelKind::coupled ? std::vector<double>{0.1, 0.2}
                                          : std::vector<double>{0.05, 0.1};
}

enso::report::SolverSettings settings_of(const Options& o) {
  enso::report::SolverSettings s;
  s.order = o.order;
  s.terms = o.terms;
  s.iters = o.iters;
  s.degree_cap = o.degree_cap;
  s.rk4_step = o.rk4_step;
  return s;
}

std::vector<Method> methods_of(const Options& o, std::vector<Method> fallback) {
  if (o.methods.empty()) return fallback;
  std::vector<Method> out;
  for (const auto& m : o.methods) out.push_back(enso::report::parse_method(m));
  return out;
}

void warn(const enso::ModelParams& p, const std::vector<double>& eps) {
  for (double e : eps) {
    const auto msgs = std::visit([](const auto& x) { return x.warnings(); }, enso::with_eps(p, e));
    for (const auto& m : msgs) std::cerr << "warning: " << m << '\n';
  }
}

enso::report::TableSpec table_spec(const Options& o, double default_t_max, double default_step,
                                   std::vector<Method> default_methods) {
  const enso::ModelKind kind = enso::parse_model_kind(o.model);
  enso::report::TableSpec spec{build_params(o, o.sigma.front()), {}, eps_list(o, kind), {}, {}, settings_of(o)};
  if (kind == enso::ModelKind::delayed && o.sigma.size() > 1) spec.sigmas = o.sigma;
  spec.ts = enso::report::make_grid(o.t_max.value_or(default_t_max), o.t_step.value_or(default_step));
  spec.methods = methods_of(o, std::move(default_methods));
  warn(spec.params, spec.eps);
  return spec;
}

int emit(const enso::report::CsvTable& table, const Options& o) {
  const std::string text = table.to_string();
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) throw enso::UsageError("cannot write " + o.out);
    f << text;
  }
  return table.failed ? kExitNumeric : 0;
}

int run_table(const Options& o) {
  const auto kind = enso::parse_model_kind(o.model);
  const bool coupled = kind == enso::ModelKind::coupled;
  return emit(enso::report::cmd_table(table_spec(o, coupled ? 1.0 : 2.0, coupled ? 0.2 : 0.4,
                                                 enso::report::default_methods(kind))),
              o);
}

int run_errors(const Options& o) {
  const auto kind = enso::parse_model_kind(o.model);
  std::string oracle = o.oracle;
  if (oracle.empty()) oracle = kind == enso::ModelKind::delayed ? "exact" : "rk4";
  if (oracle != "exact" && oracle != "rk4") throw enso::UsageError("--oracle must be exact or rk4");
  const auto spec = table_spec(o, 2.0, 0.1, {Method::dtm, Method::adm, Method::vim});
  return emit(enso::report::cmd_errors(spec, oracle == "exact" ? enso::report::OracleKind::exact
                                                               : enso::report::OracleKind::rk4),
              o);
}

int run_trajectory(const Options& o) {
  const auto kind = enso::parse_model_kind(o.model);
  const bool coupled = kind == enso::ModelKind::coupled;
  enso::report::TrajectorySpec spec;
  spec.params = enso::with_eps(build_params(o, o.sigma.front()), eps_list(o, kind).front());
  spec.t_max = o.t_max.value_or(coupled ? 1.0 : 2.0);
  spec.t_step = o.t_step.value_or(0.05);
  spec.methods = methods_of(o, coupled ? std::vector<Method>{Method::dtm, Method::adm, Method::vim, Method::rk4}
                                       : std::vector<Method>{Method::exact, Method::dtm, Method::adm,
                                                             Method::vim, Method::rk4});
  spec.settings = settings_of(o);
  warn(spec.params, {enso::eps_of(spec.params)});
  return emit(enso::report::cmd_trajectory(spec), o);
}

int run_sweep(const Options& o, const CLI::App& app) {
  if (o.target.empty()) throw enso::UsageError("sweep needs --target FILE");
  const auto table = enso::report::load_target_table(o.target);
  enso::ModelParams params = table.params;
  // Flags given explicitly override the parameters recorded in the file.
  auto given = [&](const char* name) { return app.count(name) > 0; };
  if (given("--model") && enso::parse_model_kind(o.model) != enso::kind_of(params)) {
    params = build_params(o, o.sigma.front());
  }
  if (auto* p = std::get_if<enso::CoupledParams>(&params)) {
    if (given("--c")) p->c = o.c;
    if (given("--eta")) p->eta = o.eta;
    if (given("--gamma")) p->gamma = o.gamma;
    if (given("--theta")) p->theta = o.theta;
  } else if (auto* d = std::get_if<enso::DelayedParams>(&params)) {
    if (given("--alpha")) d->alpha = o.alpha;
    if (given("--beta")) d->beta = o.beta;
    if (given("--sigma")) d->sigma = o.sigma.front();
  }
  if (o.eps.size() != 1) throw enso::UsageError("sweep needs exactly one --eps");
  const double eps = o.eps.front();
  const Method method = enso::report::parse_method(o.method);
  enso::report::SweepSpec spec;
  spec.params = enso::with_eps(params, eps);
  spec.method = method;
  spec.ts = table.ts;
  spec.target = table.column(enso::report::display_name(method), eps).values;
  spec.from = o.from;
  spec.to = o.to;
  spec.t_limit = o.t_limit;
  spec.degree_cap = o.degree_cap;
  return emit(enso::report::cmd_sweep(spec).to_csv(), o);
}

void add_model_options(CLI::App& app, Options& o) {
  app.add_option("--model", o.model, "Model: coupled or delayed")
      ->check(CLI::IsMember({"coupled", "delayed"}));
  app.add_option("--c", o.c, "Coupled: growth constant c");
  app.add_option("--eta", o.eta, "Coupled: coupling eta");
  app.add_option("--gamma", o.gamma, "Coupled: damping gamma");
  app.add_option("--theta", o.theta, "Coupled: coupling theta");
  app.add_option("--alpha", o.alpha, "Delayed: alpha");
  app.add_option("--beta", o.beta, "Delayed: beta");
  app.add_option("--sigma", o.sigma, "Delayed: delay constant sigma (repeat to sweep)");
  app.add_option("--eps", o.eps, "Cubic coefficient eps (repeatable)");
  app.add_option("--order", o.order, "DTM truncation order K")->check(CLI::NonNegativeNumber);
  app.add_option("--terms", o.terms, "ADM component count (default order+1)")->check(CLI::PositiveNumber);
  app.add_option("--iters", o.iters, "VIM iteration count")->check(CLI::NonNegativeNumber);
  app.add_option("--degree-cap", o.degree_cap, "VIM polynomial degree cap")->check(CLI::NonNegativeNumber);
  app.add_option("--rk4-step", o.rk4_step, "RK4 step size")->check(CLI::PositiveNumber);
  app.add_option("--t-max", o.t_max, "Largest t of the output grid");
  app.add_option("--t-step", o.t_step, "Spacing of the output grid");
  app.add_option("--methods", o.methods, "Methods: exact, dtm, adm, vim, rk4")->delimiter(',');
  app.add_option("--out", o.out, "Write CSV to FILE instead of standard output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Series solvers (DTM, ADM, VIM) for the ENSO oscillator models"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  add_model_options(app, o);

  auto* table = app.add_subcommand("table", "Solution values per method and eps on a t grid");
  auto* errors = app.add_subcommand("errors", "Absolute errors of DTM, ADM and VIM against an oracle");
  errors->add_option("--oracle", o.oracle, "exact (delayed model) or rk4")
      ->check(CLI::IsMember({"exact", "rk4"}));
  auto* sweep = app.add_subcommand("sweep", "Find the order or iteration count that best matches a table column");
  sweep->add_option("--target", o.target, "Target table file (see data/)")->required();
  sweep->add_option("--method", o.method, "dtm, adm or vim")->check(CLI::IsMember({"dtm", "adm", "vim"}));
  sweep->add_option("--from", o.from, "First order/iteration")->check(CLI::NonNegativeNumber);
  sweep->add_option("--to", o.to, "Last order/iteration")->check(CLI::NonNegativeNumber);
  sweep->add_option("--t-limit", o.t_limit, "Compare only entries with t <= LIMIT");
  auto* trajectory = app.add_subcommand("trajectory", "H (and h) along a fine grid for plotting");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*table) return run_table(o);
    if (*errors) return run_errors(o);
    if (*sweep) return run_sweep(o, app);
    if (*trajectory) return run_trajectory(o);
  } catch (const enso::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const enso::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}
