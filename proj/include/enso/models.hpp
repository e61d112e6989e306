#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "enso/series.hpp"

namespace enso {

enum class ModelKind { coupled, delayed };

[[nodiscard]] std::string_view to_string(ModelKind kind) noexcept;
/// Throws UsageError for anything other than "coupled" or "delayed".
[[nodiscard]] ModelKind parse_model_kind(std::string_view name);

/// Recharge oscillator
///   dH/dt = c H + eta h - eps H^3
///   dh/dt = -theta H - gamma h
struct CoupledParams {
  double c = 0.0;
  double eta = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double eps = 0.0;
  double H0 = 1.0;
  double h0 = 1.0;

  /// Throws UsageError on non-finite fields.
  void validate() const;
  /// Soft range checks (0 < eps < 1); empty when nothing looks off.
  [[nodiscard]] std::vector<std::string> warnings() const;
};

/// Delayed oscillator with the delay folded into a constant factor:
///   (1 - beta sigma) dH/dt = (alpha - beta) H - eps H^3
struct DelayedParams {
  double alpha = 0.0;
  double beta = 0.0;
  double sigma = 0.0;
  double eps = 0.0;
  double H0 = 1.0;

  /// Non-finite fields are a UsageError; beta*sigma == 1 is a SingularModelError.
  void validate() const;
  /// Positivity of alpha, beta, sigma, eps and the 0 < eps < 1 range.
  [[nodiscard]] std::vector<std::string> warnings() const;
};

using ModelParams = std::variant<CoupledParams, DelayedParams>;

[[nodiscard]] ModelKind kind_of(const ModelParams& params) noexcept;
[[nodiscard]] double eps_of(const ModelParams& params) noexcept;
[[nodiscard]] ModelParams with_eps(ModelParams params, double eps);

/// Normalized delayed model dH/dt = a H - b H^3.
struct ReducedCoeffs {
  double a;
  double b;
};

/// a = (alpha - beta)/(1 - beta sigma), b = eps/(1 - beta sigma).
[[nodiscard]] ReducedCoeffs reduced_delayed_coeffs(const DelayedParams& p);

struct SolutionPair {
  SolutionPair(SeriesPoly H_series, SeriesPoly h_series);

  SeriesPoly H;
  SeriesPoly h;
};

/// Right-hand sides evaluated pointwise, shared by the RK4 reference.
struct CoupledRhs {
  double dH;
  double dh;
};
[[nodiscard]] CoupledRhs coupled_rhs(const CoupledParams& p, double H, double h) noexcept;
[[nodiscard]] double delayed_rhs(const ReducedCoeffs& r, double H) noexcept;

}  // namespace enso
