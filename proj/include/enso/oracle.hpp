#pragma once

#include <optional>
#include <span>
#include <vector>

#include "enso/models.hpp"
#include "enso/series.hpp"

namespace enso::oracle {

/// Closed-form solution of the delayed model. With (a, b) from
/// reduced_delayed_coeffs the substitution w = H^-2 linearizes the equation:
///   w' = -2a w + 2b,  H(t) = w(t)^(-1/2),
///   w(t) = b/a + (H0^-2 - b/a) e^{-2at}   (a != 0)
///   w(t) = H0^-2 + 2bt                     (a == 0)
/// Throws DomainError when w(t) <= 0 (past a finite-time blow-up).
[[nodiscard]] double exact_delayed(const DelayedParams& p, double t);

struct Trajectory {
  std::vector<double> ts;
  std::vector<double> H;
  std::vector<double> h;  // empty for the delayed model
  double step = 0.0;
};

/// Classical RK4 from t = 0 on a uniform grid of spacing `step` up to t_end
/// (the final step is shortened when t_end is not a multiple of step).
[[nodiscard]] Trajectory rk4(const ModelParams& params, double t_end, double step);

/// RK4 reporting the state at each of `times` (non-decreasing, >= 0). Each gap
/// is covered by ceil(gap/max_step) equal steps so the requested times are hit
/// exactly.
[[nodiscard]] Trajectory rk4_at(const ModelParams& params, std::span<const double> times,
                                double max_step);

struct Residual {
  double H = 0.0;
  double h = 0.0;  // zero for the delayed model

  [[nodiscard]] double max() const noexcept { return H > h ? H : h; }
};

/// Substitutes a candidate series into the model and returns the largest
/// |coefficient| of series' - rhs(series) over indices 0..max_index
/// (default cap-1, the highest index the truncated product still resolves).
[[nodiscard]] Residual residual_check(const SolutionPair& series, const CoupledParams& p,
                                      std::optional<int> max_index = std::nullopt);
[[nodiscard]] Residual residual_check(const SeriesPoly& series, const DelayedParams& p,
                                      std::optional<int> max_index = std::nullopt);

}  // namespace enso::oracle
