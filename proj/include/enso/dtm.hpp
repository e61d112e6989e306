#pragma once

#include <optional>
#include <vector>

#include "enso/models.hpp"
#include "enso/series.hpp"

namespace enso::dtm {

/// Any |W(k)| or |V(k)| beyond this aborts the transform: the series is being
/// asked to describe something far outside its convergence region.
inline constexpr double kOverflowBound = 1e15;

/// Transformed coefficients of H (and h for the coupled model).
struct DtmResult {
  std::vector<double> W;
  std::optional<std::vector<double>> V;
  int order = 0;
};

/// Coupled recurrence
///   W(k+1) = (c W(k) + eta V(k) - eps N(k)) / (k+1)
///   V(k+1) = (-theta W(k) - gamma V(k)) / (k+1)
/// where N(k) is the degree-k coefficient of H^3, built incrementally.
[[nodiscard]] DtmResult transform_coupled(const CoupledParams& p, int order);

/// Scalar recurrence W(k+1) = (a W(k) - b N(k)) / (k+1) with (a, b) from
/// reduced_delayed_coeffs.
[[nodiscard]] DtmResult transform_delayed(const DelayedParams& p, int order);

[[nodiscard]] SeriesPoly assemble_scalar(const DtmResult& r);
/// Throws UsageError when the result carries no V sequence.
[[nodiscard]] SolutionPair assemble_pair(const DtmResult& r);

}  // namespace enso::dtm
