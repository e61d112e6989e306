#pragma once

#include <optional>

#include "enso/models.hpp"
#include "enso/series.hpp"

namespace enso::vim {

inline constexpr int kDefaultDegreeCap = 64;

/// Current iterate(s) of the correction functional with multiplier -1.
/// The degree cap is the cap of the stored series.
struct VimState {
  SeriesPoly H;
  std::optional<SeriesPoly> h;
  int iteration = 0;

  [[nodiscard]] int degree_cap() const noexcept { return H.cap(); }
};

/// Constant initial iterate(s) from the model's initial conditions.
[[nodiscard]] VimState initial_state(const CoupledParams& p, int degree_cap = kDefaultDegreeCap);
[[nodiscard]] VimState initial_state(const DelayedParams& p, int degree_cap = kDefaultDegreeCap);

/// H_{n+1} = H_n - int_0^t [H_n' - c H_n - eta h_n + eps H_n^3]
/// h_{n+1} = h_n - int_0^t [h_n' + theta H_n + gamma h_n]
[[nodiscard]] VimState step_coupled(const VimState& s, const CoupledParams& p);

/// H_{n+1} = H_n - int_0^t [H_n' - a H_n + b H_n^3]
[[nodiscard]] VimState step_delayed(const VimState& s, const DelayedParams& p);

/// n correction steps from the constant initial iterate.
[[nodiscard]] VimState solve(const ModelParams& params, int n, int degree_cap = kDefaultDegreeCap);

}  // namespace enso::vim
