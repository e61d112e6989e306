#pragma once

#include <optional>
#include <span>
#include <vector>

#include "enso/models.hpp"
#include "enso/series.hpp"

namespace enso::adm {

struct AdmState {
  std::vector<SeriesPoly> u;                 // components of H
  std::optional<std::vector<SeriesPoly>> v;  // components of h (coupled only)

  [[nodiscard]] int n_terms() const noexcept { return static_cast<int>(u.size()); }
};

/// Adomian polynomial A_k of N(u) = u^3:
///   A_k = sum_{i+j+l=k} u_i u_j u_l.
/// For a polynomial nonlinearity this equals the derivative definition
/// (1/k!) d^k/dl^k N(sum_i l^i u_i) at l = 0.
[[nodiscard]] SeriesPoly adomian_cubic(std::span<const SeriesPoly> components, int k);

/// u_{k+1} = int_0^t (c u_k + eta v_k - eps A_k),
/// v_{k+1} = int_0^t (-theta u_k - gamma v_k), u_0 = H0, v_0 = h0.
/// Requires n >= 1 and cap >= n.
[[nodiscard]] AdmState solve_coupled(const CoupledParams& p, int n, int cap);

/// u_{k+1} = int_0^t (a u_k - b A_k) with (a, b) from reduced_delayed_coeffs.
[[nodiscard]] AdmState solve_delayed(const DelayedParams& p, int n, int cap);

/// Sum of the first `count` components (all of them when count < 0).
[[nodiscard]] SeriesPoly partial_sum(std::span<const SeriesPoly> components, int count = -1);

}  // namespace enso::adm
