#include "enso/vim.hpp"

#include <cmath>
#include <string>

#include "enso/errors.hpp"

namespace enso::vim {
namespace {

// Only non-finite values abort. Above degree n the n-th iterate is not a
// Taylor coefficient, and that tail can exceed the DTM bound by many orders
// of magnitude while the low-degree part is still exact.
void check_iterate(const SeriesPoly& s, int iteration) {
  for (double x : s.coeffs()) {
    if (!std::isfinite(x)) {
      throw OverflowError("VIM iterate " + std::to_string(iteration) + " overflowed", iteration);
    }
  }
}

void require_coupled_state(const VimState& s) {
  if (!s.h) throw UsageError("VIM coupled step needs an h iterate");
  if (s.h->cap() != s.H.cap()) throw UsageError("VIM iterates must share a degree cap");
}

}  // namespace

VimState initial_state(const CoupledParams& p, int degree_cap) {
  p.validate();
  return {SeriesPoly::constant(p.H0, degree_cap), SeriesPoly::constant(p.h0, degree_cap), 0};
}

VimState initial_state(const DelayedParams& p, int degree_cap) {
  p.validate();
  return {SeriesPoly::constant(p.H0, degree_cap), std::nullopt, 0};
}

VimState step_coupled(const VimState& s, const CoupledParams& p) {
  require_coupled_state(s);
  const SeriesPoly& H = s.H;
  const SeriesPoly& h = *s.h;
  const SeriesPoly res_H = derivative(H) - p.c * H - p.eta * h + p.eps * cube(H);
  const SeriesPoly res_h = derivative(h) + p.theta * H + p.gamma * h;
  VimState next{H - antiderivative(res_H), h - antiderivative(res_h), s.iteration + 1};
  check_iterate(next.H, next.iteration);
  check_iterate(*next.h, next.iteration);
  return next;
}

VimState step_delayed(const VimState& s, const DelayedParams& p) {
  const auto [a, b] = reduced_delayed_coeffs(p);
  const SeriesPoly& H = s.H;
  const SeriesPoly res = derivative(H) - a * H + b * cube(H);
  VimState next{H - antiderivative(res), std::nullopt, s.iteration + 1};
  check_iterate(next.H, next.iteration);
  return next;
}

VimState solve(const ModelParams& params, int n, int degree_cap) {
  if (n < 0) throw UsageError("VIM iteration count must be non-negative");
  if (degree_cap < 0) throw UsageError("VIM degree cap must be non-negative");
  return std::visit(
      [&](const auto& p) {
        VimState s = initial_state(p, degree_cap);
        for (int i = 0; i < n; ++i) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, CoupledParams>) {
            s = step_coupled(s, p);
          } else {
            s = step_delayed(s, p);
          }
        }
        return s;
      },
      params);
}

}  // namespace enso::vim
