#include "enso/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "enso/errors.hpp"

namespace enso::oracle {
namespace {

struct State {
  double H;
  double h;
};

class Stepper {
 public:
  explicit Stepper(const ModelParams& params) : params_(params) {
    if (const auto* d = std::get_if<DelayedParams>(&params_)) reduced_ = reduced_delayed_coeffs(*d);
  }

  [[nodiscard]] State rhs(State s) const {
    if (const auto* c = std::get_if<CoupledParams>(&params_)) {
      const auto r = coupled_rhs(*c, s.H, s.h);
      return {r.dH, r.dh};
    }
    return {delayed_rhs(reduced_, s.H), 0.0};
  }

  [[nodiscard]] State step(State y, double dt) const {
    const State k1 = rhs(y);
    const State k2 = rhs({y.H + 0.5 * dt * k1.H, y.h + 0.5 * dt * k1.h});
    const State k3 = rhs({y.H + 0.5 * dt * k2.H, y.h + 0.5 * dt * k2.h});
    const State k4 = rhs({y.H + dt * k3.H, y.h + dt * k3.h});
    return {y.H + dt / 6.0 * (k1.H + 2.0 * k2.H + 2.0 * k3.H + k4.H),
            y.h + dt / 6.0 * (k1.h + 2.0 * k2.h + 2.0 * k3.h + k4.h)};
  }

  [[nodiscard]] State initial() const {
    if (const auto* c = std::get_if<CoupledParams>(&params_)) return {c->H0, c->h0};
    return {std::get<DelayedParams>(params_).H0, 0.0};
  }

  [[nodiscard]] bool coupled() const noexcept { return kind_of(params_) == ModelKind::coupled; }

 private:
  ModelParams params_;
  ReducedCoeffs reduced_{0.0, 0.0};
};

void validate(const ModelParams& params) {
  std::visit([](const auto& p) { p.validate(); }, params);
}

void record(Trajectory& out, const Stepper& stepper, double t, State y) {
  if (!std::isfinite(y.H) || !std::isfinite(y.h)) {
    std::ostringstream os;
    os << "RK4 state became non-finite at t = " << t;
    throw BlowUpError(os.str(), t);
  }
  out.ts.push_back(t);
  out.H.push_back(y.H);
  if (stepper.coupled()) out.h.push_back(y.h);
}

}  // namespace

double exact_delayed(const DelayedParams& p, double t) {
  const auto [a, b] = reduced_delayed_coeffs(p);
  if (p.H0 <= 0.0) throw DomainError("exact_delayed: closed form needs H0 > 0");
  const double w0 = 1.0 / (p.H0 * p.H0);
  double w = 0.0;
  if (a == 0.0) {
    w = w0 + 2.0 * b * t;
  } else {
    const double fixed = b / a;
    w = fixed + (w0 - fixed) * std::exp(-2.0 * a * t);
  }
  if (!(w > 0.0) || !std::isfinite(w)) {
    std::ostringstream os;
    os << "exact_delayed: t = " << t << " lies past the finite-time blow-up";
    throw DomainError(os.str());
  }
  return 1.0 / std::sqrt(w);
}

Trajectory rk4(const ModelParams& params, double t_end, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("rk4: step must be positive");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw UsageError("rk4: t_end must be >= 0");
  std::vector<double> grid;
  const auto n = static_cast<long>(std::floor(t_end / step + 1e-9));
  for (long i = 0; i <= n; ++i) grid.push_back(std::min(static_cast<double>(i) * step, t_end));
  if (grid.back() < t_end) grid.push_back(t_end);
  Trajectory out = rk4_at(params, grid, step);
  out.step = step;
  return out;
}

Trajectory rk4_at(const ModelParams& params, std::span<const double> times, double max_step) {
  if (!(max_step > 0.0) || !std::isfinite(max_step)) throw UsageError("rk4: step must be positive");
  validate(params);
  const Stepper stepper(params);
  Trajectory out;
  out.step = max_step;
  State y = stepper.initial();
  double t = 0.0;
  for (double target : times) {
    if (!(target >= t) || !std::isfinite(target)) {
      throw UsageError("rk4_at: output times must be finite, non-negative and non-decreasing");
    }
    const double gap = target - t;
    const auto steps = static_cast<long>(std::ceil(gap / max_step - 1e-9));
    const double dt = steps > 0 ? gap / static_cast<double>(steps) : 0.0;
    for (long i = 0; i < steps; ++i) {
      y = stepper.step(y, dt);
      if (!std::isfinite(y.H) || !std::isfinite(y.h)) {
        record(out, stepper, t + static_cast<double>(i + 1) * dt, y);
      }
    }
    t = target;
    record(out, stepper, t, y);
  }
  return out;
}

Residual residual_check(const SolutionPair& series, const CoupledParams& p,
                        std::optional<int> max_index) {
  const SeriesPoly& H = series.H;
  const SeriesPoly& h = series.h;
  const SeriesPoly rH = derivative(H) - (p.c * H + p.eta * h - p.eps * cube(H));
  const SeriesPoly rh = derivative(h) - (-p.theta * H - p.gamma * h);
  const int last = std::min(max_index.value_or(H.cap() - 1), H.cap());
  Residual out;
  for (int k = 0; k <= last; ++k) {
    out.H = std::max(out.H, std::abs(rH[static_cast<std::size_t>(k)]));
    out.h = std::max(out.h, std::abs(rh[static_cast<std::size_t>(k)]));
  }
  return out;
}

Residual residual_check(const SeriesPoly& series, const DelayedParams& p,
                        std::optional<int> max_index) {
  const auto [a, b] = reduced_delayed_coeffs(p);
  const SeriesPoly r = derivative(series) - (a * series - b * cube(series));
  const int last = std::min(max_index.value_or(series.cap() - 1), series.cap());
  Residual out;
  for (int k = 0; k <= last; ++k) out.H = std::max(out.H, std::abs(r[static_cast<std::size_t>(k)]));
  return out;
}

}  // namespace enso::oracle
