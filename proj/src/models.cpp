#include "enso/models.hpp"

#include <cmath>
#include <sstream>

#include "enso/errors.hpp"

namespace enso {
namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw UsageError(std::string("parameter ") + name + " must be finite");
  }
}

void check_eps_range(double eps, std::vector<std::string>& out) {
  if (!(eps > 0.0 && eps < 1.0)) {
    std::ostringstream os;
    os << "eps = " << eps << " is outside the perturbation range (0, 1)";
    out.push_back(os.str());
  }
}

}  // namespace

std::string_view to_string(ModelKind kind) noexcept {
  return kind == ModelKind::coupled ? "coupled" : "delayed";
}

ModelKind parse_model_kind(std::string_view name) {
  if (name == "coupled") return ModelKind::coupled;
  if (name == "delayed") return ModelKind::delayed;
  throw UsageError("unknown model '" + std::string(name) + "' (expected coupled or delayed)");
}

void CoupledParams::validate() const {
  require_finite(c, "c");
  require_finite(eta, "eta");
  require_finite(gamma, "gamma");
  require_finite(theta, "theta");
  require_finite(eps, "eps");
  require_finite(H0, "H0");
  require_finite(h0, "h0");
}

std::vector<std::string> CoupledParams::warnings() const {
  std::vector<std::string> out;
  check_eps_range(eps, out);
  return out;
}

void DelayedParams::validate() const {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  require_finite(sigma, "sigma");
  require_finite(eps, "eps");
  require_finite(H0, "H0");
  if (beta * sigma == 1.0) {
    throw SingularModelError("delayed model is singular: beta*sigma == 1");
  }
}

std::vector<std::string> DelayedParams::warnings() const {
  std::vector<std::string> out;
  const std::pair<const char*, double> positive[] = {
      {"alpha", alpha}, {"beta", beta}, {"sigma", sigma}};
  for (const auto& [name, v] : positive) {
    if (!(v > 0.0)) out.push_back(std::string(name) + " should be positive");
  }
  check_eps_range(eps, out);
  return out;
}

ModelKind kind_of(const ModelParams& params) noexcept {
  return std::holds_alternative<CoupledParams>(params) ? ModelKind::coupled : ModelKind::delayed;
}

double eps_of(const ModelParams& params) noexcept {
  return std::visit([](const auto& p) { return p.eps; }, params);
}

ModelParams with_eps(ModelParams params, double eps) {
  std::visit([eps](auto& p) { p.eps = eps; }, params);
  return params;
}

ReducedCoeffs reduced_delayed_coeffs(const DelayedParams& p) {
  p.validate();
  const double factor = 1.0 - p.beta * p.sigma;
  return {(p.alpha - p.beta) / factor, p.eps / factor};
}

SolutionPair::SolutionPair(SeriesPoly H_series, SeriesPoly h_series)
    : H(std::move(H_series)), h(std::move(h_series)) {
  if (H.cap() != h.cap() || H.t0() != h.t0()) {
    throw UsageError("SolutionPair: H and h must share cap and expansion point");
  }
}

CoupledRhs coupled_rhs(const CoupledParams& p, double H, double h) noexcept {
  return {p.c * H + p.eta * h - p.eps * H * H * H, -p.theta * H - p.gamma * h};
}

double delayed_rhs(const ReducedCoeffs& r, double H) noexcept { return r.a * H - r.b * H * H * H; }

}  // namespace enso
