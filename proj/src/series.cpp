#include "enso/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "enso/errors.hpp"

namespace enso {
namespace {

void require_compatible(const SeriesPoly& a, const SeriesPoly& b, const char* op) {
  if (a.t0() != b.t0()) {
    throw UsageError(std::string(op) + ": expansion points differ");
  }
  if (a.cap() != b.cap()) {
    throw UsageError(std::string(op) + ": truncation caps differ (" + std::to_string(a.cap()) +
                     " vs " + std::to_string(b.cap()) + ")");
  }
}

// Arithmetic results: a non-finite coefficient here means overflow, not bad input.
SeriesPoly result(std::vector<double> c, double t0, const char* op) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (!std::isfinite(c[k])) {
      throw OverflowError(std::string(op) + ": coefficient " + std::to_string(k) + " overflowed",
                          static_cast<int>(k));
    }
  }
  return SeriesPoly(std::move(c), t0);
}

}  // namespace

SeriesPoly::SeriesPoly(std::vector<double> coeffs, double t0) : coeffs_(std::move(coeffs)), t0_(t0) {
  if (coeffs_.empty()) {
    throw UsageError("SeriesPoly: at least one coefficient is required");
  }
  if (!std::isfinite(t0_)) {
    throw UsageError("SeriesPoly: expansion point must be finite");
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k])) {
      throw UsageError("SeriesPoly: coefficient " + std::to_string(k) + " is not finite");
    }
  }
}

SeriesPoly SeriesPoly::zero(int cap, double t0) {
  if (cap < 0) {
    throw UsageError("SeriesPoly: cap must be non-negative");
  }
  return SeriesPoly(std::vector<double>(static_cast<std::size_t>(cap) + 1, 0.0), t0);
}

SeriesPoly SeriesPoly::constant(double value, int cap, double t0) {
  return monomial(value, 0, cap, t0);
}

int SeriesPoly::degree() const noexcept {
  for (int k = cap(); k >= 0; --k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0.0) return k;
  }
  return -1;
}

int SeriesPoly::valuation() const noexcept {
  for (int k = 0; k <= cap(); ++k) {
    if (coeffs_[static_cast<std::size_t>(k)] != 0.0) return k;
  }
  return -1;
}

SeriesPoly monomial(double a, int m, int cap, double t0) {
  if (cap < 0 || m < 0 || m > cap) {
    throw UsageError("monomial: degree " + std::to_string(m) + " outside [0, " +
                     std::to_string(cap) + "]");
  }
  std::vector<double> c(static_cast<std::size_t>(cap) + 1, 0.0);
  c[static_cast<std::size_t>(m)] = a;
  return SeriesPoly(std::move(c), t0);
}

SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b) {
  require_compatible(a, b, "add");
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b.coeffs()[k];
  return result(std::move(c), a.t0(), "add");
}

SeriesPoly subtract(const SeriesPoly& a, const SeriesPoly& b) {
  require_compatible(a, b, "subtract");
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] -= b.coeffs()[k];
  return result(std::move(c), a.t0(), "subtract");
}

SeriesPoly scale(const SeriesPoly& a, double factor) {
  if (!std::isfinite(factor)) {
    throw UsageError("scale: factor must be finite");
  }
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (double& x : c) x *= factor;
  return result(std::move(c), a.t0(), "scale");
}

SeriesPoly cauchy_mul(const SeriesPoly& a, const SeriesPoly& b) {
  require_compatible(a, b, "cauchy_mul");
  const auto x = a.coeffs();
  const auto y = b.coeffs();
  std::vector<double> c(x.size(), 0.0);
  for (std::size_t k = 0; k < c.size(); ++k) {
    double s = 0.0;
    for (std::size_t r = 0; r <= k; ++r) s += x[r] * y[k - r];
    c[k] = s;
  }
  return result(std::move(c), a.t0(), "cauchy_mul");
}

SeriesPoly cube(const SeriesPoly& a) { return cauchy_mul(cauchy_mul(a, a), a); }

SeriesPoly antiderivative(const SeriesPoly& a) {
  const auto x = a.coeffs();
  std::vector<double> c(x.size(), 0.0);
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = x[k - 1] / static_cast<double>(k);
  return result(std::move(c), a.t0(), "antiderivative");
}

SeriesPoly derivative(const SeriesPoly& a) {
  const auto x = a.coeffs();
  std::vector<double> c(x.size(), 0.0);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] = static_cast<double>(k + 1) * x[k + 1];
  return result(std::move(c), a.t0(), "derivative");
}

double eval(const SeriesPoly& a, double t) {
  const auto x = a.coeffs();
  const double dt = t - a.t0();
  double acc = 0.0;
  for (std::size_t k = x.size(); k-- > 0;) acc = acc * dt + x[k];
  return acc;
}

SeriesPoly truncate(const SeriesPoly& a, int degree) {
  std::vector<double> c(a.coeffs().begin(), a.coeffs().end());
  for (int k = std::max(degree + 1, 0); k <= a.cap(); ++k) c[static_cast<std::size_t>(k)] = 0.0;
  return SeriesPoly(std::move(c), a.t0());
}

double cube_coefficient(std::span<const double> w, std::size_t k) {
  // N(k) = sum_r S(r) w(k-r) with S = w*w, matching cube()'s association order.
  double n = 0.0;
  for (std::size_t r = 0; r <= k; ++r) {
    double sq = 0.0;
    for (std::size_t i = 0; i <= r; ++i) sq += w[i] * w[r - i];
    n += sq * w[k - r];
  }
  return n;
}

}  // namespace enso
