#include "enso/dtm.hpp"

#include <cmath>
#include <string>

#include "enso/errors.hpp"

namespace enso::dtm {
namespace {

void require_order(int order) {
  if (order < 0) {
    throw UsageError("truncation order must be non-negative, got " + std::to_string(order));
  }
}

void check_coefficient(double v, int index, const char* name) {
  if (!std::isfinite(v) || std::abs(v) > kOverflowBound) {
    throw OverflowError(std::string("DTM coefficient ") + name + "(" + std::to_string(index) +
                            ") overflowed; t is likely outside the convergence region",
                        index);
  }
}

// Running cube of a coefficient sequence. After push(w_k), square_ holds
// (w*w)(0..k) and next_cube(k) returns (w*w*w)(k) in O(k).
class CubeAccumulator {
 public:
  void push(const std::vector<double>& w) {
    const std::size_t k = w.size() - 1;
    double s = 0.0;
    for (std::size_t i = 0; i <= k; ++i) s += w[i] * w[k - i];
    square_.push_back(s);
  }

  [[nodiscard]] double cube_at(const std::vector<double>& w, std::size_t k) const {
    double n = 0.0;
    for (std::size_t r = 0; r <= k; ++r) n += square_[r] * w[k - r];
    return n;
  }

 private:
  std::vector<double> square_;
};

}  // namespace

DtmResult transform_coupled(const CoupledParams& p, int order) {
  require_order(order);
  p.validate();
  const auto n = static_cast<std::size_t>(order) + 1;
  std::vector<double> W;
  std::vector<double> V;
  W.reserve(n);
  V.reserve(n);
  W.push_back(p.H0);
  V.push_back(p.h0);
  CubeAccumulator cube;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    cube.push(W);
    const double Nk = cube.cube_at(W, k);
    const double denom = static_cast<double>(k + 1);
    const double w_next = (p.c * W[k] + p.eta * V[k] - p.eps * Nk) / denom;
    const double v_next = (-p.theta * W[k] - p.gamma * V[k]) / denom;
    check_coefficient(w_next, static_cast<int>(k + 1), "W");
    check_coefficient(v_next, static_cast<int>(k + 1), "V");
    W.push_back(w_next);
    V.push_back(v_next);
  }
  return {std::move(W), std::move(V), order};
}

DtmResult transform_delayed(const DelayedParams& p, int order) {
  require_order(order);
  const auto [a, b] = reduced_delayed_coeffs(p);
  const auto n = static_cast<std::size_t>(order) + 1;
  std::vector<double> W;
  W.reserve(n);
  W.push_back(p.H0);
  CubeAccumulator cube;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    cube.push(W);
    const double Nk = cube.cube_at(W, k);
    const double w_next = (a * W[k] - b * Nk) / static_cast<double>(k + 1);
    check_coefficient(w_next, static_cast<int>(k + 1), "W");
    W.push_back(w_next);
  }
  return {std::move(W), std::nullopt, order};
}

SeriesPoly assemble_scalar(const DtmResult& r) { return SeriesPoly(r.W, 0.0); }

SolutionPair assemble_pair(const DtmResult& r) {
  if (!r.V) {
    throw UsageError("assemble_pair: result has no h coefficients (scalar model)");
  }
  return SolutionPair(SeriesPoly(r.W, 0.0), SeriesPoly(*r.V, 0.0));
}

}  // namespace enso::dtm
