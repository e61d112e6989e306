#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace enso::testing {

inline bool close_rel(double a, double b, double rel, double floor = 1.0) {
  return std::abs(a - b) <= rel * std::max(floor, std::max(std::abs(a), std::abs(b)));
}

inline std::vector<double> random_coeffs(std::mt19937_64& rng, int n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = u(rng);
  return v;
}

// Full (untruncated) product by the schoolbook double loop.
inline std::vector<double> naive_product(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace enso::testing
