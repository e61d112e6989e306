#include "enso/adm.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "enso/dtm.hpp"
#include "enso/errors.hpp"

namespace enso::adm {
namespace {

void require_sizes(int n, int cap) {
  if (n < 1) throw UsageError("ADM needs at least one term, got " + std::to_string(n));
  if (cap < n) {
    throw UsageError("ADM degree cap " + std::to_string(cap) + " cannot hold " +
                     std::to_string(n) + " terms");
  }
}

void check_component(const SeriesPoly& s, int index) {
  for (double x : s.coeffs()) {
    if (std::abs(x) > dtm::kOverflowBound) {
      throw OverflowError("ADM component " + std::to_string(index) + " overflowed", index);
    }
  }
  // With a constant u_0 every component is a single monomial of degree index.
  assert(s.degree() <= index);
}

// Running sums of pairwise products B_m = sum_{j} u_j u_{m-j}; A_k = sum_i u_i B_{k-i}.
class AdomianCube {
 public:
  explicit AdomianCube(int cap) : cap_(cap) {}

  SeriesPoly next(std::span<const SeriesPoly> u) {
    const std::size_t k = u.size() - 1;
    SeriesPoly b = SeriesPoly::zero(cap_, u[0].t0());
    for (std::size_t j = 0; j <= k; ++j) b = b + u[j] * u[k - j];
    squares_.push_back(std::move(b));
    SeriesPoly a = SeriesPoly::zero(cap_, u[0].t0());
    for (std::size_t r = 0; r <= k; ++r) a = a + squares_[r] * u[k - r];
    return a;
  }

 private:
  int cap_;
  std::vector<SeriesPoly> squares_;
};

}  // namespace

SeriesPoly adomian_cubic(std::span<const SeriesPoly> components, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= components.size()) {
    throw UsageError("adomian_cubic: A_" + std::to_string(k) + " needs components 0.." +
                     std::to_string(k) + ", have " + std::to_string(components.size()));
  }
  AdomianCube acc(components[0].cap());
  SeriesPoly out = SeriesPoly::zero(components[0].cap(), components[0].t0());
  for (int i = 0; i <= k; ++i) out = acc.next(components.first(static_cast<std::size_t>(i) + 1));
  return out;
}

AdmState solve_coupled(const CoupledParams& p, int n, int cap) {
  require_sizes(n, cap);
  p.validate();
  std::vector<SeriesPoly> u{SeriesPoly::constant(p.H0, cap)};
  std::vector<SeriesPoly> v{SeriesPoly::constant(p.h0, cap)};
  AdomianCube cube(cap);
  for (int k = 0; k + 1 < n; ++k) {
    const SeriesPoly A = cube.next(u);
    const auto& uk = u.back();
    const auto& vk = v.back();
    SeriesPoly u_next = antiderivative(p.c * uk + p.eta * vk - p.eps * A);
    SeriesPoly v_next = antiderivative(-p.theta * uk - p.gamma * vk);
    check_component(u_next, k + 1);
    check_component(v_next, k + 1);
    u.push_back(std::move(u_next));
    v.push_back(std::move(v_next));
  }
  return {std::move(u), std::move(v)};
}

AdmState solve_delayed(const DelayedParams& p, int n, int cap) {
  require_sizes(n, cap);
  const auto [a, b] = reduced_delayed_coeffs(p);
  std::vector<SeriesPoly> u{SeriesPoly::constant(p.H0, cap)};
  AdomianCube cube(cap);
  for (int k = 0; k + 1 < n; ++k) {
    const SeriesPoly A = cube.next(u);
    SeriesPoly u_next = antiderivative(a * u.back() - b * A);
    check_component(u_next, k + 1);
    u.push_back(std::move(u_next));
  }
  return {std::move(u), std::nullopt};
}

SeriesPoly partial_sum(std::span<const SeriesPoly> components, int count) {
  if (components.empty()) throw UsageError("partial_sum: no components");
  const std::size_t m =
      count < 0 ? components.size() : std::min(components.size(), static_cast<std::size_t>(count));
  SeriesPoly s = SeriesPoly::zero(components[0].cap(), components[0].t0());
  for (std::size_t i = 0; i < m; ++i) s = s + components[i];
  return s;
}

}  // namespace enso::adm
