#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "enso/errors.hpp"
#include "enso/series.hpp"
#include "test_support.hpp"

using enso::SeriesPoly;
using V = std::vector<double>;

namespace {

V coeffs(const SeriesPoly& s) { return {s.coeffs().begin(), s.coeffs().end()}; }

}  // namespace

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(SeriesPoly(V{}), enso::UsageError);
  CHECK_THROWS_AS(SeriesPoly(V{1.0, NAN}), enso::UsageError);
  CHECK_THROWS_AS(SeriesPoly(V{1.0, INFINITY}), enso::UsageError);
  CHECK_THROWS_AS((void)SeriesPoly::zero(-1), enso::UsageError);
  const SeriesPoly z = SeriesPoly::zero(3);
  CHECK(z.cap() == 3);
  CHECK(z.coeffs().size() == 4);
  CHECK(z.degree() == -1);
}

TEST_CASE("add") {
  CHECK(coeffs(SeriesPoly(V{1, 1}) + SeriesPoly(V{0, 0})) == V{1, 1});
  CHECK(coeffs(SeriesPoly(V{1, 2}) + SeriesPoly(V{3, 4})) == V{4, 6});
  CHECK(coeffs(SeriesPoly(V{1, -1, 0.5}) + SeriesPoly(V{-1, 1, -0.5})) == V{0, 0, 0});
  CHECK_THROWS_AS(SeriesPoly(V{1, 2}) + SeriesPoly(V{1, 2, 3}), enso::UsageError);
  CHECK_THROWS_AS(SeriesPoly(V{1, 2}, 0.0) + SeriesPoly(V{1, 2}, 1.0), enso::UsageError);
}

TEST_CASE("scale") {
  CHECK(coeffs(enso::scale(SeriesPoly(V{1, 2}), 1)) == V{1, 2});
  CHECK(coeffs(enso::scale(SeriesPoly(V{1, 2}), 0)) == V{0, 0});
  CHECK(coeffs(enso::scale(SeriesPoly(V{1, 2, 3}), -2)) == V{-2, -4, -6});
  CHECK_THROWS_AS((void)enso::scale(SeriesPoly(V{1}), NAN), enso::UsageError);
  CHECK_THROWS_AS((void)enso::scale(SeriesPoly(V{1}), INFINITY), enso::UsageError);
}

TEST_CASE("cauchy_mul") {
  CHECK(coeffs(SeriesPoly(V{1, 1, 0}) * SeriesPoly(V{1, 1, 0})) == V{1, 2, 1});

  const V a{1, 2, 3, 0, 0};
  const V b{4, 5, 6, 0, 0};
  V expected = enso::testing::naive_product(a, b);
  expected.resize(a.size());
  CHECK(expected == V{4, 13, 28, 27, 18});
  CHECK(coeffs(SeriesPoly(a) * SeriesPoly(b)) == expected);

  const SeriesPoly x(V{0.3, -1.5, 2.25, 7.0});
  const SeriesPoly one = enso::monomial(1, 0, 3);
  CHECK(x * one == x);
  CHECK(one * x == x);

  CHECK_THROWS_AS(SeriesPoly(V{1, 2}) * SeriesPoly(V{1, 2, 3}), enso::UsageError);
  CHECK_THROWS_AS(SeriesPoly(V{1, 2}, 0.5) * SeriesPoly(V{1, 2}), enso::UsageError);
}

TEST_CASE("cauchy_mul is commutative, associative and matches the schoolbook product") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 12;
    const V a = enso::testing::random_coeffs(rng, n);
    const V b = enso::testing::random_coeffs(rng, n);
    const V c = enso::testing::random_coeffs(rng, n);
    const SeriesPoly A(a), B(b), C(c);
    const SeriesPoly ab = A * B;
    const SeriesPoly ba = B * A;
    const SeriesPoly left = (A * B) * C;
    const SeriesPoly right = A * (B * C);
    V full = enso::testing::naive_product(a, b);
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(enso::testing::close_rel(ab[k], ba[k], 1e-13));
      CHECK(enso::testing::close_rel(left[k], right[k], 1e-13));
      CHECK(enso::testing::close_rel((A * B)[k], full[k], 1e-13));
    }
  }

  // Small integers are exact in double, so association is bit-exact there.
  const SeriesPoly A(V{1, -2, 3, 4}), B(V{2, 0, -1, 5}), C(V{-3, 1, 1, 2});
  CHECK(A * B == B * A);
  CHECK((A * B) * C == A * (B * C));
}

TEST_CASE("cube") {
  CHECK(coeffs(enso::cube(SeriesPoly(V{1, 0, 0, 0}))) == V{1, 0, 0, 0});

  // (1 + t)^3 via binomial coefficients.
  V binom(4);
  for (int k = 0; k <= 3; ++k) binom[static_cast<std::size_t>(k)] = std::tgamma(4) / (std::tgamma(k + 1) * std::tgamma(4 - k));
  CHECK(coeffs(enso::cube(SeriesPoly(V{1, 1, 0, 0}))) == binom);
}

TEST_CASE("cube matches the expanded N(0)..N(5) of the cubic transform") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const V w = enso::testing::random_coeffs(rng, 6, -2.0, 2.0);
    const SeriesPoly c = enso::cube(SeriesPoly(w));
    const double W0 = w[0], W1 = w[1], W2 = w[2], W3 = w[3], W4 = w[4], W5 = w[5];
    const double expanded[6] = {
        W0 * W0 * W0,
        3 * W0 * W0 * W1,
        3 * W0 * W1 * W1 + 3 * W0 * W0 * W2,
        3 * W0 * W0 * W3 + 6 * W0 * W1 * W2 + W1 * W1 * W1,
        3 * W0 * W2 * W2 + 3 * W1 * W1 * W2 + 3 * W0 * W0 * W4 + 6 * W0 * W1 * W3,
        3 * W1 * W2 * W2 + 3 * W1 * W1 * W3 + 3 * W0 * W0 * W5 + 6 * W0 * W1 * W4 + 6 * W0 * W2 * W3,
    };
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(enso::testing::close_rel(c[k], expanded[k], 1e-12));
      CHECK(enso::testing::close_rel(enso::cube_coefficient(w, k), expanded[k], 1e-12));
    }
  }
}

TEST_CASE("antiderivative and derivative") {
  CHECK(coeffs(enso::antiderivative(SeriesPoly(V{1, 0}))) == V{0, 1});
  CHECK(coeffs(enso::antiderivative(SeriesPoly(V{0, 2, 0}))) == V{0, 0, 1});
  CHECK(coeffs(enso::antiderivative(SeriesPoly(V{3, 4, 5}))) == V{0, 3, 2});

  CHECK(coeffs(enso::derivative(SeriesPoly(V{7, 0, 0}))) == V{0, 0, 0});
  CHECK(coeffs(enso::derivative(SeriesPoly(V{0, 0, 1}))) == V{0, 2, 0});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const V a = enso::testing::random_coeffs(rng, 2 + trial % 10);
    const SeriesPoly round = enso::derivative(enso::antiderivative(SeriesPoly(a)));
    for (std::size_t k = 0; k + 1 < a.size(); ++k) CHECK(round[k] == doctest::Approx(a[k]).epsilon(1e-15));
    CHECK(round[a.size() - 1] == 0.0);
  }
}

TEST_CASE("monomial") {
  CHECK(coeffs(enso::monomial(5, 0, 3)) == V{5, 0, 0, 0});
  CHECK(coeffs(enso::monomial(1, 2, 3)) == V{0, 0, 1, 0});
  CHECK(coeffs(enso::monomial(0, 1, 1)) == V{0, 0});
  CHECK_THROWS_AS((void)enso::monomial(1, 4, 3), enso::UsageError);
  CHECK_THROWS_AS((void)enso::monomial(1, -1, 3), enso::UsageError);
}

TEST_CASE("eval") {
  CHECK(enso::eval(SeriesPoly(V{1, 1, 0.5}, 0.7), 0.7) == 1.0);
  CHECK(enso::eval(SeriesPoly(V{1, 2}), 0.5) == 2.0);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> tdist(-1.5, 1.5);
  for (int trial = 0; trial < 200; ++trial) {
    const V a = enso::testing::random_coeffs(rng, 1 + trial % 20);
    const double t0 = tdist(rng) * 0.1;
    const double t = tdist(rng);
    double naive = 0.0;
    double magnitude = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      const double term = a[k] * std::pow(t - t0, static_cast<double>(k));
      naive += term;
      magnitude += std::abs(term);
    }
    // Relative to the term magnitudes: both summations see the same cancellation.
    CHECK(std::abs(enso::eval(SeriesPoly(a, t0), t) - naive) <= 1e-13 * std::max(1.0, magnitude));
  }
}

TEST_CASE("eval is linear") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const SeriesPoly a(enso::testing::random_coeffs(rng, 8));
    const SeriesPoly b(enso::testing::random_coeffs(rng, 8));
    const double t = 0.9;
    CHECK(enso::testing::close_rel(enso::eval(a + b, t), enso::eval(a, t) + enso::eval(b, t), 1e-12));
  }
}

TEST_CASE("truncate, degree and valuation") {
  const SeriesPoly s(V{0, 0, 3, 4, 0});
  CHECK(s.valuation() == 2);
  CHECK(s.degree() == 3);
  CHECK(coeffs(enso::truncate(s, 2)) == V{0, 0, 3, 0, 0});
  CHECK(enso::truncate(s, -1).degree() == -1);
}
