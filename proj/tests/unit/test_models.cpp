#include <cmath>

#include "doctest.h"
#include "enso/errors.hpp"
#include "enso/models.hpp"

TEST_CASE("reduced_delayed_coeffs") {
  const auto r = enso::reduced_delayed_coeffs({0.5, 0.3, 0.25, 0.05});
  CHECK(r.a == doctest::Approx(0.2 / 0.925).epsilon(1e-15));
  CHECK(r.b == doctest::Approx(0.05 / 0.925).epsilon(1e-15));

  CHECK(enso::reduced_delayed_coeffs({0.7, 0.7, 0.4, 0.05}).a == 0.0);

  const auto r4 = enso::reduced_delayed_coeffs({1.0, 0.5, 0.5, 0.1});
  CHECK(r4.a == doctest::Approx(0.5 / 0.75).epsilon(1e-15));
  CHECK(r4.b == doctest::Approx(0.1 / 0.75).epsilon(1e-15));
}

TEST_CASE("reduced_delayed_coeffs is singular at beta*sigma == 1") {
  CHECK_THROWS_AS((void)enso::reduced_delayed_coeffs({1.0, 2.0, 0.5, 0.1}), enso::SingularModelError);
  CHECK_THROWS_AS((void)enso::reduced_delayed_coeffs({1.0, 0.5, NAN, 0.1}), enso::UsageError);
}

TEST_CASE("reduced_delayed_coeffs scales with (alpha - beta) and eps") {
  const enso::DelayedParams p{0.9, 0.4, 0.3, 0.08};
  const auto base = enso::reduced_delayed_coeffs(p);
  for (double lambda : {0.5, 2.0, 3.25}) {
    enso::DelayedParams q = p;
    q.alpha = q.beta + lambda * (p.alpha - p.beta);
    q.eps = lambda * p.eps;
    const auto r = enso::reduced_delayed_coeffs(q);
    CHECK(r.a == doctest::Approx(lambda * base.a).epsilon(1e-14));
    CHECK(r.b == doctest::Approx(lambda * base.b).epsilon(1e-14));
  }
}

TEST_CASE("parameter warnings are advisory") {
  enso::CoupledParams p{1, 1, 1, 1, 1.5};
  CHECK_NOTHROW(p.validate());
  CHECK(p.warnings().size() == 1);
  p.eps = 0.1;
  CHECK(p.warnings().empty());

  enso::DelayedParams d{-0.5, 0.3, 0.25, 0.05};
  CHECK_NOTHROW(d.validate());
  CHECK(d.warnings().size() == 1);
}

TEST_CASE("coupled params reject non-finite values") {
  enso::CoupledParams p{1, 1, 1, 1, 0.1};
  p.theta = INFINITY;
  CHECK_THROWS_AS(p.validate(), enso::UsageError);
}

TEST_CASE("SolutionPair requires matching caps") {
  CHECK_THROWS_AS(enso::SolutionPair(enso::SeriesPoly::zero(2), enso::SeriesPoly::zero(3)), enso::UsageError);
}

TEST_CASE("model kind parsing") {
  CHECK(enso::parse_model_kind("coupled") == enso::ModelKind::coupled);
  CHECK(enso::parse_model_kind("delayed") == enso::ModelKind::delayed);
  CHECK_THROWS_AS((void)enso::parse_model_kind("both"), enso::UsageError);
  CHECK(enso::eps_of(enso::with_eps(enso::DelayedParams{}, 0.3)) == 0.3);
}
