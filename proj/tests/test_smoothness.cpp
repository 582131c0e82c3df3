#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ridgelab/modulus_forms.hpp"
#include "ridgelab/smoothness.hpp"

using namespace ridgelab;

namespace {

TargetFunction linear1d() {
  return TargetFunction("x", 1, [](const Point& x) { return x[0]; });
}

TargetFunction kink1d() {
  return TargetFunction("abs-kink", 1, [](const Point& x) { return std::abs(x[0] - 0.5); });
}

TargetFunction square1d() {
  TargetFunction f("x^2", 1, [](const Point& x) { return x[0] * x[0]; });
  f.with_derivatives([](const std::vector<int>& a, const Point& x) {
    if (a[0] == 0) return x[0] * x[0];
    if (a[0] == 1) return 2.0 * x[0];
    if (a[0] == 2) return 2.0;
    return 0.0;
  });
  return f;
}

}  // namespace

TEST_CASE("radial differences match closed forms") {
  Domain I = Domain::unit_cube(1);
  TargetFunction f = square1d();
  // second difference of x^2 is exactly 2 v^2
  CHECK(radial_difference(f, 2, {0.1}, {0.2}, I) == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(radial_difference(linear1d(), 2, {0.1}, {0.2}, I) == doctest::Approx(0.0));
  CHECK_THROWS_AS(radial_difference(f, 2, {0.3}, {0.5}, I), std::domain_error);
  CHECK_THROWS_AS(radial_difference(f, 0, {0.1}, {0.2}, I), std::invalid_argument);
}

TEST_CASE("modulus of linear and kink functions") {
  Domain I = Domain::unit_cube(1);
  ModulusQuery q{1, 0.25, NormQuery{kSupNorm, TensorGridSampling{129}}, AxisDirections{}};
  CHECK(modulus(linear1d(), q, I).value == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(modulus(kink1d(), q, I).value == doctest::Approx(0.25).epsilon(1e-12));

  // second-order modulus of a linear function vanishes
  q.order = 2;
  CHECK(modulus(linear1d(), q, I).value == doctest::Approx(0.0));
  // ... while the kink resonates at the corner: omega_2 = 2 delta
  CHECK(modulus(kink1d(), q, I).value == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("modulus invariants: monotone in delta, homogeneous, order chain") {
  Domain I = Domain::unit_cube(1);
  TargetFunction f = kink1d();
  NormQuery nq{kSupNorm, TensorGridSampling{129}};
  double prev = 0.0;
  for (double delta : {0.05, 0.1, 0.2, 0.4}) {
    double w = modulus(f, ModulusQuery{1, delta, nq, AxisDirections{}}, I).value;
    CHECK(w >= prev - 1e-12);
    prev = w;
  }
  double w1 = modulus(f, ModulusQuery{1, 0.2, nq, AxisDirections{}}, I).value;
  double w2 = modulus(f, ModulusQuery{2, 0.2, nq, AxisDirections{}}, I).value;
  CHECK(w2 <= 2.0 * w1 + 1e-12);

  double w1s = modulus(f.scaled_by(3.0), ModulusQuery{1, 0.2, nq, AxisDirections{}}, I).value;
  CHECK(w1s == doctest::Approx(3.0 * w1).epsilon(1e-12));
}

TEST_CASE("explicit directions must respect the radius") {
  Domain I = Domain::unit_cube(2);
  TargetFunction f("sum", 2, [](const Point& x) { return x[0] + x[1]; });
  ModulusQuery q{1, 0.1, NormQuery{kSupNorm, TensorGridSampling{33}},
                 ExplicitDirections{{{0.06, 0.06}}}};
  CHECK(modulus(f, q, I).value == doctest::Approx(0.12).epsilon(1e-12));
  q.directions = ExplicitDirections{{{0.2, 0.0}}};
  CHECK_THROWS_AS(modulus(f, q, I), std::invalid_argument);
}

TEST_CASE("sobolev seminorm and the derivative bound") {
  Domain I = Domain::unit_cube(1);
  TargetFunction f = square1d();
  NormQuery nq{kSupNorm, TensorGridSampling{129}};
  CHECK(sobolev_seminorm(f, 1, nq, I) == doctest::Approx(2.0));
  CHECK(sobolev_seminorm(f, 2, nq, I) == doctest::Approx(2.0));

  auto report = check_derivative_bound(f, 2, {0.05, 0.1, 0.2}, nq, I);
  CHECK(report.seminorm == doctest::Approx(2.0));
  // omega_2(x^2, delta) = 2 delta^2, so every ratio is 1
  for (const auto& row : report.rows) CHECK(row.ratio == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_FALSE(report.diverging);

  // the kink has no second derivative: ratios blow up as delta -> 0
  auto kink = check_derivative_bound(kink1d(), 2, {0.025, 0.05, 0.1, 0.2}, nq, I);
  CHECK(kink.diverging);
}

TEST_CASE("k-functional estimate") {
  Domain I = Domain::unit_cube(1);
  NormQuery nq{kSupNorm, TensorGridSampling{65}};
  TargetFunction f = square1d();
  auto k = k_functional_estimate(f, 0.01, 2, nq, I);
  CHECK(k.value <= 0.01 * 2.0 + 1e-12);  // the g = f candidate
  CHECK(k.value > 0.0);
  auto k0 = k_functional_estimate(kink1d(), 1e3, 2, nq, I);
  CHECK(k0.value == doctest::Approx(0.5));  // g = 0 wins for huge delta
}

TEST_CASE("multi index enumeration") {
  CHECK(multi_indices_of_order(1, 3) == std::vector<std::vector<int>>{{3}});
  auto m = multi_indices_of_order(2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == std::vector<int>{2, 0});
  CHECK(m[2] == std::vector<int>{0, 2});
  CHECK(multi_indices_of_order(3, 4).size() == 15);  // C(4+2, 2)
}

TEST_CASE("abstract modulus gauges") {
  AbstractModulus w = AbstractModulus::power(0.5);
  CHECK(w(0.25) == doctest::Approx(0.5));
  CHECK(w.subadditive_on({0.05, 0.1, 0.2, 0.4}));
  CHECK(w.divergence_condition());
  CHECK_FALSE(AbstractModulus::power(1.0).divergence_condition());

  AbstractModulus t =
      AbstractModulus::tabulated({{0.0, 0.0}, {0.1, 0.1}, {0.2, 0.15}, {0.4, 0.2}});
  CHECK(t(0.15) == doctest::Approx(0.125));
  CHECK(t(0.05) == doctest::Approx(0.05));
  CHECK(t(9.0) == doctest::Approx(0.2));  // clamped past the last sample
  CHECK_FALSE(t.is_power());
  CHECK_THROWS_AS(AbstractModulus::tabulated({{0.1, 0.1}}), std::invalid_argument);
}

TEST_CASE("rate gauge scaling conditions") {
  RateFunction phi = RateFunction::power(1, 2);  // x^{-1/2}
  CHECK(phi(4.0) == doctest::Approx(0.5));
  auto report = check_phi_conditions(phi, {0.25}, 2, 64);
  CHECK(report.decreasing);
  // the halving constant peaks at n = 3: phi(1)/phi(3) = sqrt(3)
  CHECK(report.d2 == doctest::Approx(std::sqrt(3.0)).epsilon(1e-9));
  REQUIRE(report.lambda_rows.size() == 1);
  // phi(x/4)/phi(x) = 2 for the pure power gauge
  CHECK(report.lambda_rows[0].c_lambda == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(report.lambda_rows[0].proof_bound_ok);
  CHECK_THROWS_AS(check_phi_conditions(phi, {4.0}, 2, 64), std::invalid_argument);

  RateFunction lp = RateFunction::log_power(1, 1);
  CHECK(lp(2.0) == doctest::Approx(1.0 / 4.0));  // 1/(2 (1 + log2 2))
  auto lr = check_phi_conditions(lp, {0.5, 0.25}, 8, 4096);
  CHECK(lr.decreasing);
  for (const auto& row : lr.lambda_rows) CHECK(row.proof_bound_ok);
}
