#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "ridgelab/minimax_lp.hpp"
#include "ridgelab/network.hpp"
#include "ridgelab/poly_approx.hpp"
#include "ridgelab/poly_network.hpp"
#include "ridgelab/polynomial.hpp"
#include "ridgelab/ridge.hpp"

using namespace ridgelab;

TEST_CASE("multi index spaces and degree budgets") {
  CHECK(dim_homogeneous(2, 3) == 4);
  CHECK(dim_poly_space(2, 2) == 6);
  CHECK(multi_indices_up_to(2, 2).size() == 6);
  CHECK(multi_indices_up_to(3, 4).size() == dim_poly_space(3, 4));

  CHECK(max_poly_degree(9, 2) == 2);
  CHECK(max_poly_degree(8, 2) == 1);
  CHECK(max_poly_degree(1000000, 3) == 99);  // integer-safe cube root
  CHECK(max_poly_degree(1, 1) == 0);
}

TEST_CASE("polynomial evaluation and derivatives") {
  Polynomial p(2, 2);
  p.coefficient({2, 0}) = 1.0;  // x^2
  p.coefficient({1, 1}) = 2.0;  // 2xy
  CHECK(p.eval({1.0, 2.0}) == doctest::Approx(5.0));

  Polynomial px = p.partial_derivative(0);  // 2x + 2y
  CHECK(px.eval({1.0, 2.0}) == doctest::Approx(6.0));

  Polynomial pxy = p.derivative({1, 1});  // constant 2
  CHECK(pxy.eval({0.3, 0.7}) == doctest::Approx(2.0));
  CHECK(p.derivative({3, 0}).eval({0.1, 0.1}) == doctest::Approx(0.0));
  CHECK(p.coefficient_norm() > 0.0);
}

TEST_CASE("ridge directions span the polynomial space") {
  auto d1 = ridge_directions(1, 3);
  REQUIRE(d1.directions.size() == 1);
  CHECK(d1.directions[0][0] == doctest::Approx(1.0));

  auto d2 = ridge_directions(2, 2);
  CHECK(d2.directions.size() == 3);  // k+1 equiangular directions
  for (const Point& w : d2.directions) CHECK(euclidean_norm(w) == doctest::Approx(1.0));

  auto d3 = ridge_directions(3, 2, 5);
  CHECK(d3.directions.size() == dim_homogeneous(3, 2));
  CHECK(d3.condition_number > 0.0);
}

TEST_CASE("polynomial to ridge round trip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    Polynomial q(2, k);
    {
      std::vector<double> c(q.coefficients().size());
      for (double& v : c) v = coef(rng);
      q = Polynomial(2, k, std::move(c));
    }
    auto dirs = ridge_directions(2, k);
    RidgeForm form = poly_to_ridge(q, dirs.directions);
    for (int i = 0; i < 25; ++i) {
      Point x{unit(rng), unit(rng)};
      CHECK(form.eval(x) == doctest::Approx(q.eval(x)).epsilon(1e-8));
    }
  }

  // a single direction cannot carry genuinely two-dimensional quadratics
  Polynomial xy(2, 2);
  xy.coefficient({1, 1}) = 1.0;
  CHECK_THROWS(poly_to_ridge(xy, {{1.0, 0.0}}));
}

TEST_CASE("discrete chebyshev fit recovers the classical line") {
  // best sup-norm line for x^2 on [0,1] is x - 1/8 with error 1/8
  std::vector<std::vector<double>> basis;
  std::vector<double> values;
  for (int i = 0; i <= 256; ++i) {
    double x = i / 256.0;
    basis.push_back({1.0, x});
    values.push_back(x * x);
  }
  MinimaxFit fit = chebyshev_fit(basis, values);
  CHECK(fit.converged);
  CHECK(fit.error == doctest::Approx(0.125).epsilon(1e-3));
  CHECK(fit.coefficients[0] == doctest::Approx(-0.125).epsilon(2e-2));
  CHECK(fit.coefficients[1] == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("polynomial best approximation") {
  Domain I = Domain::unit_cube(1);
  TargetFunction f("x^2", 1, [](const Point& x) { return x[0] * x[0]; });

  auto sup = poly_best_approx(f, 1, NormQuery{kSupNorm, TensorGridSampling{257}}, I);
  CHECK(sup.error == doctest::Approx(0.125).epsilon(1e-3));
  auto exact = poly_best_approx(f, 2, NormQuery{kSupNorm, TensorGridSampling{257}}, I);
  CHECK(exact.error <= 1e-8);

  TargetFunction g("x", 1, [](const Point& x) { return x[0]; });
  auto ls = poly_best_approx(g, 0, NormQuery{2.0, TensorGridSampling{257}}, I);
  CHECK(ls.poly.eval({0.0}) == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(ls.error == doctest::Approx(std::sqrt(1.0 / 12.0)).epsilon(1e-3));
}

TEST_CASE("anchors keep all needed activation derivatives alive") {
  Activation s = Activation::logistic();
  double c0 = find_anchor(s, 2);
  CHECK(std::abs(s.eval(2, c0)) >= 1e-6);  // sigma'' vanishes at 0, anchor must dodge it
  CHECK(std::abs(s.eval(0, c0)) >= 1e-6);
  CHECK(std::abs(find_anchor(Activation::arctan_sigmoid(), 3)) > 0.0);
}

TEST_CASE("networks that realize polynomials") {
  Domain I = Domain::box({{-1.0, 1.0}});
  Activation s = Activation::logistic();

  Polynomial line(1, 1);
  line.coefficient({1}) = 1.0;
  auto r1 = poly_by_network(line, s, 2, 1e-4, I);
  CHECK(r1.reached_target);
  CHECK(r1.achieved_error <= 1e-4);
  CHECK(r1.params.width() == 2);

  Polynomial square(1, 2);
  square.coefficient({2}) = 1.0;
  auto r2 = poly_by_network(square, s, 3, 1e-3, I);
  CHECK(r2.reached_target);
  CHECK(r2.params.width() == 3);

  // the same construction must also track derivatives of low order
  auto errs = simultaneous_error(square, r2.params, 1, I);
  REQUIRE(errs.size() == 2);
  CHECK(errs[0] <= 1e-3);
  CHECK(errs[1] <= 0.1);

  CHECK_THROWS_AS(poly_by_network(square, s, 2, 1e-3, I), std::invalid_argument);

  Polynomial q2(2, 2);
  q2.coefficient({1, 1}) = 1.0;
  q2.coefficient({0, 1}) = -0.5;
  auto r3 = poly_by_network(q2, Activation::arctan_sigmoid(), 9, 1e-2, Domain::unit_cube(2));
  CHECK(r3.achieved_error <= 1e-2);
}
