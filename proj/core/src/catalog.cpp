#include "ridgelab/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace ridgelab {
namespace {

constexpr double kPi = 3.14159265358979323846;

double int_pow(double x, int m) {
  double r = 1.0;
  for (int i = 0; i < m; ++i) r *= x;
  return r;
}

// d/dx^m sin(a x + b) = a^m sin(a x + b + m pi/2)
double sin_deriv(double a, double b, int m, double x) {
  return int_pow(a, m) * std::sin(a * x + b + m * kPi / 2.0);
}

TargetFunction make_sin(const std::string& label, double freq) {
  TargetFunction f(label, 1, [freq](const Point& x) { return std::sin(freq * x[0]); });
  f.with_derivatives([freq](const std::vector<int>& alpha, const Point& x) {
    return sin_deriv(freq, 0.0, alpha[0], x[0]);
  });
  f.with_smoothness({std::nullopt, 1000});
  return f;
}

TargetFunction make_poly1(const std::string& label, std::vector<double> coef) {
  TargetFunction f(label, 1, [coef](const Point& x) {
    double v = 0.0;
    for (std::size_t i = coef.size(); i-- > 0;) v = v * x[0] + coef[i];
    return v;
  });
  f.with_derivatives([coef](const std::vector<int>& alpha, const Point& x) {
    std::vector<double> c = coef;
    for (int m = 0; m < alpha[0]; ++m) {
      std::vector<double> dc(c.size() > 1 ? c.size() - 1 : 1, 0.0);
      for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<double>(i);
      c = dc;
    }
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * x[0] + c[i];
    return v;
  });
  f.with_smoothness({std::nullopt, 1000});
  return f;
}

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> cat;
  const Domain I = Domain::unit_cube(1);
  const Domain Q = Domain::unit_cube(2);
  const Domain S = Domain::box({{-1.0, 1.0}});

  auto add = [&](const std::string& id, const std::string& summary, TargetFunction fn,
                 const Domain& dom) {
    cat.push_back(CatalogEntry{id, summary, std::move(fn), dom});
  };

  TargetFunction abs_kink("abs-kink", 1, [](const Point& x) { return std::abs(x[0] - 0.5); });
  abs_kink.with_smoothness({1.0, 0});
  add("abs-kink", "|x - 1/2| on (0,1)", abs_kink, I);

  add("relu-kink", "max(0, x - 0.3)",
      TargetFunction("relu-kink", 1, [](const Point& x) { return std::max(0.0, x[0] - 0.3); }), I);

  add("hat", "distance to the nearest of {0, 1/2, 1}",
      TargetFunction("hat", 1,
                     [](const Point& x) {
                       return std::min({std::abs(x[0]), std::abs(x[0] - 0.5), std::abs(x[0] - 1.0)});
                     }),
      I);

  TargetFunction signed_square("signed-square", 1, [](const Point& x) {
    double t = x[0] - 0.5;
    return t * std::abs(t);
  });
  signed_square.with_smoothness({std::nullopt, 1});
  add("signed-square", "(x - 1/2)|x - 1/2|, one continuous derivative", signed_square, I);

  TargetFunction sqrt_root("sqrt", 1, [](const Point& x) { return std::sqrt(std::abs(x[0])); });
  sqrt_root.with_smoothness({0.5, 0});
  add("sqrt", "sqrt(x), Hoelder 1/2 at the origin", sqrt_root, I);

  add("cbrt", "x^(1/3)",
      TargetFunction("cbrt", 1, [](const Point& x) { return std::cbrt(std::abs(x[0])); }), I);

  add("sin-2pi", "sin(2 pi x)", make_sin("sin-2pi", 2.0 * kPi), I);
  add("sin-4pi", "sin(4 pi x)", make_sin("sin-4pi", 4.0 * kPi), I);

  TargetFunction cos2(
      "cos-2pi", 1, [](const Point& x) { return std::cos(2.0 * kPi * x[0]); });
  cos2.with_derivatives([](const std::vector<int>& alpha, const Point& x) {
    return sin_deriv(2.0 * kPi, kPi / 2.0, alpha[0], x[0]);
  });
  cos2.with_smoothness({std::nullopt, 1000});
  add("cos-2pi", "cos(2 pi x)", cos2, I);

  TargetFunction expf("exp", 1, [](const Point& x) { return std::exp(x[0]); });
  expf.with_derivatives(
      [](const std::vector<int>&, const Point& x) { return std::exp(x[0]); });
  expf.with_smoothness({std::nullopt, 1000});
  add("exp", "e^x", expf, I);

  add("linear", "x", make_poly1("linear", {0.0, 1.0}), S);
  add("quadratic", "x^2", make_poly1("quadratic", {0.0, 0.0, 1.0}), S);
  add("cubic-minus-x", "x^3 - x", make_poly1("cubic-minus-x", {0.0, -1.0, 0.0, 1.0}), S);
  add("constant-1", "1", make_poly1("constant-1", {1.0}), I);

  add("steep-logistic", "logistic(20(x - 1/2))",
      TargetFunction("steep-logistic", 1,
                     [](const Point& x) { return logistic(20.0 * (x[0] - 0.5)); }),
      I);

  add("gauss-bump", "exp(-20 (x - 1/2)^2)",
      TargetFunction("gauss-bump", 1,
                     [](const Point& x) {
                       double t = x[0] - 0.5;
                       return std::exp(-20.0 * t * t);
                     }),
      I);

  add("abs-sum-2d", "|x - 1/2| + |y - 1/2|",
      TargetFunction("abs-sum-2d", 2,
                     [](const Point& x) {
                       return std::abs(x[0] - 0.5) + std::abs(x[1] - 0.5);
                     }),
      Q);

  TargetFunction sincos("sin-cos-2d", 2, [](const Point& x) {
    return std::sin(2.0 * kPi * x[0]) * std::cos(2.0 * kPi * x[1]);
  });
  sincos.with_derivatives([](const std::vector<int>& alpha, const Point& x) {
    return sin_deriv(2.0 * kPi, 0.0, alpha[0], x[0]) *
           sin_deriv(2.0 * kPi, kPi / 2.0, alpha[1], x[1]);
  });
  sincos.with_smoothness({std::nullopt, 1000});
  add("sin-cos-2d", "sin(2 pi x) cos(2 pi y)", sincos, Q);

  TargetFunction quad2("quadratic-2d", 2,
                       [](const Point& x) { return x[0] * x[0] + x[1] * x[1]; });
  quad2.with_derivatives([](const std::vector<int>& alpha, const Point& x) {
    auto part = [](int m, double t) {
      if (m == 0) return t * t;
      if (m == 1) return 2.0 * t;
      return m == 2 ? 2.0 : 0.0;
    };
    if (alpha[0] > 0 && alpha[1] > 0) return 0.0;
    if (alpha[0] == 0 && alpha[1] == 0) return x[0] * x[0] + x[1] * x[1];
    return alpha[0] > 0 ? part(alpha[0], x[0]) : part(alpha[1], x[1]);
  });
  quad2.with_smoothness({std::nullopt, 1000});
  add("quadratic-2d", "x^2 + y^2", quad2, Q);

  add("ridge-logistic-2d", "logistic(3(x + y - 1))",
      TargetFunction("ridge-logistic-2d", 2,
                     [](const Point& x) { return logistic(3.0 * (x[0] + x[1] - 1.0)); }),
      Q);

  return cat;
}

}  // namespace

const std::vector<CatalogEntry>& function_catalog() {
  static const std::vector<CatalogEntry> cat = build_catalog();
  return cat;
}

const CatalogEntry& catalog_lookup(const std::string& id) {
  for (const CatalogEntry& e : function_catalog())
    if (e.id == id) return e;
  throw std::invalid_argument("catalog: unknown-function '" + id + "'");
}

Activation activation_by_name(const std::string& name) {
  if (name == "logistic") return Activation::logistic();
  if (name == "arctan") return Activation::arctan_sigmoid();
  if (name == "heaviside") return Activation::heaviside();
  if (name == "elu") return Activation::elu(1.0);
  if (name.rfind("elu:", 0) == 0) return Activation::elu(std::stod(name.substr(4)));
  if (name == "relu") return Activation::relu_power(1);
  if (name.rfind("relu-power:", 0) == 0)
    return Activation::relu_power(std::stoi(name.substr(11)));
  throw std::invalid_argument("catalog: unknown-activation '" + name + "'");
}

std::vector<std::string> activation_names() {
  return {"logistic", "arctan", "elu", "elu:alpha", "relu", "relu-power:k", "heaviside"};
}

}  // namespace ridgelab
