#include <doctest.h>

#include <cmath>
#include <functional>

#include "mcb/errors.hpp"
#include "mcb/special.hpp"

namespace {

// Adaptive Simpson quadrature, an implementation-independent route to the F
// tail probability.
double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fb,
               double fm, double eps, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, fm, flm, eps / 2.0, depth - 1) +
         simpson(f, m, b, fm, fb, frm, eps / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double eps) {
  const double m = 0.5 * (a + b);
  return simpson(f, a, b, f(a), f(b), f(m), eps, 40);
}

// F(d1, d2) cdf at x by quadrature; substitution x = t^2 removes the
// endpoint singularity when d1 < 2.
double f_cdf_quadrature(double d1, double d2, double x) {
  const double lognc = std::lgamma((d1 + d2) / 2.0) - std::lgamma(d1 / 2.0) -
                       std::lgamma(d2 / 2.0) + (d1 / 2.0) * std::log(d1 / d2);
  auto pdf = [&](double v) {
    return std::exp(lognc + (d1 / 2.0 - 1.0) * std::log(v) -
                    ((d1 + d2) / 2.0) * std::log1p(d1 * v / d2));
  };
  auto integrand = [&](double t) { return t == 0.0 ? 0.0 : pdf(t * t) * 2.0 * t; };
  return integrate(integrand, 0.0, std::sqrt(x), 1e-13);
}

}  // namespace

TEST_CASE("incomplete beta closed forms") {
  // I_x(1, b) = 1 - (1-x)^b and I_x(a, 1) = x^a
  for (double x : {0.05, 0.3, 0.7, 0.95}) {
    for (double b : {0.5, 2.0, 7.5}) {
      CHECK(mcb::incomplete_beta(1.0, b, x) ==
            doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-12));
      CHECK(mcb::incomplete_beta(b, 1.0, x) == doctest::Approx(std::pow(x, b)).epsilon(1e-12));
    }
  }
  // symmetry
  CHECK(mcb::incomplete_beta(3.2, 5.4, 0.37) ==
        doctest::Approx(1.0 - mcb::incomplete_beta(5.4, 3.2, 0.63)).epsilon(1e-12));
  // endpoints
  CHECK(mcb::incomplete_beta(2.0, 3.0, 0.0) == 0.0);
  CHECK(mcb::incomplete_beta(2.0, 3.0, 1.0) == 1.0);
  CHECK_THROWS_AS(mcb::incomplete_beta(0.0, 1.0, 0.5), mcb::ConfigError);
  CHECK_THROWS_AS(mcb::incomplete_beta(1.0, 1.0, 1.5), mcb::ConfigError);
}

TEST_CASE("F survival closed form at d1 = 2") {
  // P(F(2, d2) >= f) = (1 + 2 f / d2)^(-d2/2)
  for (double d2 : {2.0, 5.0, 40.0}) {
    for (double f : {0.1, 1.0, 3.7, 12.0}) {
      CHECK(mcb::f_survival(2.0, d2, f) ==
            doctest::Approx(std::pow(1.0 + 2.0 * f / d2, -d2 / 2.0)).epsilon(1e-12));
    }
  }
}

TEST_CASE("F survival matches quadrature within 1e-10") {
  const double dfs[][2] = {{1, 5}, {3, 7}, {5, 2}, {10, 30}, {4, 432}};
  for (const auto& df : dfs) {
    for (double f : {0.25, 1.0, 2.5, 8.0}) {
      const double expected = 1.0 - f_cdf_quadrature(df[0], df[1], f);
      CHECK(std::fabs(mcb::f_survival(df[0], df[1], f) - expected) < 1e-10);
    }
  }
}

TEST_CASE("F survival edge values") {
  CHECK(mcb::f_survival(3, 10, 0.0) == 1.0);
  CHECK(mcb::f_survival(3, 10, -1.0) == 1.0);
  CHECK(mcb::f_survival(3, 10, std::numeric_limits<double>::infinity()) == 0.0);
  CHECK_THROWS_AS(mcb::f_survival(0, 10, 1.0), mcb::ConfigError);
}
