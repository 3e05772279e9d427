#include <doctest.h>

#include <cmath>
#include <numbers>

#include "kbp/errors.hpp"
#include "kbp/specfun.hpp"
#include "oracles.hpp"

using namespace kbp;
using namespace kbp::specfun;

TEST_CASE("log_gamma agrees with MPFR") {
  double worst_abs = 0.0;
  for (double x = 0.05; x <= 200.0; x *= 1.07) {
    const double want = oracle::lngamma(x);
    worst_abs = std::max(worst_abs, std::fabs(log_gamma(x) - want) / std::max(1.0, std::fabs(want)));
  }
  for (int h = 1; h <= 400; ++h) {
    const double x = h / 2.0;
    const double want = oracle::lngamma(x);
    worst_abs = std::max(worst_abs, std::fabs(log_gamma(x) - want) / std::max(1.0, std::fabs(want)));
  }
  CHECK(worst_abs <= 1e-13);
}

TEST_CASE("log_gamma special values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(std::fabs(log_gamma(2.0)) <= 1e-14);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  CHECK_THROWS_AS(log_gamma(0.0), DomainError);
  CHECK_THROWS_AS(log_gamma(-1.5), DomainError);
}

TEST_CASE("beta matches closed forms") {
  CHECK(beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(beta(0.5, 0.5) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
  CHECK(beta(2.0, 3.0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  CHECK(beta(3.5, 1.5) == doctest::Approx(oracle::beta(3.5, 1.5)).epsilon(1e-13));
}

TEST_CASE("regularized incomplete beta") {
  // I_x(1, b) = 1 - (1-x)^b and I_x(a, 1) = x^a.
  for (double b : {0.5, 1.0, 1.5, 3.0, 7.5}) {
    for (double x : {0.0, 0.01, 0.3, 0.5, 0.77, 0.999, 1.0}) {
      CHECK(reg_inc_beta(x, 1.0, b) == doctest::Approx(1.0 - std::pow(1.0 - x, b)).epsilon(1e-13));
      CHECK(reg_inc_beta(x, b, 1.0) == doctest::Approx(std::pow(x, b)).epsilon(1e-13));
    }
  }
  // symmetry I_x(a,b) = 1 - I_{1-x}(b,a)
  for (double x : {0.1, 0.4, 0.9}) {
    CHECK(reg_inc_beta(x, 2.5, 0.5) + reg_inc_beta(1.0 - x, 0.5, 2.5) == doctest::Approx(1.0).epsilon(1e-13));
  }
  // against a direct quadrature of the density
  const double a = 1.5, b = 2.0;
  const double want = oracle::midpoint([&](double u) { return std::pow(u, a - 1) * std::pow(1 - u, b - 1); },
                                       0.0, 0.35, 400000) /
                      oracle::beta(a, b);
  CHECK(reg_inc_beta(0.35, a, b) == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("normalization constants") {
  // c_2 = 2/pi, c_3 = 1
  CHECK(forward_constant(2) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-14));
  CHECK(forward_constant(3) == doctest::Approx(1.0).epsilon(1e-14));
  for (int n = 4; n <= 14; ++n) {
    CHECK(polar_constant(n) * oracle::beta(0.5, (n - 1) / 2.0) / 2.0 == doctest::Approx(1.0).epsilon(1e-12));
    for (int m = 2; m <= n - 1; ++m) {
      CHECK(dual_constant(n, m) == doctest::Approx(duality_constant(n, m) * forward_constant(m)).epsilon(1e-12));
      CHECK(dual_constant(n, m) == doctest::Approx(2.0 / oracle::beta((n - m) / 2.0, (m - 1) / 2.0)).epsilon(1e-12));
    }
    for (int m = 1; m <= n - 1; ++m) {
      CHECK(bipolar_constant(n, m) == doctest::Approx(2.0 / oracle::beta((n - m) / 2.0, m / 2.0)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(dual_constant(4, 4), UnsupportedError);
  CHECK_THROWS_AS(bipolar_constant(4, 0), UnsupportedError);
  CHECK_THROWS_AS(forward_constant(1), UnsupportedError);
}

TEST_CASE("monomial multipliers") {
  CHECK(monomial_multiplier(2, 2) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(monomial_multiplier(3, 2) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  for (int m = 2; m <= 10; ++m) {
    CHECK(monomial_multiplier(m, 0) == doctest::Approx(1.0).epsilon(1e-14));
    for (int j = 0; j <= 12; ++j) {
      // lambda(m, j) = c_m int_0^1 t^j (1-t^2)^((m-3)/2) dt, in the angle variable
      const double want = forward_constant(m) *
                          oracle::midpoint_richardson([&](double th) { return std::pow(std::sin(th), j) * std::pow(std::cos(th), m - 2); },
                                           0.0, std::numbers::pi / 2, 20000);
      CHECK(monomial_multiplier(m, j) == doctest::Approx(want).epsilon(1e-10));
      if (j >= 2) {
        CHECK(monomial_multiplier(m, j) ==
              doctest::Approx(monomial_multiplier(m, j - 2) * (j - 1.0) / (j + m - 2.0)).epsilon(1e-13));
      }
    }
  }
}

TEST_CASE("DimPair validation") {
  CHECK_NOTHROW(DimPair(4, 2));
  CHECK_THROWS_AS(DimPair(3, 1), ParameterError);
  CHECK_THROWS_AS(DimPair(5, 4), ParameterError);
  CHECK_THROWS_AS(DimPair(6, 1), ParameterError);
}

TEST_CASE("constants table contents") {
  const auto t = make_constants_table(DimPair(6, 2));
  CHECK(t.c.size() == 4);
  CHECK(t.e.size() == 4);
  CHECK(t.b.size() == 5);
  CHECK(t.lambda.count({4, 12}) == 1);
  CHECK(t.lambda.count({2, 0}) == 1);
  const auto j = to_json(t);
  CHECK(j.at("n") == 6);
  CHECK(j.at("lambda").contains("2,2"));
  CHECK(j.at("e").contains("6,3"));
}
