#include <doctest.h>

#include <cmath>

#include "kbp/polynomial.hpp"
#include "kbp/profiles.hpp"
#include "oracles.hpp"

using namespace kbp;

TEST_CASE("trimming and degree") {
  const std::vector<double> c = {1.0, 2.0, 0.0, 0.0};
  const auto p = PolynomialCoeffs::from_doubles(c);
  CHECK(p.degree() == 1);
  CHECK(PolynomialCoeffs().degree() == 0);
  CHECK(PolynomialCoeffs().evaluate(0.3) == 0.0);
}

TEST_CASE("monomial expansion of Bernstein elements survives high degree") {
  for (int n : {10, 100, 400}) {
    for (int j : {0, n / 4, n / 2, n}) {
      const auto b = bernstein_basis(n, j);
      const auto mono = to_monomial(b);
      CHECK(mono.degree() <= n);
      for (double t : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
        const double want = oracle::bernstein(n, j, t);
        CHECK(std::fabs(mono.evaluate(t) - want) <= 1e-12 * std::max(1.0, std::fabs(want)));
      }
    }
  }
}

TEST_CASE("Bernstein coefficients invert the expansion") {
  const auto b = RadialProfile::bernstein({0.5, -1.0, 2.0, 3.0, -0.25, 1.5});
  const auto back = to_monomial(b).bernstein_coeffs();
  const std::vector<double> want = {0.5, -1.0, 2.0, 3.0, -0.25, 1.5};
  REQUIRE(back.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) CHECK(back[i] == doctest::Approx(want[i]).epsilon(1e-14));

  const auto big = to_monomial(bernstein_basis(400, 200)).bernstein_coeffs();
  REQUIRE(big.size() == 401);
  for (int i = 0; i <= 400; ++i) CHECK(std::fabs(big[i] - (i == 200 ? 1.0 : 0.0)) <= 1e-12);
}

TEST_CASE("json carries decimal coefficients") {
  const std::vector<double> c = {1.0, -0.5};
  const auto j = to_json(PolynomialCoeffs::from_doubles(c));
  CHECK(j.at("basis") == "monomial");
  CHECK(j.at("degree") == 1);
  CHECK(std::stod(j.at("coeffs")[1].get<std::string>()) == -0.5);
}
