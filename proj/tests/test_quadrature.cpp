#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "kbp/errors.hpp"
#include "kbp/quadrature.hpp"

using namespace kbp;

TEST_CASE("rules are exact for polynomials of degree 2n-1") {
  for (int order : {1, 2, 5, 32, 64, 1024}) {
    const auto& r = quad::gauss_legendre(order);
    CHECK(r.nodes.size() == static_cast<std::size_t>(order));
    CHECK(std::accumulate(r.weights.begin(), r.weights.end(), 0.0) == doctest::Approx(2.0).epsilon(1e-13));
    for (std::size_t i = 1; i < r.nodes.size(); ++i) CHECK(r.nodes[i] > r.nodes[i - 1]);
    const int deg = std::min(2 * order - 1, 40);
    for (int p = 0; p <= deg; ++p) {
      double s = 0.0;
      for (int i = 0; i < order; ++i) s += r.weights[i] * std::pow(r.nodes[i], p);
      const double want = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(std::fabs(s - want) <= 1e-13);
    }
  }
  CHECK_THROWS_AS(quad::gauss_legendre(0), ParameterError);
  CHECK_THROWS_AS(quad::gauss_legendre(1025), ParameterError);
}

TEST_CASE("adaptive integration converges and splits at breaks") {
  const auto r = quad::integrate_adaptive([](double x) { return std::cos(x); }, 0.0, std::numbers::pi / 2);
  CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.order == 64);  // 32 and 64 agree

  const double brk[] = {0.3};
  const auto kink = quad::integrate_adaptive([](double x) { return std::fabs(x - 0.3); }, 0.0, 1.0, brk);
  CHECK(kink.value == doctest::Approx(0.045 + 0.245).epsilon(1e-14));
}

TEST_CASE("adaptive integration reports failure with the last estimate") {
  bool thrown = false;
  try {
    quad::integrate_adaptive([](double x) { return std::sin(1.0 / (x + 1e-4)); }, 0.0, 1.0);
  } catch (const AccuracyError& e) {
    thrown = true;
    CHECK(std::isfinite(e.last_estimate()));
  }
  CHECK(thrown);
}
