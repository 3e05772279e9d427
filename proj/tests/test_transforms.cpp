#include <doctest.h>

#include <cmath>
#include <random>

#include "kbp/errors.hpp"
#include "kbp/specfun.hpp"
#include "kbp/transforms.hpp"
#include "oracles.hpp"

using namespace kbp;
using transforms::TransformSpec;

namespace {

RadialProfile random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& x : c) x = u(rng);
  return RadialProfile::monomial(std::move(c));
}

}  // namespace

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(TransformSpec(4, 1), ParameterError);
  CHECK_THROWS_AS(TransformSpec(4, 4), ParameterError);
  CHECK_NOTHROW(TransformSpec(4, 3));
}

TEST_CASE("constant 1 is fixed by every transform") {
  const auto one = RadialProfile::constant(1.0);
  for (int n = 4; n <= 10; ++n) {
    for (int m = 2; m <= n - 1; ++m) {
      const TransformSpec spec(n, m);
      for (double x : transforms::uniform_grid(101)) {
        CHECK(std::fabs(transforms::forward(spec, one, x) - 1.0) <= 1e-12);
        CHECK(std::fabs(transforms::dual(spec, one, x) - 1.0) <= 1e-12);
        CHECK(std::fabs(transforms::perp_dual(spec, one, x) - 1.0) <= 1e-12);
      }
    }
  }
}

TEST_CASE("closed forms for n = 4, m = 2 on g = s^2") {
  const auto sq = RadialProfile::monomial({0.0, 0.0, 1.0});
  const TransformSpec spec(4, 2);
  for (double t : transforms::uniform_grid(33)) {
    CHECK(transforms::dual(spec, sq, t) == doctest::Approx((1.0 + 2.0 * t * t) / 3.0).epsilon(1e-13));
    CHECK(std::fabs(transforms::perp_dual(spec, sq, t) - 2.0 / 3.0 * (1.0 - t * t)) <= 1e-13);
  }
}

TEST_CASE("forward maps t^j to lambda s^j") {
  for (int m = 2; m <= 10; ++m) {
    const TransformSpec spec(m + 1, m);
    for (int j = 0; j <= 12; ++j) {
      std::vector<double> c(static_cast<std::size_t>(j) + 1, 0.0);
      c.back() = 1.0;
      const auto f = RadialProfile::monomial(c);
      for (double s : {0.0, 0.2, 0.55, 1.0}) {
        CHECK(std::fabs(transforms::forward(spec, f, s) - specfun::monomial_multiplier(m, j) * std::pow(s, j)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("endpoint identities") {
  std::mt19937_64 rng(7);
  for (int n = 4; n <= 8; ++n) {
    for (int m = 2; m <= n - 1; ++m) {
      const auto g = random_poly(rng, 7);
      const TransformSpec spec(n, m);
      CHECK(transforms::dual(spec, g, 1.0) == g(1.0));
      CHECK(transforms::perp_dual(spec, g, 1.0) == g(0.0));
      // approaching t = 1 through quadrature, not the shortcut
      CHECK(transforms::dual(spec, g, 1.0 - 1e-12) == doctest::Approx(g(1.0)).epsilon(1e-9));
      CHECK(transforms::perp_dual(spec, g, 1.0 - 1e-12) == doctest::Approx(g(0.0)).epsilon(1e-5));
    }
  }
}

TEST_CASE("dual transforms match a midpoint oracle on the worked bump") {
  const auto g = RadialProfile::parabola_bump(0.5, 0.0625, 9.0);
  const auto gf = [](double s) { return 640 * s * s - 640 * s + 159; };
  for (auto [n, m] : {std::pair{4, 2}, {5, 3}, {6, 2}, {8, 4}}) {
    const TransformSpec spec(n, m);
    for (double t : {0.0, 0.2, 0.37, 0.64, 0.9}) {
      CHECK(transforms::dual(spec, g, t) == doctest::Approx(oracle::dual(n, m, gf, t, 200000)).epsilon(1e-9));
      CHECK(transforms::perp_dual(spec, g, t) == doctest::Approx(oracle::perp_dual(n, m, gf, t, 200000)).epsilon(1e-9));
    }
  }
}

TEST_CASE("duality identity on random polynomial pairs") {
  std::mt19937_64 rng(20080317);
  double worst = 0.0;
  for (int n = 4; n <= 10; ++n) {
    for (int m = 2; m <= n - 1; ++m) {
      for (int rep = 0; rep < 4; ++rep) {
        const auto r = transforms::duality_check(n, m, random_poly(rng, 8), random_poly(rng, 8));
        worst = std::max(worst, r.relative_error);
      }
    }
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("duality identity with a non-polynomial g") {
  const auto g = RadialProfile::glued_bump(0.5, 0.0625, 9.0);
  const auto f = RadialProfile::monomial({1.0, -0.5, 0.25});
  for (auto [n, m] : {std::pair{4, 2}, {6, 3}, {7, 5}}) {
    CHECK(transforms::duality_check(n, m, f, g).relative_error <= 1e-8);
  }
}

TEST_CASE("pairing is normalized and matches a Riemann sum") {
  const auto one = RadialProfile::constant(1.0);
  for (int n = 4; n <= 10; ++n) {
    for (int k = 2; k <= n - 2; ++k) CHECK(transforms::pairing(DimPair(n, k), one, one) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const auto g = RadialProfile::parabola_bump(0.5, 0.0625, 9.0);
  const auto p = bernstein_basis(40, 17);
  for (auto [n, k] : {std::pair{4, 2}, {6, 2}, {6, 4}, {7, 3}}) {
    const double b = 2.0 / oracle::beta(k / 2.0, (n - k) / 2.0);
    const double want = b * oracle::midpoint_richardson(
                                [&](double s) {
                                  return (640 * s * s - 640 * s + 159) * oracle::bernstein(40, 17, s) *
                                         std::pow(1 - s * s, (k - 2) / 2.0) * std::pow(s, n - k - 1);
                                },
                                0.0, 1.0, 200000);
    CHECK(transforms::pairing(DimPair(n, k), g, p) == doctest::Approx(want).epsilon(1e-9));
  }
}
