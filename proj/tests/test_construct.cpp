#include <doctest.h>

#include <cmath>

#include "kbp/errors.hpp"
#include "kbp/construct.hpp"
#include "kbp/transforms.hpp"
#include "oracles.hpp"

using namespace kbp;
using namespace kbp::construct;

namespace {

// Longest preimage of the window under the two substitutions, by brute scan over t.
std::pair<double, double> scanned_deltas(double s0, double eps, int points) {
  const double lo = s0 - 2 * eps, hi = s0 + 2 * eps;
  double d1 = 0.0, d2 = 0.0;
  for (int i = 0; i < points; ++i) {
    const double t = (i + 0.5) / points;
    const double u = 1 - t * t;
    // sqrt(1 - s^2 u) in [lo, hi]  <=>  s^2 in [(1-hi^2)/u, (1-lo^2)/u]
    const double a = std::sqrt(std::clamp((1 - hi * hi) / u, 0.0, 1.0));
    const double b = std::sqrt(std::clamp((1 - lo * lo) / u, 0.0, 1.0));
    d1 = std::max(d1, b - a);
    // s sqrt(u) in [lo, hi]
    const double c = std::clamp(lo / std::sqrt(u), 0.0, 1.0);
    const double d = std::clamp(hi / std::sqrt(u), 0.0, 1.0);
    d2 = std::max(d2, d - c);
  }
  return {d1, d2};
}

}  // namespace

TEST_CASE("window validation") {
  CHECK_NOTHROW(validate_window(0.5, 0.0625));
  CHECK_THROWS_AS(validate_window(0.5, 0.3), ParameterError);
  CHECK_THROWS_AS(validate_window(0.1, 0.05), ParameterError);
  CHECK_THROWS_AS(validate_window(0.5, 0.0), ParameterError);
  CHECK_THROWS_AS(validate_window(0.5, -0.1), ParameterError);
  CHECK(variant_from_string("glued") == Variant::glued);
  CHECK(to_string(Variant::parabola) == "parabola");
  CHECK_THROWS_AS(variant_from_string("square"), ParameterError);
}

TEST_CASE("window deltas match a brute-force scan") {
  for (auto [s0, eps] : {std::pair{0.5, 0.0625}, {0.3, 0.05}, {0.7, 0.1}, {0.5, 0.02}}) {
    const auto d = window_deltas(s0, eps);
    const auto [d1, d2] = scanned_deltas(s0, eps, 200000);
    // a scan can only undershoot the supremum
    CHECK(d.delta1 >= d1 - 1e-12);
    CHECK(d.delta2 >= d2 - 1e-12);
    CHECK(d.delta1 - d1 <= 1e-4);
    CHECK(d.delta2 - d2 <= 1e-4);
    CHECK(d.delta == std::max(d.delta1, d.delta2));
  }
  const auto d = window_deltas(0.5, 0.0625);
  CHECK(d.delta2 == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::fabs(d.delta1 - 0.157925) <= 1e-6);
}

TEST_CASE("window mass against direct integration") {
  for (auto [n, m] : {std::pair{4, 2}, {6, 3}, {7, 2}, {9, 5}}) {
    const double e = 2.0 / oracle::beta((n - m) / 2.0, (m - 1) / 2.0);
    for (double v : {0.0, 0.25, 0.6}) {
      const double hi = std::min(1.0, v + 0.4);
      // s = sin(theta) removes the endpoint singularity
      const double want = e * oracle::midpoint_richardson(
                                  [&](double th) { return std::pow(std::cos(th), m - 2) * std::pow(std::sin(th), n - m - 1); },
                                  std::asin(v), std::asin(hi), 100000);
      CHECK(window_mass(n, m, v, 0.4) == doctest::Approx(want).epsilon(1e-9));
    }
  }
  CHECK(window_mass(4, 2, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("gamma for the worked example") {
  CHECK(gamma_sup(4, 0.4) == doctest::Approx(0.8).epsilon(1e-9));
  // the only window measure for n = 4 is s (1-s^2)^(-1/2) ds; its heaviest window is [0.6, 1]
  CHECK(window_mass(4, 2, 0.6, 0.4) == doctest::Approx(0.8).epsilon(1e-12));
  for (int n = 5; n <= 9; ++n) {
    const double g = gamma_sup(n, 0.4);
    CHECK(g > 0.0);
    CHECK(g < 1.0);
    for (int m = 2; m <= n - 2; ++m)
      for (double v = 0.0; v <= 0.6; v += 0.01) CHECK(window_mass(n, m, v, 0.4) <= g + 1e-12);
  }
}

TEST_CASE("build_g worked example") {
  const auto r = build_g({DimPair(4, 2), 0.5, 0.0625, Variant::parabola});
  CHECK(r.delta2 == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(std::fabs(r.delta1 - 0.157925) <= 1e-6);
  CHECK(std::fabs(r.gamma - 0.8) <= 1e-9);
  CHECK(std::fabs(r.gamma_star - 9.0) <= 1e-8);
  CHECK(r.value_at_s0 == -1.0);
  CHECK(r.g(0.0) == doctest::Approx(159.0).epsilon(1e-12));
  CHECK(r.g(1.0) == doctest::Approx(159.0).epsilon(1e-12));
}

TEST_CASE("claims hold for the parabola and the glued bump") {
  for (auto v : {Variant::parabola, Variant::glued}) {
    for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {5, 3}, {6, 3}, {8, 4}}) {
      const ConstructionParams p{DimPair(n, k), 0.5, 0.0625, v};
      const auto r = verify_claims(build_g(p), p.dims, 512);
      CHECK(r.claims_hold());
      CHECK(r.margins_nonnegative());
      CHECK(r.min_dual_margin >= -1e-9);
      CHECK(r.min_perp_margin >= -1e-9);
      CHECK(r.dual_at_one == doctest::Approx(r.g(1.0)).epsilon(1e-12));
      CHECK(r.perp_at_one == doctest::Approx(r.g(0.0)).epsilon(1e-12));
      CHECK(r.lipschitz_slack == std::max(r.dual_slack, r.perp_slack));
    }
  }
}

TEST_CASE("recorded minima agree with an independent oracle") {
  const ConstructionParams p{DimPair(6, 2), 0.5, 0.0625, Variant::parabola};
  const auto r = verify_claims(build_g(p), p.dims, 257);
  const double gs = r.gamma_star;
  const auto gf = [&](double s) { return (gs + 1) * std::pow((s - 0.5) / 0.125, 2) - 1; };
  CHECK(1.0 + r.min_dual_margin == doctest::Approx(oracle::dual(6, 4, gf, r.argmin_dual, 100000)).epsilon(1e-8));
  CHECK(1.0 + r.min_perp_margin == doctest::Approx(oracle::perp_dual(6, 2, gf, r.argmin_perp, 100000)).epsilon(1e-8));
}

TEST_CASE("the sweep over k uses the same g") {
  const ConstructionParams p{DimPair(6, 2), 0.5, 0.0625, Variant::parabola};
  const auto all = verify_all_m(verify_claims(build_g(p), p.dims, 256), 6, 256);
  CHECK(all.size() == 3);
  for (const auto& [k, m] : all) {
    CHECK(m.holds);
    CHECK(m.dual_margin > m.slack);
    CHECK(m.perp_margin > m.slack);
  }
}

TEST_CASE("a constant g fails the claims exactly at the boundary") {
  // g = 1 makes both transforms identically 1: margins are zero, so the strict test fails.
  const ConstructionParams p{DimPair(4, 2), 0.5, 0.0625, Variant::unit};
  const auto r = verify_claims(build_g(p), p.dims, 64);
  CHECK(std::fabs(r.min_dual_margin) <= 1e-12);
  CHECK(r.margins_nonnegative());
}

TEST_CASE("json") {
  const ConstructionParams p{DimPair(5, 2), 0.4, 0.05, Variant::glued};
  const auto j = to_json(p);
  CHECK(j.at("variant") == "glued");
  CHECK(j.at("n") == 5);
  const auto r = to_json(build_g(p));
  CHECK(r.contains("gamma_star"));
  CHECK(r.at("g").at("variant") == "glued_bump");
}
