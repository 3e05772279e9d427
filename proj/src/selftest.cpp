#include "kbp/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "kbp/certify.hpp"
#include "kbp/specfun.hpp"
#include "kbp/transforms.hpp"

namespace kbp::cli {
namespace {

struct Check {
  std::string name;
  std::function<std::pair<bool, double>()> body;  // (passed, worst observed error)
};

RadialProfile random_polynomial(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return RadialProfile::monomial(std::move(c));
}

}  // namespace

nlohmann::json run_selftest(const RunConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<Check> checks;

  checks.push_back({"constant identity e = d c (n <= 12)", [] {
                      double worst = 0.0;
                      for (int n = 4; n <= 12; ++n) {
                        for (int m = 2; m <= n - 1; ++m) {
                          const double e = specfun::dual_constant(n, m);
                          const double dc = specfun::duality_constant(n, m) * specfun::forward_constant(m);
                          worst = std::max(worst, std::fabs(e - dc) / e);
                        }
                      }
                      return std::pair{worst <= 1e-12, worst};
                    }});

  checks.push_back({"transforms map 1 to 1 (n <= 8)", [] {
                      const auto one = RadialProfile::constant(1.0);
                      const auto grid = transforms::uniform_grid(21);
                      double worst = 0.0;
                      for (int n = 4; n <= 8; ++n) {
                        for (int m = 2; m <= n - 1; ++m) {
                          const transforms::TransformSpec spec(n, m);
                          for (double x : grid) {
                            worst = std::max({worst, std::fabs(transforms::forward(spec, one, x) - 1.0),
                                              std::fabs(transforms::dual(spec, one, x) - 1.0),
                                              std::fabs(transforms::perp_dual(spec, one, x) - 1.0)});
                          }
                        }
                      }
                      return std::pair{worst <= 1e-12, worst};
                    }});

  checks.push_back({"monomial law forward(t^j) = lambda s^j", [] {
                      double worst = 0.0;
                      for (int m = 2; m <= 6; ++m) {
                        const transforms::TransformSpec spec(m + 1, m);
                        for (int j = 0; j <= 8; ++j) {
                          std::vector<double> c(static_cast<std::size_t>(j) + 1, 0.0);
                          c.back() = 1.0;
                          const auto f = RadialProfile::monomial(c);
                          for (double s : {0.1, 0.5, 0.9}) {
                            const double want = specfun::monomial_multiplier(m, j) * std::pow(s, j);
                            worst = std::max(worst, std::fabs(transforms::forward(spec, f, s) - want));
                          }
                        }
                      }
                      return std::pair{worst <= 1e-10, worst};
                    }});

  checks.push_back({"duality identity on random polynomials", [&rng] {
                      double worst = 0.0;
                      for (int n = 4; n <= 6; ++n) {
                        for (int m = 2; m <= n - 1; ++m) {
                          for (int rep = 0; rep < 2; ++rep) {
                            const auto f = random_polynomial(rng, 6);
                            const auto g = random_polynomial(rng, 6);
                            worst = std::max(worst, transforms::duality_check(n, m, f, g).relative_error);
                          }
                        }
                      }
                      return std::pair{worst <= 1e-8, worst};
                    }});

  checks.push_back({"endpoint identities dual(1) = g(1), perp(1) = g(0)", [&rng] {
                      double worst = 0.0;
                      const transforms::TransformSpec spec(6, 3);
                      for (int rep = 0; rep < 5; ++rep) {
                        const auto g = random_polynomial(rng, 8);
                        worst = std::max({worst, std::fabs(transforms::dual(spec, g, 1.0) - g(1.0)),
                                          std::fabs(transforms::perp_dual(spec, g, 1.0) - g(0.0))});
                      }
                      return std::pair{worst <= 1e-12, worst};
                    }});

  checks.push_back({"worked construction n=4 (delta2, gamma, gamma*)", [] {
                      const auto r = construct::build_g({DimPair(4, 2), 0.5, 0.0625, construct::Variant::parabola});
                      const double err = std::max({std::fabs(r.delta2 - 0.4), std::fabs(r.gamma - 0.8),
                                                   std::fabs(r.gamma_star - 9.0) / 9.0});
                      return std::pair{err <= 1e-9 && r.value_at_s0 == -1.0, err};
                    }});

  checks.push_back({"transform inequalities for the configured (n, k)", [&config] {
                      const construct::ConstructionParams p{DimPair(config.n, config.k), config.s0,
                                                            config.eps, config.variant};
                      const auto r = construct::verify_claims(construct::build_g(p), p.dims, 1024);
                      return std::pair{r.claims_hold(), std::min(r.min_dual_margin, r.min_perp_margin)};
                    }});

  checks.push_back({"negative certificate for the configured (n, k)", [&config] {
                      const construct::ConstructionParams p{DimPair(config.n, config.k), config.s0,
                                                            config.eps, config.variant};
                      const auto c = certify::certify_with_doubling(p, config.degree, Exec::parallel, config.seed);
                      const bool ok = c.pairing_value < 0.0 && c.nonnegativity_floor >= 0.0 &&
                                      c.roundtrip_error <= certify::kRoundtripTolerance;
                      return std::pair{ok, c.pairing_value};
                    }});

  nlohmann::json list = nlohmann::json::array();
  int passed = 0;
  int failed = 0;
  for (const auto& check : checks) {
    bool ok = false;
    double value = 0.0;
    std::string error;
    try {
      std::tie(ok, value) = check.body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    (ok ? passed : failed) += 1;
    nlohmann::json entry = {{"name", check.name}, {"passed", ok}, {"value", value}};
    if (!error.empty()) entry["error"] = error;
    list.push_back(entry);
  }
  return {{"passed", passed}, {"failed", failed}, {"seed", config.seed}, {"checks", list}};
}

}  // namespace kbp::cli
