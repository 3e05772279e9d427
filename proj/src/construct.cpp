#include "kbp/construct.hpp"

#include <algorithm>
#include <cmath>

#include "kbp/errors.hpp"
#include "kbp/transforms.hpp"

namespace kbp::construct {
namespace {

constexpr int kCoarseWindowGrid = 1024;
constexpr double kGoldenTol = 1e-10;
constexpr double kGammaCeiling = 1.0 - 1e-9;

// Maximizes f on [lo, hi]; returns the best value seen (including both ends).
template <class F>
double golden_max(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double best = std::max(f(lo), f(hi));
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kGoldenTol) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    best = std::max({best, fc, fd});
  }
  return best;
}

struct GridMin {
  double margin = 0.0;
  double at = 0.0;
  double slack = 0.0;
};

GridMin grid_minimum(const std::vector<double>& grid, const std::vector<double>& values) {
  const auto it = std::min_element(values.begin(), values.end());
  const auto i = static_cast<std::size_t>(it - values.begin());
  double steepest = 0.0;
  if (i > 0) steepest = std::max(steepest, std::fabs(values[i] - values[i - 1]));
  if (i + 1 < values.size()) steepest = std::max(steepest, std::fabs(values[i + 1] - values[i]));
  // h * (2 * |difference| / h)
  return {*it - 1.0, grid[i], 2.0 * steepest};
}

}  // namespace

std::string to_string(Variant v) {
  switch (v) {
    case Variant::parabola:
      return "parabola";
    case Variant::glued:
      return "glued";
    case Variant::unit:
      return "unit";
  }
  return "parabola";
}

Variant variant_from_string(const std::string& name) {
  if (name == "parabola") return Variant::parabola;
  if (name == "glued") return Variant::glued;
  if (name == "unit") return Variant::unit;
  throw ParameterError("unknown construction variant: " + name);
}

void validate_window(double s0, double eps) {
  if (!std::isfinite(s0) || !std::isfinite(eps) || !(eps > 0.0) || !(s0 - 2.0 * eps > 0.0) ||
      !(s0 + 2.0 * eps < 1.0)) {
    throw ParameterError("construction window [s0-2eps, s0+2eps] must lie inside (0,1)");
  }
}

void ConstructionParams::validate() const { validate_window(s0, eps); }

WindowDeltas window_deltas(double s0, double eps) {
  validate_window(s0, eps);
  const double hi = s0 + 2.0 * eps;
  const double lo = s0 - 2.0 * eps;
  WindowDeltas out;
  out.delta1 = 1.0 - std::sqrt((1.0 - hi * hi) / (1.0 - lo * lo));
  out.delta2 = 4.0 * eps / hi;
  out.delta = std::max(out.delta1, out.delta2);
  return out;
}

double window_mass(int n, int m, double v, double delta) {
  const double a = 0.5 * (n - m);
  const double b = 0.5 * (m - 1);
  const double x0 = std::clamp(v, 0.0, 1.0);
  const double x1 = std::clamp(v + delta, 0.0, 1.0);
  return specfun::reg_inc_beta(x1 * x1, a, b) - specfun::reg_inc_beta(x0 * x0, a, b);
}

double gamma_sup(int n, double delta) {
  if (n < 4) throw ParameterError("gamma_sup requires n >= 4");
  if (!(delta >= 0.0 && delta < 1.0)) throw ParameterError("gamma_sup requires 0 <= delta < 1");
  if (delta == 0.0) return 0.0;
  const double vmax = 1.0 - delta;
  double gamma = 0.0;
  for (int m = 2; m <= n - 2; ++m) {
    auto mass = [&](double v) { return window_mass(n, m, v, delta); };
    std::vector<double> vs(kCoarseWindowGrid);
    double best = -1.0;
    std::size_t best_i = 0;
    for (int i = 0; i < kCoarseWindowGrid; ++i) {
      vs[i] = vmax * i / (kCoarseWindowGrid - 1);
      const double w = mass(vs[i]);
      if (w > best) {
        best = w;
        best_i = static_cast<std::size_t>(i);
      }
    }
    const double lo = vs[best_i > 0 ? best_i - 1 : 0];
    const double hi = vs[std::min<std::size_t>(best_i + 1, vs.size() - 1)];
    best = std::max(best, golden_max(mass, lo, hi));
    gamma = std::max(gamma, best);
  }
  if (gamma >= kGammaCeiling) {
    throw AccuracyError("window mass sup is not certifiably below 1", gamma);
  }
  return gamma;
}

bool ConstructionResult::claims_hold() const {
  return verified && min_dual_margin - dual_slack > 0.0 && min_perp_margin - perp_slack > 0.0;
}

bool ConstructionResult::margins_nonnegative(double tol) const {
  return grid_size > 0 && min_dual_margin >= -tol && min_perp_margin >= -tol;
}

ConstructionResult build_g(const ConstructionParams& params) {
  params.validate();
  const auto deltas = window_deltas(params.s0, params.eps);
  ConstructionResult r;
  r.delta1 = deltas.delta1;
  r.delta2 = deltas.delta2;
  r.delta = deltas.delta;
  r.gamma = gamma_sup(params.dims.n(), deltas.delta);
  r.gamma_star = (1.0 + r.gamma) / (1.0 - r.gamma);
  switch (params.variant) {
    case Variant::parabola:
      r.g = RadialProfile::parabola_bump(params.s0, params.eps, r.gamma_star);
      break;
    case Variant::glued:
      r.g = RadialProfile::glued_bump(params.s0, params.eps, r.gamma_star);
      break;
    case Variant::unit:
      r.g = RadialProfile::constant(1.0);
      break;
  }
  r.value_at_s0 = r.g.evaluate(params.s0);
  return r;
}

ConstructionResult verify_claims(ConstructionResult result, const DimPair& dims, int grid_size,
                                 Exec exec) {
  const auto grid = transforms::uniform_grid(grid_size);
  const int n = dims.n();
  const int k = dims.k();
  const auto dual_vals = transforms::dual_grid(transforms::TransformSpec(n, n - k), result.g, grid, exec);
  const auto perp_vals = transforms::perp_dual_grid(transforms::TransformSpec(n, k), result.g, grid, exec);
  const auto dmin = grid_minimum(grid, dual_vals);
  const auto pmin = grid_minimum(grid, perp_vals);
  result.grid_size = grid_size;
  result.min_dual_margin = dmin.margin;
  result.argmin_dual = dmin.at;
  result.dual_slack = dmin.slack;
  result.min_perp_margin = pmin.margin;
  result.argmin_perp = pmin.at;
  result.perp_slack = pmin.slack;
  result.lipschitz_slack = std::max(dmin.slack, pmin.slack);
  result.dual_at_one = dual_vals.back();
  result.perp_at_one = perp_vals.back();
  result.verified = true;
  return result;
}

std::map<int, ClaimMargins> verify_all_m(const ConstructionResult& result, int n, int grid_size,
                                         Exec exec) {
  std::map<int, ClaimMargins> out;
  for (int k = 2; k <= n - 2; ++k) {
    const auto r = verify_claims(result, DimPair(n, k), grid_size, exec);
    out[k] = {r.min_dual_margin, r.min_perp_margin, r.lipschitz_slack, r.claims_hold()};
  }
  return out;
}

nlohmann::json to_json(const ConstructionParams& p) {
  return {{"n", p.dims.n()},
          {"k", p.dims.k()},
          {"s0", p.s0},
          {"eps", p.eps},
          {"variant", to_string(p.variant)}};
}

nlohmann::json to_json(const ConstructionResult& r) {
  return {{"delta1", r.delta1},
          {"delta2", r.delta2},
          {"delta", r.delta},
          {"gamma", r.gamma},
          {"gamma_star", r.gamma_star},
          {"g", kbp::to_json(r.g)},
          {"value_at_s0", r.value_at_s0},
          {"grid_size", r.grid_size},
          {"min_dual_margin", r.min_dual_margin},
          {"min_perp_margin", r.min_perp_margin},
          {"argmin_dual", r.argmin_dual},
          {"argmin_perp", r.argmin_perp},
          {"dual_slack", r.dual_slack},
          {"perp_slack", r.perp_slack},
          {"lipschitz_slack", r.lipschitz_slack},
          {"dual_at_one", r.dual_at_one},
          {"perp_at_one", r.perp_at_one},
          {"claims_hold", r.claims_hold()}};
}

}  // namespace kbp::construct
