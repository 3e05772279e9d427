#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "kbp/parallel.hpp"
#include "kbp/profiles.hpp"
#include "kbp/specfun.hpp"

// The bump profile g with g(s0) = -1 whose dual transform R~*_{n-k}(g) and
// perp dual (I o R~_k)*(g) are both >= 1 on [0,1].
namespace kbp::construct {

// `unit` replaces g by the constant 1; it is a control input, not a bump.
enum class Variant { parabola, glued, unit };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

// Throws ParameterError unless eps > 0 and [s0-2eps, s0+2eps] lies in (0,1).
void validate_window(double s0, double eps);

struct ConstructionParams {
  DimPair dims{4, 2};
  double s0 = 0.5;
  double eps = 0.0625;
  Variant variant = Variant::parabola;

  void validate() const;
};

struct WindowDeltas {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta = 0.0;
};

/// Longest preimage of [s0-2eps, s0+2eps] under s -> sqrt(1-s^2(1-t^2))
/// (delta1) and under s -> s sqrt(1-t^2) (delta2), maximized over t.
WindowDeltas window_deltas(double s0, double eps);

/// Largest mass any window [v, v+delta] carries under the probability
/// measures e_{n,m} (1-s^2)^((m-3)/2) s^(n-m-1) ds, m = 2..n-2.
/// Throws AccuracyError if the value cannot be certified below 1.
double gamma_sup(int n, double delta);

/// Mass of [v, min(v+delta, 1)] under the m-th window measure (closed form
/// through the regularized incomplete Beta).
double window_mass(int n, int m, double v, double delta);

struct ConstructionResult {
  double delta1 = 0.0;
  double delta2 = 0.0;
  double delta = 0.0;
  double gamma = 0.0;
  double gamma_star = 0.0;
  RadialProfile g = RadialProfile::constant(1.0);
  double value_at_s0 = 0.0;

  // Filled by verify_claims.
  int grid_size = 0;
  double min_dual_margin = 0.0;   // min_t R~*_{n-k}(g)(t) - 1
  double min_perp_margin = 0.0;   // min_t (I o R~_k)*(g)(t) - 1
  double argmin_dual = 0.0;
  double argmin_perp = 0.0;
  double dual_slack = 0.0;
  double perp_slack = 0.0;
  double lipschitz_slack = 0.0;   // max(dual_slack, perp_slack)
  double dual_at_one = 0.0;
  double perp_at_one = 0.0;
  bool verified = false;

  // Both margins exceed their Lipschitz slack.
  bool claims_hold() const;
  // Grid minima of both transforms are >= 1 - tol (before slack).
  bool margins_nonnegative(double tol = 1e-9) const;
};

ConstructionResult build_g(const ConstructionParams& params);

/// Evaluates both transforms on a uniform grid of `grid_size` points in [0,1]
/// and records the minima, their locations and a finite-difference Lipschitz
/// slack (grid spacing times twice the steepest one-sided difference at the
/// minimum). Numerical evidence, not an enclosure.
ConstructionResult verify_claims(ConstructionResult result, const DimPair& dims, int grid_size,
                                 Exec exec = Exec::parallel);

struct ClaimMargins {
  double dual_margin = 0.0;
  double perp_margin = 0.0;
  double slack = 0.0;
  bool holds = false;
};

/// verify_claims for every k in 2..n-2 with the same g.
std::map<int, ClaimMargins> verify_all_m(const ConstructionResult& result, int n, int grid_size,
                                         Exec exec = Exec::parallel);

nlohmann::json to_json(const ConstructionResult& r);
nlohmann::json to_json(const ConstructionParams& p);

}  // namespace kbp::construct
