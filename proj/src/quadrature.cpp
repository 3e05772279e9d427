#include "kbp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "kbp/errors.hpp"

namespace kbp::quad {
namespace {

QuadratureRule compute_rule(int order) {
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
  rule.weights.assign(static_cast<std::size_t>(order), 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // i-th largest root, Tricomi-style initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (order == 1) p0 = 1.0;
      // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) <= 1e-16 * std::max(1.0, std::fabs(x))) break;
    }
    // Re-evaluate the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    if (order == 1) p0 = 1.0;
    dp = order * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto hi = static_cast<std::size_t>(order - 1 - i);
    const auto lo = static_cast<std::size_t>(i);
    rule.nodes[hi] = x;
    rule.nodes[lo] = -x;
    rule.weights[hi] = w;
    rule.weights[lo] = w;
  }
  if (order % 2 == 1) rule.nodes[static_cast<std::size_t>(order / 2)] = 0.0;
  return rule;
}

struct RuleCache {
  std::array<std::once_flag, kMaxOrder + 1> once;
  std::array<QuadratureRule, kMaxOrder + 1> rules;
};

RuleCache& cache() {
  static RuleCache c;
  return c;
}

std::vector<double> panel_edges(double a, double b, std::span<const double> breaks) {
  std::vector<double> edges{a};
  for (double x : breaks) {
    if (x > a && x < b) edges.push_back(x);
  }
  std::sort(edges.begin() + 1, edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges.push_back(b);
  return edges;
}

double apply_rule(const std::function<double(double)>& f, const std::vector<double>& edges,
                  const QuadratureRule& rule) {
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double mid = 0.5 * (edges[p] + edges[p + 1]);
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    total += half * sum;
  }
  return total;
}

}  // namespace

const QuadratureRule& gauss_legendre(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw ParameterError("gauss_legendre: order must be in [1, 1024], got " + std::to_string(order));
  }
  auto& c = cache();
  std::call_once(c.once[order], [&] { c.rules[order] = compute_rule(order); });
  return c.rules[order];
}

double integrate_fixed(const std::function<double(double)>& f, double a, double b, int order,
                       std::span<const double> breaks) {
  return apply_rule(f, panel_edges(a, b, breaks), gauss_legendre(order));
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  std::span<const double> breaks) {
  const auto edges = panel_edges(a, b, breaks);
  double previous = apply_rule(f, edges, gauss_legendre(kAdaptiveSchedule.front()));
  for (std::size_t s = 1; s < kAdaptiveSchedule.size(); ++s) {
    const double current = apply_rule(f, edges, gauss_legendre(kAdaptiveSchedule[s]));
    if (std::fabs(current - previous) <= kRelTol * std::max(1.0, std::fabs(current))) {
      return {current, kAdaptiveSchedule[s]};
    }
    previous = current;
  }
  throw AccuracyError("adaptive Gauss-Legendre did not converge at order 1024", previous);
}

}  // namespace kbp::quad
