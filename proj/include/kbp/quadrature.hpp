#pragma once

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace kbp::quad {

// Gauss-Legendre rule on the reference interval [-1, 1].
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;    // ascending
  std::vector<double> weights;  // strictly positive, sum 2
};

inline constexpr int kMaxOrder = 1024;
inline constexpr std::array<int, 6> kAdaptiveSchedule = {32, 64, 128, 256, 512, 1024};
inline constexpr double kRelTol = 1e-12;

// Nodes by Newton iteration on the three-term Legendre recurrence. Rules are
// cached per order; the returned reference stays valid for the process
// lifetime. Throws ParameterError for order outside [1, kMaxOrder].
const QuadratureRule& gauss_legendre(int order);

// Fixed-order integral of f over [a, b] split at `breaks` (points outside
// (a, b) are ignored).
double integrate_fixed(const std::function<double(double)>& f, double a, double b, int order,
                       std::span<const double> breaks = {});

struct AdaptiveResult {
  double value = 0.0;
  int order = 0;  // order at which successive estimates agreed
};

// Doubles the per-panel order along kAdaptiveSchedule until successive
// estimates differ by <= kRelTol * max(1, |value|). Throws AccuracyError
// carrying the last estimate when order 1024 is reached without agreement.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  std::span<const double> breaks = {});

}  // namespace kbp::quad
