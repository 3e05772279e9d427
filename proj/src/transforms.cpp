#include "kbp/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kbp/errors.hpp"
#include "kbp/quadrature.hpp"

namespace kbp::transforms {
namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

double ipow(double x, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

void check_point(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError(std::string(what) + " requires an argument in [0,1]");
  }
}

// Angles theta in (0, pi/2) where arg(theta) crosses a profile breakpoint.
template <class Inverse>
std::vector<double> angle_breaks(const RadialProfile& p, Inverse&& inverse) {
  std::vector<double> out;
  for (double b : p.breakpoints()) {
    const double theta = inverse(b);
    if (std::isfinite(theta) && theta > 0.0 && theta < kHalfPi) out.push_back(theta);
  }
  return out;
}

std::vector<double> asin_breaks(const RadialProfile& p) {
  return angle_breaks(p, [](double b) { return std::asin(b); });
}

// Kinks of either factor of a product integrand.
std::vector<double> asin_breaks(const RadialProfile& a, const RadialProfile& b) {
  auto breaks = asin_breaks(a);
  const auto more = asin_breaks(b);
  breaks.insert(breaks.end(), more.begin(), more.end());
  return breaks;
}

}  // namespace

TransformSpec::TransformSpec(int n, int m) : n_(n), m_(m) {
  if (m < 2 || m > n - 1) {
    throw ParameterError("transform index requires 2 <= m <= n-1, got n=" + std::to_string(n) +
                         " m=" + std::to_string(m));
  }
}

double forward(const TransformSpec& spec, const RadialProfile& f, double s) {
  check_point(s, "forward");
  if (s == 0.0) return f.evaluate(0.0);
  const int m = spec.m();
  // t = cos(theta): (1-t^2)^((m-3)/2) dt = sin^(m-2)(theta) d theta
  auto integrand = [&](double theta) {
    return f.evaluate(clamp01(s * std::cos(theta))) * ipow(std::sin(theta), m - 2);
  };
  const auto breaks = angle_breaks(f, [s](double b) { return b < s ? std::acos(b / s) : NAN; });
  return specfun::forward_constant(m) * quad::integrate_adaptive(integrand, 0.0, kHalfPi, breaks).value;
}

double dual(const TransformSpec& spec, const RadialProfile& g, double t) {
  check_point(t, "dual");
  if (t == 1.0) return g.evaluate(1.0);
  const int n = spec.n();
  const int m = spec.m();
  const double one_minus_t2 = 1.0 - t * t;
  // s = sin(theta): (1-s^2)^((m-3)/2) s^(n-m-1) ds = cos^(m-2) sin^(n-m-1) d theta
  auto integrand = [&](double theta) {
    const double st = std::sin(theta);
    const double arg = std::sqrt(clamp01(1.0 - st * st * one_minus_t2));
    return g.evaluate(clamp01(arg)) * ipow(std::cos(theta), m - 2) * ipow(st, n - m - 1);
  };
  const auto breaks = angle_breaks(g, [&](double b) {
    return b > t ? std::asin(std::sqrt((1.0 - b * b) / one_minus_t2)) : NAN;
  });
  return specfun::dual_constant(n, m) * quad::integrate_adaptive(integrand, 0.0, kHalfPi, breaks).value;
}

double perp_dual(const TransformSpec& spec, const RadialProfile& g, double t) {
  check_point(t, "perp_dual");
  if (t == 1.0) return g.evaluate(0.0);
  const int n = spec.n();
  const int m = spec.m();
  const double r = std::sqrt(1.0 - t * t);
  auto integrand = [&](double theta) {
    const double st = std::sin(theta);
    return g.evaluate(clamp01(st * r)) * ipow(std::cos(theta), m - 2) * ipow(st, n - m - 1);
  };
  const auto breaks = angle_breaks(g, [r](double b) { return b < r ? std::asin(b / r) : NAN; });
  return specfun::dual_constant(n, m) * quad::integrate_adaptive(integrand, 0.0, kHalfPi, breaks).value;
}

double pairing(const DimPair& dims, const RadialProfile& g, const RadialProfile& p) {
  const int n = dims.n();
  const int k = dims.k();
  // s = sin(theta): (1-s^2)^((k-2)/2) s^(n-k-1) ds = cos^(k-1) sin^(n-k-1) d theta
  auto integrand = [&](double theta) {
    const double s = clamp01(std::sin(theta));
    return g.evaluate(s) * p.evaluate(s) * ipow(std::cos(theta), k - 1) * ipow(s, n - k - 1);
  };
  return specfun::bipolar_constant(n, n - k) *
         quad::integrate_adaptive(integrand, 0.0, kHalfPi, asin_breaks(g, p)).value;
}

DualityCheck duality_check(int n, int m, const RadialProfile& f, const RadialProfile& g) {
  const TransformSpec spec(n, m);
  // t = sin(phi): (1-t^2)^((n-3)/2) dt = cos^(n-2)(phi) d phi
  auto lhs_integrand = [&](double phi) {
    const double t = clamp01(std::sin(phi));
    return dual(spec, g, t) * f.evaluate(t) * ipow(std::cos(phi), n - 2);
  };
  // s = sin(theta): (1-s^2)^((n-m-2)/2) s^(m-1) ds = cos^(n-m-1) sin^(m-1) d theta
  auto rhs_integrand = [&](double theta) {
    const double s = clamp01(std::sin(theta));
    return g.evaluate(s) * forward(spec, f, s) * ipow(std::cos(theta), n - m - 1) * ipow(s, m - 1);
  };
  // R~*_m(g)(t) inherits g's kinks at t = b (the s = 1 end of its integral),
  // and R~_m(f)(s) inherits f's at s = b, so both sides split at both sets.
  DualityCheck out;
  out.lhs = quad::integrate_adaptive(lhs_integrand, 0.0, kHalfPi, asin_breaks(f, g)).value;
  out.rhs = specfun::duality_constant(n, m) *
            quad::integrate_adaptive(rhs_integrand, 0.0, kHalfPi, asin_breaks(f, g)).value;
  out.relative_error = std::fabs(out.lhs - out.rhs) / std::max(1.0, std::fabs(out.lhs));
  return out;
}

namespace {

template <class Point>
std::vector<double> grid_kernel(std::span<const double> xs, Exec exec, Point&& point) {
  std::vector<double> out(xs.size());
  for_each_index(xs.size(), exec, [&](std::size_t i) { out[i] = point(xs[i]); });
  return out;
}

}  // namespace

std::vector<double> forward_grid(const TransformSpec& spec, const RadialProfile& f,
                                 std::span<const double> s, Exec exec) {
  return grid_kernel(s, exec, [&](double x) { return forward(spec, f, x); });
}

std::vector<double> dual_grid(const TransformSpec& spec, const RadialProfile& g,
                              std::span<const double> t, Exec exec) {
  return grid_kernel(t, exec, [&](double x) { return dual(spec, g, x); });
}

std::vector<double> perp_dual_grid(const TransformSpec& spec, const RadialProfile& g,
                                   std::span<const double> t, Exec exec) {
  return grid_kernel(t, exec, [&](double x) { return perp_dual(spec, g, x); });
}

std::vector<double> uniform_grid(int size) {
  if (size < 2) throw ParameterError("uniform grid needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) out[i] = static_cast<double>(i) / (size - 1);
  out.back() = 1.0;
  return out;
}

}  // namespace kbp::transforms
