#pragma once

#include <variant>
#include <vector>

#include <json.hpp>

#include "kbp/polynomial.hpp"

namespace kbp {

// Continuous functions on [0,1] in the reduced variable t = cos(angle).
namespace profiles {

struct Monomial {
  std::vector<double> coeffs;  // coeffs[j] multiplies t^j
};

struct Bernstein {
  int degree = 0;
  std::vector<double> coeffs;  // length degree + 1
  std::vector<double> log_binom;  // ln C(degree, j), filled by RadialProfile
};

// (gamma_star + 1) ((s - s0) / (2 eps))^2 - 1
struct ParabolaBump {
  double s0 = 0.5;
  double eps = 0.0625;
  double gamma_star = 1.0;
};

enum class Transition { cinf, quintic };

// -1 on [s0-eps, s0+eps], gamma_star outside [s0-2eps, s0+2eps], smooth
// monotone transition in between.
struct GluedBump {
  double s0 = 0.5;
  double eps = 0.0625;
  double gamma_star = 1.0;
  Transition transition = Transition::quintic;
};

// Natural cubic spline through (grid[i], values[i]); grid spans [0,1].
struct Sampled {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> second_derivs;  // filled by RadialProfile
};

}  // namespace profiles

class RadialProfile {
 public:
  using Variant = std::variant<profiles::Monomial, profiles::Bernstein, profiles::ParabolaBump,
                               profiles::GluedBump, profiles::Sampled>;

  static RadialProfile constant(double c);
  static RadialProfile monomial(std::vector<double> coeffs);
  static RadialProfile bernstein(std::vector<double> coeffs);
  static RadialProfile parabola_bump(double s0, double eps, double gamma_star);
  static RadialProfile glued_bump(double s0, double eps, double gamma_star,
                                  profiles::Transition transition = profiles::Transition::quintic);
  static RadialProfile sampled(std::vector<double> grid, std::vector<double> values);

  const Variant& variant() const { return v_; }
  const char* variant_name() const;

  // Domain-checked evaluation; throws DomainError outside [0,1].
  double evaluate(double t) const;
  double operator()(double t) const { return evaluate(t); }

  // Interior points of [0,1] where the profile is only finitely smooth.
  // Quadrature splits panels there.
  std::vector<double> breakpoints() const;

  // Upper bound for sup |d/dt profile| over [0,1].
  double sup_abs_derivative() const;

 private:
  explicit RadialProfile(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

RadialProfile bernstein_basis(int degree, int j);

// Exact monomial expansion of Monomial, Bernstein and ParabolaBump profiles.
// Throws UnsupportedError for GluedBump and Sampled.
PolynomialCoeffs to_monomial(const RadialProfile& profile);

nlohmann::json to_json(const RadialProfile& profile);
RadialProfile profile_from_json(const nlohmann::json& j);

}  // namespace kbp
