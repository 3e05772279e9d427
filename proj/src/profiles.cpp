#include "kbp/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kbp/errors.hpp"

namespace kbp {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr int kDerivativeGrid = 4096;

std::vector<double> log_binomials(int n) {
  std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
  for (int j = 0; j < n / 2 + 1; ++j) {
    if (j > 0) out[j] = out[j - 1] + std::log(static_cast<double>(n - j + 1) / j);
    out[n - j] = out[j];
  }
  return out;
}

double bernstein_sum(const std::vector<double>& coeffs, const std::vector<double>& log_binom,
                     double t) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (t <= 0.0) return coeffs.front();
  if (t >= 1.0) return coeffs.back();
  const double ls = std::log(t);
  const double l1 = std::log1p(-t);
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double c = coeffs[j];
    if (c == 0.0) continue;
    sum += c * std::exp(log_binom[j] + j * ls + (n - j) * l1);
  }
  return sum;
}

double horner(const std::vector<double>& a, double t) {
  double acc = 0.0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double quintic_step(double x) { return x * x * x * (10.0 + x * (-15.0 + 6.0 * x)); }

// exp(-1/x) partition of unity: psi(x) / (psi(x) + psi(1-x)).
double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 1.0 / (1.0 + std::exp(1.0 / x - 1.0 / (1.0 - x)));
}
double smooth_step_slope(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  const double s = smooth_step(x);
  return s * (1.0 - s) * (1.0 / (x * x) + 1.0 / ((1.0 - x) * (1.0 - x)));
}

double glued_value(const profiles::GluedBump& g, double t) {
  const double d = std::fabs(t - g.s0);
  if (d <= g.eps) return -1.0;
  if (d >= 2.0 * g.eps) return g.gamma_star;
  const double x = (d - g.eps) / g.eps;
  const double step =
      g.transition == profiles::Transition::quintic ? quintic_step(x) : smooth_step(x);
  return -1.0 + (g.gamma_star + 1.0) * step;
}

double spline_value(const profiles::Sampled& s, double t) {
  const auto& x = s.grid;
  const auto& y = s.values;
  const auto& m = s.second_derivs;
  std::size_t i = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), t) - x.begin());
  i = std::clamp<std::size_t>(i, 1, x.size() - 1) - 1;
  const double h = x[i + 1] - x[i];
  const double a = (x[i + 1] - t) / h;
  const double b = 1.0 - a;
  return a * y[i] + b * y[i + 1] + ((a * a * a - a) * m[i] + (b * b * b - b) * m[i + 1]) * h * h / 6.0;
}

std::vector<double> natural_spline_second_derivs(const std::vector<double>& x,
                                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> m(n, 0.0);
  if (n < 3) return m;
  // Thomas algorithm on the interior equations, m[0] = m[n-1] = 0.
  std::vector<double> c(n, 0.0);
  std::vector<double> d(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double h0 = x[i] - x[i - 1];
    const double h1 = x[i + 1] - x[i];
    const double diag = 2.0 * (h0 + h1);
    const double rhs = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
    const double denom = diag - h0 * c[i - 1];
    c[i] = h1 / denom;
    d[i] = (rhs - h0 * d[i - 1]) / denom;
  }
  for (std::size_t i = n - 2; i >= 1; --i) {
    m[i] = d[i] - c[i] * m[i + 1];
  }
  return m;
}

double spline_sup_slope(const profiles::Sampled& s) {
  const auto& x = s.grid;
  const auto& y = s.values;
  const auto& m = s.second_derivs;
  double best = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double h = x[i + 1] - x[i];
    const double chord = (y[i + 1] - y[i]) / h;
    auto slope = [&](double a) {
      const double b = 1.0 - a;
      return chord - h / 6.0 * ((3.0 * a * a - 1.0) * m[i] - (3.0 * b * b - 1.0) * m[i + 1]);
    };
    best = std::max({best, std::fabs(slope(0.0)), std::fabs(slope(1.0))});
    const double denom = m[i + 1] - m[i];
    if (denom != 0.0) {
      const double a = m[i + 1] / denom;
      if (a > 0.0 && a < 1.0) best = std::max(best, std::fabs(slope(a)));
    }
  }
  return best;
}

template <class F>
double grid_max_abs(F&& f) {
  double best = 0.0;
  for (int i = 0; i < kDerivativeGrid; ++i) {
    best = std::max(best, std::fabs(f(static_cast<double>(i) / (kDerivativeGrid - 1))));
  }
  return best;
}

void check_bump(double s0, double eps, double gamma_star) {
  if (!std::isfinite(s0) || !std::isfinite(eps) || !std::isfinite(gamma_star) || eps <= 0.0) {
    throw ParameterError("bump profile requires finite s0, gamma_star and eps > 0");
  }
}

}  // namespace

RadialProfile RadialProfile::constant(double c) { return monomial({c}); }

RadialProfile RadialProfile::monomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw ParameterError("monomial coefficients must be finite");
  }
  return RadialProfile(profiles::Monomial{std::move(coeffs)});
}

RadialProfile RadialProfile::bernstein(std::vector<double> coeffs) {
  if (coeffs.empty()) throw ParameterError("Bernstein profile needs at least one coefficient");
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw ParameterError("Bernstein coefficients must be finite");
  }
  const int n = static_cast<int>(coeffs.size()) - 1;
  return RadialProfile(profiles::Bernstein{n, std::move(coeffs), log_binomials(n)});
}

RadialProfile RadialProfile::parabola_bump(double s0, double eps, double gamma_star) {
  check_bump(s0, eps, gamma_star);
  return RadialProfile(profiles::ParabolaBump{s0, eps, gamma_star});
}

RadialProfile RadialProfile::glued_bump(double s0, double eps, double gamma_star,
                                        profiles::Transition transition) {
  check_bump(s0, eps, gamma_star);
  if (gamma_star < -1.0) throw ParameterError("glued bump requires gamma_star >= -1");
  return RadialProfile(profiles::GluedBump{s0, eps, gamma_star, transition});
}

RadialProfile RadialProfile::sampled(std::vector<double> grid, std::vector<double> values) {
  if (grid.size() < 2 || grid.size() != values.size()) {
    throw ParameterError("sampled profile needs >= 2 nodes and matching value count");
  }
  if (grid.front() != 0.0 || grid.back() != 1.0) {
    throw ParameterError("sampled profile grid must start at 0 and end at 1");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(values[i])) throw ParameterError("sampled values must be finite");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ParameterError("sampled grid must be strictly increasing");
    }
  }
  auto m = natural_spline_second_derivs(grid, values);
  return RadialProfile(profiles::Sampled{std::move(grid), std::move(values), std::move(m)});
}

const char* RadialProfile::variant_name() const {
  return std::visit(Overloaded{[](const profiles::Monomial&) { return "monomial"; },
                               [](const profiles::Bernstein&) { return "bernstein"; },
                               [](const profiles::ParabolaBump&) { return "parabola_bump"; },
                               [](const profiles::GluedBump&) { return "glued_bump"; },
                               [](const profiles::Sampled&) { return "sampled"; }},
                    v_);
}

double RadialProfile::evaluate(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("profile evaluation requires t in [0,1], got " + std::to_string(t));
  }
  return std::visit(
      Overloaded{
          [t](const profiles::Monomial& p) { return horner(p.coeffs, t); },
          [t](const profiles::Bernstein& p) { return bernstein_sum(p.coeffs, p.log_binom, t); },
          [t](const profiles::ParabolaBump& p) {
            const double u = (t - p.s0) / (2.0 * p.eps);
            return (p.gamma_star + 1.0) * u * u - 1.0;
          },
          [t](const profiles::GluedBump& p) { return glued_value(p, t); },
          [t](const profiles::Sampled& p) { return spline_value(p, t); }},
      v_);
}

std::vector<double> RadialProfile::breakpoints() const {
  std::vector<double> out;
  if (const auto* g = std::get_if<profiles::GluedBump>(&v_)) {
    for (double b : {g->s0 - 2.0 * g->eps, g->s0 - g->eps, g->s0 + g->eps, g->s0 + 2.0 * g->eps}) {
      if (b > 0.0 && b < 1.0) out.push_back(b);
    }
  } else if (const auto* s = std::get_if<profiles::Sampled>(&v_)) {
    out.assign(s->grid.begin() + 1, s->grid.end() - 1);
  }
  return out;
}

double RadialProfile::sup_abs_derivative() const {
  return std::visit(
      Overloaded{
          [](const profiles::Monomial& p) {
            std::vector<double> d;
            double coeff_bound = 0.0;
            for (std::size_t j = 1; j < p.coeffs.size(); ++j) {
              d.push_back(static_cast<double>(j) * p.coeffs[j]);
              coeff_bound += std::fabs(d.back());
            }
            if (d.empty()) return 0.0;
            const double sampled = 1.01 * grid_max_abs([&](double t) { return horner(d, t); });
            return std::min(coeff_bound, sampled);
          },
          [](const profiles::Bernstein& p) {
            if (p.degree == 0) return 0.0;
            std::vector<double> diff(static_cast<std::size_t>(p.degree));
            double max_diff = 0.0;
            for (int j = 0; j < p.degree; ++j) {
              diff[j] = p.degree * (p.coeffs[j + 1] - p.coeffs[j]);
              max_diff = std::max(max_diff, std::fabs(diff[j]));
            }
            const auto lb = log_binomials(p.degree - 1);
            const double sampled =
                1.01 * grid_max_abs([&](double t) { return bernstein_sum(diff, lb, t); });
            return std::min(max_diff, sampled);
          },
          [](const profiles::ParabolaBump& p) {
            return (p.gamma_star + 1.0) * std::max(p.s0, 1.0 - p.s0) / (2.0 * p.eps * p.eps);
          },
          [](const profiles::GluedBump& p) {
            const double step_slope =
                p.transition == profiles::Transition::quintic
                    ? 1.875
                    : 1.01 * grid_max_abs([](double x) { return smooth_step_slope(x); });
            return std::fabs(p.gamma_star + 1.0) * step_slope / p.eps;
          },
          [](const profiles::Sampled& p) { return spline_sup_slope(p); }},
      v_);
}

RadialProfile bernstein_basis(int degree, int j) {
  if (degree < 0 || j < 0 || j > degree) {
    throw ParameterError("bernstein_basis: need 0 <= j <= degree");
  }
  std::vector<double> coeffs(static_cast<std::size_t>(degree) + 1, 0.0);
  coeffs[static_cast<std::size_t>(j)] = 1.0;
  return RadialProfile::bernstein(std::move(coeffs));
}

PolynomialCoeffs to_monomial(const RadialProfile& profile) {
  return std::visit(
      Overloaded{
          [](const profiles::Monomial& p) { return PolynomialCoeffs::from_doubles(p.coeffs); },
          [](const profiles::Bernstein& p) {
            const int n = p.degree;
            double cmax = 0.0;
            for (double c : p.coeffs) cmax = std::max(cmax, std::fabs(c));
            // sum_i |a_i| <= max|c| 3^n; keep 64 guard bits beyond double.
            const auto bits = static_cast<mpfr_prec_t>(
                117 + std::ceil(1.5849625007211562 * n) + std::max(0.0, std::ceil(std::log2(cmax + 1.0))));
            // a_i = C(n,i) sum_{j<=i} c_j C(i,j) (-1)^(i-j)
            std::vector<BigFloat> out;
            out.reserve(p.coeffs.size());
            BigFloat binom(bits);
            BigFloat term(bits);
            for (int i = 0; i <= n; ++i) {
              BigFloat acc(bits);
              mpfr_set_ui(binom.get(), 1, MPFR_RNDN);  // C(i, 0)
              for (int j = 0; j <= i; ++j) {
                if (p.coeffs[j] != 0.0) {
                  mpfr_mul_d(term.get(), binom.get(), p.coeffs[j], MPFR_RNDN);
                  if ((i - j) % 2 == 0) {
                    acc += term;
                  } else {
                    acc -= term;
                  }
                }
                binom.mul_si(i - j).div_si(j + 1);
              }
              acc *= BigFloat::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i), bits);
              out.push_back(std::move(acc));
            }
            return PolynomialCoeffs(std::move(out));
          },
          [](const profiles::ParabolaBump& p) {
            constexpr mpfr_prec_t bits = 256;
            // A (s - s0)^2 - 1 with A = (gamma_star + 1) / (4 eps^2)
            BigFloat a(p.gamma_star + 1.0, bits);
            BigFloat e2(p.eps, bits);
            e2 *= e2;
            e2 *= 4.0;
            a /= e2;
            BigFloat s0(p.s0, bits);
            BigFloat c2 = a;
            BigFloat c1 = a;
            c1 *= s0;
            c1 *= -2.0;
            BigFloat c0 = a;
            c0 *= s0;
            c0 *= s0;
            c0 -= BigFloat(1.0, bits);
            std::vector<BigFloat> out;
            out.push_back(std::move(c0));
            out.push_back(std::move(c1));
            out.push_back(std::move(c2));
            return PolynomialCoeffs(std::move(out));
          },
          [](const profiles::GluedBump&) -> PolynomialCoeffs {
            throw UnsupportedError("to_monomial: glued bump is not a polynomial");
          },
          [](const profiles::Sampled&) -> PolynomialCoeffs {
            throw UnsupportedError("to_monomial: sampled profile is not a polynomial");
          }},
      profile.variant());
}

nlohmann::json to_json(const RadialProfile& profile) {
  nlohmann::json out = std::visit(
      Overloaded{
          [](const profiles::Monomial& p) { return nlohmann::json{{"coeffs", p.coeffs}}; },
          [](const profiles::Bernstein& p) {
            return nlohmann::json{{"degree", p.degree}, {"coeffs", p.coeffs}};
          },
          [](const profiles::ParabolaBump& p) {
            return nlohmann::json{{"s0", p.s0}, {"eps", p.eps}, {"gamma_star", p.gamma_star}};
          },
          [](const profiles::GluedBump& p) {
            return nlohmann::json{
                {"s0", p.s0},
                {"eps", p.eps},
                {"gamma_star", p.gamma_star},
                {"transition", p.transition == profiles::Transition::cinf ? "cinf" : "quintic"}};
          },
          [](const profiles::Sampled& p) {
            return nlohmann::json{{"grid", p.grid}, {"values", p.values}};
          }},
      profile.variant());
  out["variant"] = profile.variant_name();
  return out;
}

RadialProfile profile_from_json(const nlohmann::json& j) {
  const std::string name = j.at("variant").get<std::string>();
  if (name == "monomial") return RadialProfile::monomial(j.at("coeffs").get<std::vector<double>>());
  if (name == "bernstein") {
    auto coeffs = j.at("coeffs").get<std::vector<double>>();
    if (j.contains("degree") && j.at("degree").get<int>() + 1 != static_cast<int>(coeffs.size())) {
      throw ParameterError("bernstein profile: degree does not match coefficient count");
    }
    return RadialProfile::bernstein(std::move(coeffs));
  }
  if (name == "parabola_bump") {
    return RadialProfile::parabola_bump(j.at("s0").get<double>(), j.at("eps").get<double>(),
                                        j.at("gamma_star").get<double>());
  }
  if (name == "glued_bump") {
    const std::string tr = j.value("transition", "quintic");
    if (tr != "quintic" && tr != "cinf") throw ParameterError("unknown transition: " + tr);
    return RadialProfile::glued_bump(
        j.at("s0").get<double>(), j.at("eps").get<double>(), j.at("gamma_star").get<double>(),
        tr == "cinf" ? profiles::Transition::cinf : profiles::Transition::quintic);
  }
  if (name == "sampled") {
    return RadialProfile::sampled(j.at("grid").get<std::vector<double>>(),
                                  j.at("values").get<std::vector<double>>());
  }
  throw ParameterError("unknown profile variant: " + name);
}

}  // namespace kbp
