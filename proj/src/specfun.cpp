#include "kbp/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "kbp/errors.hpp"

namespace kbp {

DimPair::DimPair(int n, int k) : n_(n), k_(k) {
  if (n < 4 || k < 2 || k > n - 2) {
    throw ParameterError("dimension pair requires n >= 4 and 2 <= k <= n-2, got n=" +
                         std::to_string(n) + " k=" + std::to_string(k));
  }
}

namespace specfun {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw DomainError(std::string(what) + " requires a finite positive argument");
  }
}

// Continued fraction for I_x(a,b), valid (fast) for x < (a+1)/(a+b+2).
double inc_beta_fraction(double x, double a, double b) {
  constexpr int kMaxIter = 500;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h;
  }
  throw AccuracyError("incomplete beta continued fraction did not converge", h);
}

void check_index(bool ok, const char* op, int n, int m) {
  if (!ok) {
    throw UnsupportedError(std::string(op) + ": unsupported index pair n=" + std::to_string(n) +
                           " m=" + std::to_string(m));
  }
}

}  // namespace

double log_gamma(double x) {
  require_positive(x, "log_gamma");
  if (x < 0.5) {
    // Gamma(x) = Gamma(x+1) / x
    return log_gamma(x + 1.0) - std::log(x);
  }
  const double z = x - 1.0;
  double sum = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i) {
    sum += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  }
  const double t = z + kLanczosG + 0.5;
  // (z + 1/2) ln t - t, regrouped so that the large terms cancel less.
  const double half_log_two_pi = 0.91893853320467274178;
  return half_log_two_pi + (z + 0.5) * (std::log(t) - 1.0) - kLanczosG + std::log(sum);
}

double log_beta(double a, double b) {
  require_positive(a, "beta");
  require_positive(b, "beta");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

double beta(double a, double b) { return std::exp(log_beta(a, b)); }

double reg_inc_beta(double x, double a, double b) {
  require_positive(a, "reg_inc_beta");
  require_positive(b, "reg_inc_beta");
  if (!(x >= 0.0 && x <= 1.0)) {
    throw DomainError("reg_inc_beta requires x in [0,1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  if (x > (a + 1.0) / (a + b + 2.0)) {
    return 1.0 - reg_inc_beta(1.0 - x, b, a);
  }
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b)) / a;
  return front * inc_beta_fraction(x, a, b);
}

double forward_constant(int m) {
  if (m < 2) {
    throw UnsupportedError("forward_constant: m >= 2 required (m = 1 is a point mass)");
  }
  return 2.0 / beta(0.5, 0.5 * (m - 1));
}

double polar_constant(int n) {
  if (n < 2) throw UnsupportedError("polar_constant: n >= 2 required");
  return 2.0 / beta(0.5, 0.5 * (n - 1));
}

double dual_constant(int n, int m) {
  check_index(m >= 2 && m <= n - 1, "dual_constant", n, m);
  return 2.0 / beta(0.5 * (n - m), 0.5 * (m - 1));
}

double duality_constant(int n, int m) {
  check_index(m >= 1 && m <= n - 1, "duality_constant", n, m);
  return std::exp(log_beta(0.5, 0.5 * (n - 1)) - log_beta(0.5 * (n - m), 0.5 * m));
}

double bipolar_constant(int n, int m) {
  check_index(m >= 1 && m <= n - 1, "bipolar_constant", n, m);
  return 2.0 / beta(0.5 * (n - m), 0.5 * m);
}

double monomial_multiplier(int m, int j) {
  if (m < 2 || j < 0) {
    throw UnsupportedError("monomial_multiplier: requires m >= 2 and j >= 0");
  }
  if (j == 0) return 1.0;
  const double a = 0.5 * (m - 1);
  return std::exp(log_beta(0.5 * (j + 1), a) - log_beta(0.5, a));
}

ConstantsTable make_constants_table(const DimPair& dims) {
  const int n = dims.n();
  ConstantsTable table;
  table.n = n;
  table.k = dims.k();
  table.d_polar = polar_constant(n);
  for (int m = 1; m <= n - 1; ++m) {
    table.b[{n, m}] = bipolar_constant(n, m);
    table.d_dual[{n, m}] = duality_constant(n, m);
    if (m >= 2) {
      table.c[m] = forward_constant(m);
      table.e[{n, m}] = dual_constant(n, m);
    }
  }
  for (int m : {dims.k(), n - dims.k()}) {
    for (int j = 0; j <= ConstantsTable::lambda_max_j; ++j) {
      table.lambda[{m, j}] = monomial_multiplier(m, j);
    }
  }
  return table;
}

nlohmann::json to_json(const ConstantsTable& table) {
  auto pair_key = [](const std::pair<int, int>& p) {
    return std::to_string(p.first) + "," + std::to_string(p.second);
  };
  nlohmann::json out;
  out["n"] = table.n;
  out["k"] = table.k;
  out["d_polar"] = table.d_polar;
  nlohmann::json c = nlohmann::json::object();
  for (const auto& [m, v] : table.c) c[std::to_string(m)] = v;
  out["c"] = c;
  for (const auto& [name, map] :
       {std::pair{"b", &table.b}, std::pair{"d_dual", &table.d_dual}, std::pair{"e", &table.e},
        std::pair{"lambda", &table.lambda}}) {
    nlohmann::json obj = nlohmann::json::object();
    for (const auto& [key, v] : *map) obj[pair_key(key)] = v;
    out[name] = obj;
  }
  return out;
}

}  // namespace specfun
}  // namespace kbp
