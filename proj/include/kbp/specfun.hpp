#pragma once

#include <map>
#include <utility>

#include <json.hpp>

namespace kbp {

// Ambient dimension n and class index k, with n >= 4 and 2 <= k <= n-2.
class DimPair {
 public:
  DimPair(int n, int k);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }

  friend bool operator==(const DimPair&, const DimPair&) = default;

 private:
  int n_;
  int k_;
};

namespace specfun {

/// ln Gamma(x) for x > 0. Lanczos approximation (g = 7, 9 terms).
double log_gamma(double x);

double log_beta(double a, double b);
double beta(double a, double b);

/// Regularized incomplete Beta I_x(a, b) by Lentz's continued fraction.
double reg_inc_beta(double x, double a, double b);

// Normalization constants of the revolution-reduced transforms. All are
// closed Beta expressions; `m` is the subspace dimension index.

/// c_m: makes the forward transform of the constant 1 equal to 1 (m >= 2).
double forward_constant(int m);

/// d_n: polar-integration normalization, d_n * int_0^1 (1-t^2)^((n-3)/2) dt = 1.
double polar_constant(int n);

/// e_{n,m}: normalizes the dual transform weight (2 <= m <= n-1).
double dual_constant(int n, int m);

/// d_{n,m}: ratio between the two sides of the revolution duality (1 <= m <= n-1).
double duality_constant(int n, int m);

/// b_{n,m}: density normalization of the angle to a random m-subspace (1 <= m <= n-1).
double bipolar_constant(int n, int m);

/// lambda(m, j): the forward transform maps t^j to lambda(m, j) s^j.
double monomial_multiplier(int m, int j);

struct ConstantsTable {
  int n = 0;
  int k = 0;
  std::map<int, double> c;                        // m -> c_m, m in 2..n-1
  double d_polar = 0.0;                           // d_n
  std::map<std::pair<int, int>, double> b;        // (n, m), m in 1..n-1
  std::map<std::pair<int, int>, double> d_dual;   // (n, m), m in 1..n-1
  std::map<std::pair<int, int>, double> e;        // (n, m), m in 2..n-1
  std::map<std::pair<int, int>, double> lambda;   // (m, j), m in {k, n-k}, j in 0..lambda_max_j

  static constexpr int lambda_max_j = 12;
};

ConstantsTable make_constants_table(const DimPair& dims);

nlohmann::json to_json(const ConstantsTable& table);

}  // namespace specfun
}  // namespace kbp
