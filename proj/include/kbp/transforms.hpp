#pragma once

#include <span>
#include <vector>

#include "kbp/parallel.hpp"
#include "kbp/profiles.hpp"
#include "kbp/specfun.hpp"

// Revolution-reduced spherical Radon transform R_m, its dual R*_m, the dual of
// (perp o R_m), and the Grassmannian pairing, all as one-dimensional integrals
// over [0,1]. Every integral is taken in an angle variable so that the
// Beta-type weights (1-x^2)^((m-3)/2) become powers of sin/cos and
// Gauss-Legendre converges spectrally even for m = 2.
namespace kbp::transforms {

// Ambient dimension n and transform index m, 2 <= m <= n-1.
class TransformSpec {
 public:
  TransformSpec(int n, int m);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }

 private:
  int n_;
  int m_;
};

/// R~_m(f)(s) = c_m int_0^1 f(s t) (1-t^2)^((m-3)/2) dt.
double forward(const TransformSpec& spec, const RadialProfile& f, double s);

/// R~*_m(g)(t) = e_{n,m} int_0^1 g(sqrt(1-s^2(1-t^2))) (1-s^2)^((m-3)/2) s^(n-m-1) ds.
double dual(const TransformSpec& spec, const RadialProfile& g, double t);

/// (I o R~_m)*(g)(t) = e_{n,m} int_0^1 g(s sqrt(1-t^2)) (1-s^2)^((m-3)/2) s^(n-m-1) ds.
double perp_dual(const TransformSpec& spec, const RadialProfile& g, double t);

/// Revolution form of int_{G(n,n-k)} G(E) R_{n-k}(H)(E) d eta_{n,n-k}(E), with p
/// standing for R~_{n-k}(h):
///   b_{n,n-k} int_0^1 g(s) p(s) (1-s^2)^((k-2)/2) s^(n-k-1) ds.
/// Normalized so that pairing(1, 1) = 1.
double pairing(const DimPair& dims, const RadialProfile& g, const RadialProfile& p);

struct DualityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double relative_error = 0.0;
};

/// Both sides of
///   int_0^1 R~*_m(g)(t) f(t) (1-t^2)^((n-3)/2) dt
///     = d_{n,m} int_0^1 g(s) R~_m(f)(s) (1-s^2)^((n-m-2)/2) s^(m-1) ds.
DualityCheck duality_check(int n, int m, const RadialProfile& f, const RadialProfile& g);

// Grid kernels. Each point is an independent adaptive integral.
std::vector<double> forward_grid(const TransformSpec& spec, const RadialProfile& f,
                                 std::span<const double> s, Exec exec = Exec::parallel);
std::vector<double> dual_grid(const TransformSpec& spec, const RadialProfile& g,
                              std::span<const double> t, Exec exec = Exec::parallel);
std::vector<double> perp_dual_grid(const TransformSpec& spec, const RadialProfile& g,
                                   std::span<const double> t, Exec exec = Exec::parallel);

std::vector<double> uniform_grid(int size);

}  // namespace kbp::transforms
