#include "kbp/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "kbp/errors.hpp"
#include "kbp/transforms.hpp"

namespace kbp::certify {

std::vector<double> moment_scan(const DimPair& dims, const RadialProfile& g, int degree, Exec exec) {
  if (degree < 1) throw ParameterError("moment_scan requires degree >= 1");
  std::vector<double> moments(static_cast<std::size_t>(degree) + 1);
  for_each_index(moments.size(), exec, [&](std::size_t j) {
    moments[j] = transforms::pairing(dims, g, bernstein_basis(degree, static_cast<int>(j)));
  });
  return moments;
}

std::vector<BigFloat> monomial_multipliers(int m, int count, mpfr_prec_t bits) {
  if (m < 2) throw UnsupportedError("monomial_multipliers: m >= 2 required");
  std::vector<BigFloat> out;
  if (count <= 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  out.emplace_back(1.0, bits);
  if (count == 1) return out;

  BigFloat first(bits);
  if (m % 2 == 1) {
    // a = (m-1)/2 integer: lambda(m,1) = C(2a, a) / 4^a
    const int a = (m - 1) / 2;
    first = BigFloat::binomial(static_cast<unsigned long>(2 * a), static_cast<unsigned long>(a), bits);
    mpfr_div_2ui(first.get(), first.get(), static_cast<unsigned long>(2 * a), MPFR_RNDN);
  } else {
    // b = (m-2)/2: lambda(m,1) = 2 * 4^b / ((2b+1) pi C(2b, b))
    const int b = (m - 2) / 2;
    mpfr_set_ui(first.get(), 2, MPFR_RNDN);
    mpfr_mul_2ui(first.get(), first.get(), static_cast<unsigned long>(2 * b), MPFR_RNDN);
    first.div_si(2 * b + 1);
    first /= BigFloat::pi(bits);
    first /= BigFloat::binomial(static_cast<unsigned long>(2 * b), static_cast<unsigned long>(b), bits);
  }
  out.push_back(first);
  for (int j = 2; j < count; ++j) {
    BigFloat next = out[static_cast<std::size_t>(j - 2)];
    next.mul_si(j - 1).div_si(j - 2 + m);
    out.push_back(std::move(next));
  }
  return out;
}

PolynomialCoeffs preimage(const PolynomialCoeffs& p, int m) {
  const mpfr_prec_t bits = p.precision() + 64;
  const auto lambda = monomial_multipliers(m, p.degree() + 1, bits);
  std::vector<BigFloat> q;
  q.reserve(lambda.size());
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    BigFloat v(bits);
    mpfr_set(v.get(), p.coeffs()[j].get(), MPFR_RNDN);
    v /= lambda[j];
    q.push_back(std::move(v));
  }
  return PolynomialCoeffs(std::move(q));
}

double roundtrip_error(const PolynomialCoeffs& q, const RadialProfile& p, int m, int samples,
                       std::uint64_t seed) {
  const auto q_profile = RadialProfile::bernstein(q.bernstein_coeffs());
  const transforms::TransformSpec spec(m + 1, m);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double s = unif(rng);
    const double target = p.evaluate(s);
    const double got = transforms::forward(spec, q_profile, s);
    worst = std::max(worst, std::fabs(got - target) / std::max(1.0, std::fabs(target)));
  }
  return worst;
}

Certificate make_certificate(const construct::ConstructionParams& params, int degree, Exec exec,
                             std::uint64_t seed) {
  const auto verified =
      construct::verify_claims(construct::build_g(params), params.dims, kVerifyGrid, exec);
  return make_certificate(params, verified, degree, exec, seed);
}

Certificate make_certificate(const construct::ConstructionParams& params,
                             const construct::ConstructionResult& verified, int degree, Exec exec,
                             std::uint64_t seed) {
  if (!verified.margins_nonnegative()) {
    throw VerificationFailed("construction does not satisfy both transform inequalities");
  }
  Certificate c;
  c.params = params;
  c.construction = verified;
  c.bernstein_degree = degree;
  c.moments = moment_scan(params.dims, verified.g, degree, exec);
  const auto best = std::min_element(c.moments.begin(), c.moments.end());
  c.witness_index = static_cast<int>(best - c.moments.begin());
  c.pairing_value = *best;
  if (!(c.pairing_value < kNegativeThreshold)) {
    throw CertificateNotFound("certificate not found at degree " + std::to_string(degree));
  }
  c.witness = bernstein_basis(degree, c.witness_index);
  c.witness_monomial = to_monomial(c.witness);
  const int m = params.dims.n() - params.dims.k();
  c.preimage = preimage(c.witness_monomial, m);
  c.preimage_bernstein = c.preimage.bernstein_coeffs();
  c.roundtrip_error = roundtrip_error(c.preimage, c.witness, m, kRoundtripSamples, seed);
  if (!(c.roundtrip_error <= kRoundtripTolerance)) {
    throw AccuracyError("preimage round trip exceeds 1e-8", c.roundtrip_error);
  }
  double floor = c.witness.evaluate(0.0);
  for (double t : transforms::uniform_grid(kVerifyGrid)) floor = std::min(floor, c.witness.evaluate(t));
  c.nonnegativity_floor = floor;
  return c;
}

Certificate certify_with_doubling(const construct::ConstructionParams& params, int degree,
                                  Exec exec, std::uint64_t seed) {
  if (degree < 1) throw ParameterError("certificate degree must be >= 1");
  const auto verified =
      construct::verify_claims(construct::build_g(params), params.dims, kVerifyGrid, exec);
  const int cap = std::max(kMaxDegree, degree);
  for (int d = degree;; d *= 2) {
    try {
      return make_certificate(params, verified, d, exec, seed);
    } catch (const CertificateNotFound&) {
      if (2 * d > cap) throw CertificateNotFound("certificate not found up to degree " + std::to_string(d));
    }
  }
}

std::vector<BodySample> body_profile(const construct::ConstructionParams& params, int grid_size,
                                     Exec exec) {
  const auto verified =
      construct::verify_claims(construct::build_g(params), params.dims, grid_size, exec);
  if (!verified.margins_nonnegative()) {
    throw VerificationFailed("construction does not satisfy both transform inequalities");
  }
  const int n = params.dims.n();
  const int k = params.dims.k();
  const auto grid = transforms::uniform_grid(grid_size);
  const auto values = transforms::dual_grid(transforms::TransformSpec(n, n - k), verified.g, grid, exec);
  std::vector<BodySample> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] < 0.0) {
      throw InternalInconsistency("dual transform negative at t = " + std::to_string(grid[i]));
    }
    out.push_back({grid[i], std::pow(values[i], 1.0 / k)});
  }
  return out;
}

nlohmann::json to_json(const Certificate& c, bool emit_moments) {
  nlohmann::json out;
  out["dims"] = {{"n", c.params.dims.n()}, {"k", c.params.dims.k()}};
  out["params"] = construct::to_json(c.params);
  out["N"] = c.bernstein_degree;
  out["witness_index"] = c.witness_index;
  out["pairing_value"] = c.pairing_value;
  out["g"] = kbp::to_json(c.construction.g);
  out["witness"] = kbp::to_json(c.witness);
  auto pre = kbp::to_json(c.preimage);
  pre["bernstein_coeffs"] = c.preimage_bernstein;
  out["preimage"] = pre;
  out["diagnostics"] = {{"roundtrip_error", c.roundtrip_error},
                        {"nonnegativity_floor", c.nonnegativity_floor},
                        {"gamma", c.construction.gamma},
                        {"gamma_star", c.construction.gamma_star},
                        {"min_dual_margin", c.construction.min_dual_margin},
                        {"min_perp_margin", c.construction.min_perp_margin}};
  if (emit_moments) out["moments"] = c.moments;
  return out;
}

std::string body_profile_csv(const std::vector<BodySample>& samples) {
  std::string out = "t,rho\n";
  char buf[64];
  for (const auto& s : samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", s.t, s.rho);
    out += buf;
  }
  return out;
}

}  // namespace kbp::certify
