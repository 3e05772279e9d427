#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "kbp/construct.hpp"
#include "kbp/parallel.hpp"
#include "kbp/polynomial.hpp"
#include "kbp/profiles.hpp"

// Witness that the constructed g is not a non-negative functional on the
// range of R~_{n-k}: a non-negative polynomial p = R~_{n-k}(q) with
// pairing(g, p) < 0. The search family is the degree-N Bernstein basis; the
// pairing is linear, so its minimum over the simplex of non-negative
// Bernstein combinations sits at a single basis element.
namespace kbp::certify {

inline constexpr int kDefaultDegree = 400;
inline constexpr int kMaxDegree = 1600;
inline constexpr int kVerifyGrid = 4096;
inline constexpr double kNegativeThreshold = -1e-9;
inline constexpr double kRoundtripTolerance = 1e-8;
inline constexpr int kRoundtripSamples = 200;
inline constexpr std::uint64_t kDefaultSeed = 20080317;

struct Certificate {
  construct::ConstructionParams params;
  construct::ConstructionResult construction;
  int bernstein_degree = 0;
  int witness_index = 0;
  std::vector<double> moments;  // moments[j] = pairing(g, B_{j,N})
  double pairing_value = 0.0;   // moments[witness_index]
  RadialProfile witness = RadialProfile::constant(0.0);
  PolynomialCoeffs witness_monomial;
  PolynomialCoeffs preimage;    // R~_{n-k}(preimage) = witness
  std::vector<double> preimage_bernstein;
  double roundtrip_error = 0.0;
  double nonnegativity_floor = 0.0;
};

/// moments[j] = pairing(dims, g, B_{j,N}), j = 0..N.
std::vector<double> moment_scan(const DimPair& dims, const RadialProfile& g, int degree,
                                Exec exec = Exec::parallel);

/// lambda(m, j) for j = 0..count-1 at `bits` precision, from the closed form
/// of lambda(m, 1) and lambda(m, j+2) = lambda(m, j) (j+1) / (j+m).
std::vector<BigFloat> monomial_multipliers(int m, int count, mpfr_prec_t bits);

/// q with R~_m(q) = p: q_j = p_j / lambda(m, j).
PolynomialCoeffs preimage(const PolynomialCoeffs& p, int m);

/// max over `samples` seeded points s of |R~_m(q)(s) - p(s)| / max(1, |p(s)|),
/// with R~_m evaluated by quadrature on q's Bernstein form.
double roundtrip_error(const PolynomialCoeffs& q, const RadialProfile& p, int m, int samples,
                       std::uint64_t seed);

/// Certificate at a fixed degree. Throws VerificationFailed when the
/// construction's grid minima drop below 1 - 1e-9, CertificateNotFound when no
/// moment is below -1e-9, AccuracyError when the preimage round trip exceeds
/// 1e-8.
Certificate make_certificate(const construct::ConstructionParams& params, int degree,
                             Exec exec = Exec::parallel, std::uint64_t seed = kDefaultSeed);
Certificate make_certificate(const construct::ConstructionParams& params,
                             const construct::ConstructionResult& verified, int degree,
                             Exec exec = Exec::parallel, std::uint64_t seed = kDefaultSeed);

/// Tries degree, 2 degree, ... up to max(kMaxDegree, degree).
Certificate certify_with_doubling(const construct::ConstructionParams& params, int degree,
                                  Exec exec = Exec::parallel, std::uint64_t seed = kDefaultSeed);

struct BodySample {
  double t = 0.0;
  double rho = 0.0;
};

/// Radial function of the body of revolution with rho^k = R~*_{n-k}(g), on a
/// uniform grid in t = |<x, axis>|.
std::vector<BodySample> body_profile(const construct::ConstructionParams& params, int grid_size,
                                     Exec exec = Exec::parallel);

nlohmann::json to_json(const Certificate& c, bool emit_moments);

// "t,rho" header, one row per sample, 17 significant digits.
std::string body_profile_csv(const std::vector<BodySample>& samples);

}  // namespace kbp::certify
