#include "kbp/polynomial.hpp"

#include <cmath>

#include "kbp/errors.hpp"

namespace kbp {

PolynomialCoeffs::PolynomialCoeffs() { coeffs_.emplace_back(128); }

PolynomialCoeffs::PolynomialCoeffs(std::vector<BigFloat> coeffs) : coeffs_(std::move(coeffs)) {
  while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(128);
}

PolynomialCoeffs PolynomialCoeffs::from_doubles(std::span<const double> coeffs, mpfr_prec_t bits) {
  std::vector<BigFloat> out;
  out.reserve(coeffs.size());
  for (double c : coeffs) {
    if (!std::isfinite(c)) throw ParameterError("polynomial coefficients must be finite");
    out.emplace_back(c, bits);
  }
  return PolynomialCoeffs(std::move(out));
}

double PolynomialCoeffs::coefficient(int j) const {
  if (j < 0 || j > degree()) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)].to_double();
}

double PolynomialCoeffs::evaluate(double t) const {
  const mpfr_prec_t bits = precision();
  BigFloat acc(bits);
  BigFloat x(t, bits);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc.to_double();
}

std::vector<double> PolynomialCoeffs::bernstein_coeffs() const {
  const int n = degree();
  const mpfr_prec_t bits = precision();
  // a_i / C(n, i); then r_l = sum_{i <= l} C(l, i) a_i / C(n, i).
  std::vector<BigFloat> scaled;
  scaled.reserve(coeffs_.size());
  for (int i = 0; i <= n; ++i) {
    BigFloat v = coeffs_[static_cast<std::size_t>(i)];
    v /= BigFloat::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(i), bits);
    scaled.push_back(std::move(v));
  }
  std::vector<double> out(static_cast<std::size_t>(n) + 1);
  BigFloat acc(bits);
  BigFloat term(bits);
  BigFloat binom(bits);
  for (int l = 0; l <= n; ++l) {
    mpfr_set_zero(acc.get(), 1);
    mpfr_set_ui(binom.get(), 1, MPFR_RNDN);
    for (int i = 0; i <= l; ++i) {
      mpfr_mul(term.get(), scaled[static_cast<std::size_t>(i)].get(), binom.get(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
      binom.mul_si(l - i).div_si(i + 1);
    }
    out[static_cast<std::size_t>(l)] = acc.to_double();
  }
  return out;
}

nlohmann::json to_json(const PolynomialCoeffs& p) {
  const int digits = static_cast<int>(std::ceil(static_cast<double>(p.precision()) * 0.30103)) + 1;
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string(digits));
  return {{"basis", "monomial"},
          {"degree", p.degree()},
          {"precision_bits", static_cast<long>(p.precision())},
          {"coeffs", coeffs}};
}

}  // namespace kbp
