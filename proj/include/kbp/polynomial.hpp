#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "kbp/bigfloat.hpp"

namespace kbp {

// A polynomial on [0,1] in the monomial basis, coeffs[j] multiplying t^j.
//
// Coefficients are held in extended precision: the monomial expansion of a
// degree-N Bernstein element has coefficients of size up to ~3^N with
// alternating signs, so double coefficients cannot represent it once N is
// more than a few dozen. Trailing zero coefficients are trimmed on
// construction; the zero polynomial is stored as a single zero.
class PolynomialCoeffs {
 public:
  PolynomialCoeffs();
  explicit PolynomialCoeffs(std::vector<BigFloat> coeffs);

  static PolynomialCoeffs from_doubles(std::span<const double> coeffs, mpfr_prec_t bits = 128);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  mpfr_prec_t precision() const { return coeffs_.front().precision(); }
  const std::vector<BigFloat>& coeffs() const { return coeffs_; }

  // Coefficient j rounded to double (may overflow to +-inf for huge degrees).
  double coefficient(int j) const;

  // Horner evaluation at the working precision, rounded once at the end.
  double evaluate(double t) const;

  // Coefficients of the same polynomial in the degree-`degree()` Bernstein
  // basis, rounded to double.
  std::vector<double> bernstein_coeffs() const;

 private:
  std::vector<BigFloat> coeffs_;
};

// {"basis": "monomial", "precision_bits": ..., "coeffs": ["<decimal>", ...]}
nlohmann::json to_json(const PolynomialCoeffs& p);

}  // namespace kbp
