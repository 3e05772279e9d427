#pragma once

#include <mpfr.h>

#include <string>

namespace kbp {

// Minimal owning wrapper over an MPFR value with explicit precision (bits).
// Precision is fixed per object; results of arithmetic take the precision of
// the left operand.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t bits = 128) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
  BigFloat(double x, mpfr_prec_t bits) : BigFloat(bits) { mpfr_set_d(v_, x, MPFR_RNDN); }

  BigFloat(const BigFloat& o) : BigFloat(mpfr_get_prec(o.v_)) { mpfr_set(v_, o.v_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // log2 |x|, or a very negative number for zero.
  long exponent() const { return is_zero() ? -(1L << 40) : mpfr_get_exp(v_); }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(double d) { mpfr_mul_d(v_, v_, d, MPFR_RNDN); return *this; }
  BigFloat& mul_si(long i) { mpfr_mul_si(v_, v_, i, MPFR_RNDN); return *this; }
  BigFloat& div_si(long i) { mpfr_div_si(v_, v_, i, MPFR_RNDN); return *this; }
  BigFloat& neg() { mpfr_neg(v_, v_, MPFR_RNDN); return *this; }

  // `digits` significant decimal digits in scientific notation.
  std::string to_string(int digits) const;

  static BigFloat pi(mpfr_prec_t bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  // Exact binomial coefficient C(n, k) rounded to `bits`.
  static BigFloat binomial(unsigned long n, unsigned long k, mpfr_prec_t bits);

 private:
  mpfr_t v_;
};

}  // namespace kbp
