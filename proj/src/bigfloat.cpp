#include "kbp/bigfloat.hpp"

#include <gmp.h>

namespace kbp {

std::string BigFloat::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits > 1 ? digits - 1 : 0, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

BigFloat BigFloat::binomial(unsigned long n, unsigned long k, mpfr_prec_t bits) {
  mpz_t z;
  mpz_init(z);
  mpz_bin_uiui(z, n, k);
  BigFloat r(bits);
  mpfr_set_z(r.v_, z, MPFR_RNDN);
  mpz_clear(z);
  return r;
}

}  // namespace kbp
