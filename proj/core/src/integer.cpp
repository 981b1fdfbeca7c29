#include <hilbert/integer.hpp>

#include <cmath>
#include <stdexcept>

namespace hilbert {

double log_integer(const Integer& value) {
  if (sgn(value) <= 0) throw std::domain_error("log_integer: argument must be positive");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

}  // namespace hilbert
