#include "gk/rational.hpp"

#include "gk/errors.hpp"

namespace gk {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  try {
    Rational q(text);
    if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational literal '" + text + "'");
  }
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer double_factorial_odd(long m) {
  if (m <= 0) return 1;
  Integer r = 1;
  for (long i = m; i >= 1; i -= 2) r *= i;
  return r;
}

Integer pow_integer(long base, unsigned long exp) {
  Integer b(base), r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
  return r;
}

}  // namespace gk
