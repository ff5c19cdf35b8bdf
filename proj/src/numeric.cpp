#include "svyt/numeric.hpp"

#include <stdexcept>

namespace svyt {

Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

Int trinomial(long long a, long long b, long long c) {
  if (a < 0 || b < 0 || c < 0) return Int(0);
  return binomial(a + b + c, a) * binomial(b + c, b);
}

std::string to_string(const Rat& v) { return v.get_str(); }

}  // namespace svyt
