#include "relmix/numeric.hpp"

#include "relmix/error.hpp"

namespace relmix {

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw ConsistencyViolation("exact division failed: " + a.get_str() + " / " +
                               b.get_str());
  }
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int ipow(const Int& a, int k) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(k));
  return r;
}

}  // namespace relmix
