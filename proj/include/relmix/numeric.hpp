#pragma once

#include <gmpxx.h>

namespace relmix {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer; Rat is an arbitrary-precision rational kept in lowest terms with a
// positive denominator (the GMP canonical form).
using Int = mpz_class;
using Rat = mpq_class;

Int factorial(int n);

// a / b, requiring that b divides a exactly.
Int exact_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);

// a^k for k >= 0.
Int ipow(const Int& a, int k);

}  // namespace relmix
