#pragma once

#include "reciplab/rational.hpp"

namespace reciplab {

/// Exact binomial coefficient; 0 when k > n.
inline BigInt binom(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Rising factorial (m)_nu = m (m+1) ... (m+nu-1), with (m)_0 = 1.
inline BigInt pochhammer(unsigned long m, unsigned long nu) {
  BigInt r(1);
  for (unsigned long i = 0; i < nu; ++i) r *= BigInt(m + i);
  return r;
}

}  // namespace reciplab
