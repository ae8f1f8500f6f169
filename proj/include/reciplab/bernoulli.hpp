#pragma once

#include <mutex>
#include <vector>

#include "reciplab/combinatorics.hpp"
#include "reciplab/rational.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

/// m-th Bernoulli number of t/(e^t - 1), so B_1 = -1/2. Values are memoized;
/// the table is guarded, so concurrent readers are safe.
inline const Rational bernoulli(unsigned long m) {
  static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
  static std::mutex lock;
  std::scoped_lock guard(lock);
  // sum_{k=0}^{m} binom(m+1,k) B_k = 0  for m >= 1
  while (table.size() <= m) {
    const unsigned long i = table.size();
    Rational acc(0);
    for (unsigned long k = 0; k < i; ++k)
      acc += Rational(binom(i + 1, k)) * table[k];
    table.push_back(-acc / Rational(BigInt(i + 1)));
  }
  return table[m];
}

/// Exact value coeff * pi^pi_power.
struct PiScaled {
  Rational coeff;
  unsigned pi_power = 0;

  bool is_zero() const { return coeff.is_zero(); }

  friend PiScaled operator*(const PiScaled& a, const PiScaled& b) {
    return PiScaled{a.coeff * b.coeff, a.pi_power + b.pi_power};
  }
  friend bool operator==(const PiScaled& a, const PiScaled& b) {
    if (a.coeff.is_zero() && b.coeff.is_zero()) return true;
    return a.coeff == b.coeff && a.pi_power == b.pi_power;
  }
};

/// Laurent-expansion constants: 2*zeta(mu) for the cotangent family and
/// 2*(1-2^{1-mu})*zeta(mu) for the cosecant family, as exact rational
/// multiples of pi^mu. Zero for odd mu.
inline PiScaled alpha(Kind J, unsigned long mu) {
  if (mu == 0) throw Error("alpha requires mu >= 1");
  if (mu % 2 == 1) return PiScaled{Rational(0), static_cast<unsigned>(mu)};
  const int sign = (mu / 2) % 2 == 0 ? -1 : 1;  // (-1)^{mu/2+1}
  const Rational b_over_fact = bernoulli(mu) / Rational(factorial(mu));
  BigInt two_pow(1);
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), mu);  // 2^mu
  Rational c;
  if (J == Kind::I) {
    c = Rational(BigInt(sign) * two_pow) * b_over_fact;
  } else {
    // 2 (2^{mu-1} - 1) (-1)^{mu/2+1} B_mu / mu!
    BigInt half_pow = two_pow / 2;
    c = Rational(BigInt(2 * sign) * (half_pow - 1)) * b_over_fact;
  }
  return PiScaled{c, static_cast<unsigned>(mu)};
}

}  // namespace reciplab
