#pragma once

#include <optional>

#include "reciplab/bernoulli.hpp"
#include "reciplab/combinatorics.hpp"
#include "reciplab/phi.hpp"
#include "reciplab/poles.hpp"
#include "reciplab/rational.hpp"

namespace reciplab {

inline Real pi_scaled_value(const PiScaled& s, Precision prec) {
  const Precision wp = prec + detail::kGuardBits;
  const Real v = Real(s.coeff, wp) * pow_si(Real::pi(wp), static_cast<long>(s.pi_power));
  return v.round_to(prec);
}

/// Signature (-1)^{(a z0 - w) delta_{J,II}} delta_Z(a z0 - w): 0 when the
/// shift is not integral, +1 for the cotangent kind, (-1)^{a z0 - w} for the
/// cosecant kind.
inline int sgn(Kind J, const Rational& z0, unsigned long a, const Rational& w) {
  const ShiftTest t = shift_test(a, w, z0);
  if (!t.is_integral) return 0;
  if (J == Kind::I) return 1;
  return parity_sign(t.integer_value);
}

/// Taylor/Laurent coefficient of a^m phi_m^{(J)}(a z - w) at a rational
/// expansion center. Carries the exact pi-scaled form when the center is a
/// pole of the factor (integral branch), so downstream sums can defer float
/// conversion.
struct ACoeff {
  Complex value;
  std::optional<PiScaled> exact_part;
};

inline ACoeff coeff_A(Kind J, unsigned long nu, const Rational& z0, unsigned long a,
                      unsigned long m, const Rational& w, Precision prec) {
  if (m < 1) throw Error("coeff_A requires m >= 1");
  BigInt a_pow;
  mpz_ui_pow_ui(a_pow.get_mpz_t(), a, m + nu);
  const ShiftTest t = shift_test(a, w, z0);
  if (t.is_integral) {
    // (-1)^{m + delta_{J,II}} sgn^{(J)} binom(m+nu-1, m-1) alpha_{m+nu}^{(J)} a^{m+nu}.
    // The cosecant family picks up one extra sign: its regular part sums the
    // alternating series, e.g. pi csc(pi z) = 1/z + alpha_2^{(II)} z + ...
    int s = (m % 2 == 0) ? 1 : -1;
    if (J == Kind::II) s = -s;
    s *= sgn(J, z0, a, w);
    const PiScaled al = alpha(J, m + nu);
    PiScaled exact{Rational(BigInt(s) * binom(m + nu - 1, m - 1) * a_pow) * al.coeff,
                   al.pi_power};
    Complex value(pi_scaled_value(exact, prec), Real(prec));
    return ACoeff{std::move(value), std::move(exact)};
  }
  // (-1)^nu ((m)_nu / nu!) phi_{m+nu}^{(J)}(a z0 - w) a^{m+nu}
  const Rational arg = Rational(BigInt(a)) * z0 - w;
  const int s = (nu % 2 == 0) ? 1 : -1;
  const Rational factor =
      Rational(BigInt(s) * pochhammer(m, nu) * a_pow) / Rational(factorial(nu));
  const Precision wp = prec + detail::kGuardBits;
  Complex value = phi_at_rational(J, m + nu, arg, wp) * Real(factor, wp);
  return ACoeff{value.round_to(prec), std::nullopt};
}

}  // namespace reciplab
