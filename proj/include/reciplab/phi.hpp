#pragma once

#include <utility>

#include "reciplab/complex.hpp"
#include "reciplab/rational.hpp"
#include "reciplab/trig_poly.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

namespace detail {

inline constexpr Precision kGuardBits = 32;

/// Squared distance from z to the nearest integer; assumes 0 <= xr < 1.
inline Real dist_sq_to_lattice(const Real& xr, const Real& y) {
  const Real a = xr * xr + y * y;
  const Real one(1L, xr.prec());
  const Real b = (one - xr) * (one - xr) + y * y;
  return a < b ? a : b;
}

/// Splits z into its fractional real part (exact) and the floor.
inline std::pair<Real, BigInt> reduce_mod_one(const Real& x) {
  const BigInt fl = x.floor_int();
  Real r(x.prec());
  mpfr_sub_z(r.raw(), x.raw(), fl.get_mpz_t(), MPFR_RNDN);
  return {std::move(r), fl};
}

inline void check_pole_proximity(const Real& xr, const Real& y, Precision caller_prec) {
  // Threshold 2^{-P/4} on |z - nearest integer|; compare squares.
  const Real t2 = Real::exp2i(-static_cast<long>(caller_prec / 2), xr.prec());
  if (dist_sq_to_lattice(xr, y) < t2)
    throw PoleProximityError("evaluation point within 2^-P/4 of an integer pole");
}

}  // namespace detail

/// cot(pi z) from the exponential form, with the real part reduced mod 1 and
/// the decaying exponential chosen by the sign of Im z.
inline Complex cot_pi(const Complex& z, Precision caller_prec = 0) {
  const Precision p = z.prec();
  if (caller_prec == 0) caller_prec = p;
  auto [xr, fl] = detail::reduce_mod_one(z.re());
  const Real& y = z.im();
  detail::check_pole_proximity(xr, y, caller_prec);

  const Real two_pi = Real(2L, p) * Real::pi(p);
  Real s(p), c(p);
  sin_cos(s, c, two_pi * xr);
  const Real one(1L, p);
  if (y.sign() >= 0) {
    const Real m = exp(-(two_pi * y));
    const Complex q(m * c, m * s);
    // i (q+1) / (q-1)
    return Complex(-q.im(), q.re() + one) / Complex(q.re() - one, q.im());
  }
  const Real m = exp(two_pi * y);
  const Complex pq(m * c, -(m * s));
  // i (1+p) / (1-p)
  return Complex(-pq.im(), one + pq.re()) / Complex(one - pq.re(), -pq.im());
}

/// csc(pi z); picks up (-1)^{floor(Re z)} from the reduction.
inline Complex csc_pi(const Complex& z, Precision caller_prec = 0) {
  const Precision p = z.prec();
  if (caller_prec == 0) caller_prec = p;
  auto [xr, fl] = detail::reduce_mod_one(z.re());
  const Real& y = z.im();
  detail::check_pole_proximity(xr, y, caller_prec);

  const Real pi = Real::pi(p);
  Real s(p), c(p);
  sin_cos(s, c, pi * xr);
  const Real one(1L, p);
  const Real two(2L, p);
  Complex r(p);
  if (y.sign() >= 0) {
    const Real m = exp(-(pi * y));
    const Complex e(m * c, m * s);  // e^{i pi z'}
    const Complex q = e * e;
    r = Complex(-(two * e.im()), two * e.re()) / Complex(q.re() - one, q.im());
  } else {
    const Real m = exp(pi * y);
    const Complex f(m * c, -(m * s));  // e^{-i pi z'}
    const Complex pq = f * f;
    r = Complex(-(two * f.im()), two * f.re()) / Complex(one - pq.re(), -pq.im());
  }
  return integer_is_even(fl) ? r : -r;
}

/// phi_N^{(J)}(z): pi^N P_N(cot pi z) for J = I,
/// pi^N csc(pi z) Q_N(cot pi z) for J = II.
/// Throws PoleProximityError within 2^{-P/4} of an integer.
inline Complex phi(Kind J, unsigned long N, const Complex& z) {
  if (N == 0) throw Error("phi requires N >= 1");
  const Precision p = z.prec();
  const Precision wp = p + detail::kGuardBits;
  const Complex zg = z.round_to(wp);
  const Complex c = cot_pi(zg, p);
  const Real pin = pow_si(Real::pi(wp), static_cast<long>(N));
  Complex v(wp);
  if (J == Kind::I) {
    v = cot_poly(N).eval(c) * pin;
  } else {
    v = csc_pi(zg, p) * csc_poly(N).eval(c) * pin;
  }
  return v.round_to(p);
}

/// phi_N^{(J)} at an exact rational point. Returns an exact zero where the
/// parity of the polynomial forces one (x = 1/2 mod 1 with J = I and N odd,
/// or J = II and N even). Throws IntegerArgumentError when x is an integer.
inline Complex phi_at_rational(Kind J, unsigned long N, const Rational& x, Precision prec) {
  if (x.is_integer()) throw IntegerArgumentError("phi pole at integer argument " + x.str());
  const BigInt fl = x.floor();
  const Rational xr = x - Rational(fl);
  const int sign = (J == Kind::II && !integer_is_even(fl)) ? -1 : 1;
  if (xr == Rational(1, 2)) {
    const bool zero = (J == Kind::I && N % 2 == 1) || (J == Kind::II && N % 2 == 0);
    if (zero) return Complex(prec);
  }
  const Complex v = phi(J, N, Complex(xr, prec));
  return sign < 0 ? -v : v;
}

}  // namespace reciplab
