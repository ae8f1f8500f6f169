#pragma once

#include <numeric>
#include <utility>

#include "reciplab/identity.hpp"
#include "reciplab/special.hpp"

namespace reciplab {

/// Dedekind-Apostol sum s_N(q; p) = (1 / 2^{N+1} p) sum_{mu=1}^{p-1}
/// cot(pi q mu / p) cot^{(N-1)}(pi mu / p), with the derivative recovered
/// from cot^{(N-1)}(pi x) = (-1)^{N-1} (N-1)! pi^{-N} phi_N^{(I)}(x).
inline Complex apostol_sum(unsigned long N, unsigned long q, unsigned long p, Precision prec) {
  if (N < 1) throw UsageError("apostol_sum requires N >= 1");
  if (p < 1 || std::gcd(p, q) != 1) throw NotCoprimeError("apostol_sum requires coprime p, q");
  const Precision wp = prec + detail::kGuardBits;
  Complex acc(wp);
  for (unsigned long mu = 1; mu < p; ++mu) {
    const Rational x{BigInt(mu), BigInt(p)};
    const Complex f1 = phi_at_rational(Kind::I, 1, Rational(BigInt(q)) * x, wp);
    if (f1.is_zero()) continue;
    const Complex fN = phi_at_rational(Kind::I, N, x, wp);
    acc += f1 * fN;
  }
  // phi_1 phi_N = pi^{N+1} cot cot^{(N-1)} (-1)^{N-1} / (N-1)!
  BigInt two_pow(1);
  mpz_mul_2exp(two_pow.get_mpz_t(), two_pow.get_mpz_t(), N + 1);
  const int s = (N % 2 == 1) ? 1 : -1;
  const Rational scale = Rational(BigInt(s) * factorial(N - 1)) / Rational(two_pow * BigInt(p));
  acc = acc * Real(scale, wp) * pow_si(Real::pi(wp), -static_cast<long>(N + 1));
  return acc.round_to(prec);
}

/// Exact rational right side of the Apostol reciprocity laws:
/// k = 0 gives (p^2 + q^2 + 1 - 3pq)/(12pq); for k >= 1,
///   s_{2k+1}(q;p) + s_{2k+1}(p;q) = (-1)^k [ B_{2k+2}/(2pq(k+1))
///     + B_{2k+2}/((2k+1)(2k+2)) (p^{2k+1}/q + q^{2k+1}/p)
///     + (2k)! sum_{l=1}^{k} B_{2l} B_{2k+2-2l}/((2l)!(2k+2-2l)!)
///       p^{2l-1} q^{2k+1-2l} ],
/// obtained by comparing the z^{2k} Laurent coefficients of the two-factor
/// cotangent formula at 0 with cot w = 1/w + sum_j (-1)^j 4^j B_{2j}/(2j)!
/// w^{2j-1}.
inline Rational apostol_reciprocity_rhs(unsigned long k, unsigned long p, unsigned long q) {
  const Rational rp{BigInt(p)};
  const Rational rq{BigInt(q)};
  if (k == 0)
    return (rp * rp + rq * rq + Rational(1) - Rational(3) * rp * rq) /
           (Rational(12) * rp * rq);
  const Rational b = bernoulli(2 * k + 2);
  Rational rhs = b / (Rational(2) * rp * rq * Rational(BigInt(k + 1)));
  auto ipow = [](const Rational& x, unsigned long e) {
    Rational r(1);
    for (unsigned long i = 0; i < e; ++i) r *= x;
    return r;
  };
  rhs += b / Rational(BigInt((2 * k + 1) * (2 * k + 2))) *
         (ipow(rp, 2 * k + 1) / rq + ipow(rq, 2 * k + 1) / rp);
  Rational sum(0);
  for (unsigned long l = 1; l <= k; ++l)
    sum += bernoulli(2 * l) * bernoulli(2 * k + 2 - 2 * l) /
           Rational(factorial(2 * l) * factorial(2 * k + 2 - 2 * l)) * ipow(rp, 2 * l - 1) *
           ipow(rq, 2 * k + 1 - 2 * l);
  rhs += Rational(factorial(2 * k)) * sum;
  if (k % 2 == 1) rhs = -rhs;
  return rhs;
}

inline VerificationReport apostol_reciprocity(unsigned long k, unsigned long p, unsigned long q,
                                              Precision prec, long tolerance_exponent = 0) {
  if (std::gcd(p, q) != 1) throw NotCoprimeError("apostol reciprocity requires coprime p, q");
  if (tolerance_exponent == 0) tolerance_exponent = prec / 2;
  const Precision wp = prec + detail::kGuardBits;
  const unsigned long N = 2 * k + 1;
  const Complex lhs = apostol_sum(N, q, p, wp) + apostol_sum(N, p, q, wp);
  const Complex rhs(Real(apostol_reciprocity_rhs(k, p, q), wp), Real(wp));

  VerificationReport rep;
  rep.law = "apostol-reciprocity";
  rep.params.a = {p, q};
  rep.params.m = {N, N};
  rep.params.w = {Rational(0), Rational(0)};
  rep.params.j_I = 2;
  rep.params.j_II = 0;
  rep.case_tag = Kind::I;
  detail::ErrorTracker tracker(prec);
  const Real one(1L, wp);
  tracker.add(Complex(prec), lhs.round_to(prec), rhs.round_to(prec),
              ((lhs - rhs).abs() / max(one, rhs.abs())).round_to(prec));
  tracker.finalize(rep, tolerance_exponent);
  return rep;
}

namespace detail {

// cot/csc and their derivatives in the pi-free scaling (poles on pi Z),
// shared by the classical two-factor formulas below.
struct PiFreeTrig {
  Precision wp;
  Real pi = Real::pi(wp);
  Complex zp;  // z / pi

  PiFreeTrig(const Complex& z, Precision wp_) : wp(wp_), zp(z.round_to(wp_) / Real::pi(wp_)) {}

  Complex cot(unsigned long scale) const {
    return phi(Kind::I, 1, zp * Real(static_cast<long>(scale), wp)) / pi;
  }
  Complex csc(unsigned long scale) const {
    return phi(Kind::II, 1, zp * Real(static_cast<long>(scale), wp)) / pi;
  }
  // cot' = -csc^2, csc' = -csc cot
  Complex cot_deriv() const { return -(phi(Kind::I, 2, zp) / (pi * pi)); }
  Complex csc_deriv() const { return -(phi(Kind::II, 2, zp) / (pi * pi)); }
  // f(z - pi mu / den) with f = cot or csc
  Complex shifted(Kind k, unsigned long mu, unsigned long den) const {
    return phi(k, 1, zp - Complex(Rational(BigInt(mu), BigInt(den)), wp)) / pi;
  }
  // cot(pi q mu / p) style node values
  Complex node(Kind k, unsigned long num, unsigned long den) const {
    return phi_at_rational(k, 1, Rational(BigInt(num), BigInt(den)), wp) / pi;
  }
};

}  // namespace detail

/// One of the five classical two-factor product-to-sum formulas, evaluated
/// directly in its own scaling (poles on pi Z) and cross-checked against the
/// general product/sum sides under z -> z/pi.
///   0: cot(pz) cot(qz), any coprime p, q
///   1: cot(pz) csc(qz), q even        2: cot(pz) csc(qz), q odd
///   3: csc(pz) csc(qz), p + q even    4: csc(pz) csc(qz), p + q odd
inline VerificationReport fukuhara_instance(int case_id, unsigned long p, unsigned long q,
                                            const Complex& z, Precision prec,
                                            long tolerance_exponent = 0) {
  if (case_id < 0 || case_id > 4) throw UsageError("fukuhara case must be 0..4");
  if (std::gcd(p, q) != 1) throw NotCoprimeError("fukuhara formulas require coprime p, q");
  switch (case_id) {
    case 1:
      if (q % 2 != 0) throw ParityMismatchError("case 1 requires q even");
      break;
    case 2:
      if (q % 2 != 1) throw ParityMismatchError("case 2 requires q odd");
      break;
    case 3:
      if ((p + q) % 2 != 0) throw ParityMismatchError("case 3 requires p + q even");
      break;
    case 4:
      if ((p + q) % 2 != 1) throw ParityMismatchError("case 4 requires p + q odd");
      break;
    default:
      break;
  }
  if (tolerance_exponent == 0) tolerance_exponent = prec / 2;
  const Precision wp = prec + detail::kGuardBits;
  const detail::PiFreeTrig t(z, wp);
  const Real pq(static_cast<long>(p * q), wp);

  const Kind first = case_id <= 2 ? Kind::I : Kind::II;
  const Kind second = case_id == 0 ? Kind::I : Kind::II;
  const Complex lhs =
      (first == Kind::I ? t.cot(p) : t.csc(p)) * (second == Kind::I ? t.cot(q) : t.csc(q)) * pq;

  // - d/dz of cot or csc, per the parity of the case
  const bool deriv_cot = case_id == 0 || case_id == 1 || case_id == 3;
  Complex rhs = -(deriv_cot ? t.cot_deriv() : t.csc_deriv());
  if (case_id == 0) rhs -= Complex(pq, Real(wp));

  const bool alt_p = case_id >= 3;       // (-1)^mu on the mu mod p sum
  const Kind node_p = case_id == 0 ? Kind::I : Kind::II;  // cot or csc node values
  const Kind shift_kind = deriv_cot ? Kind::I : Kind::II;
  for (unsigned long mu = 1; mu < p; ++mu) {
    Complex term = t.node(node_p, q * mu, p) * t.shifted(shift_kind, mu, p) *
                   Real(static_cast<long>(q), wp);
    if (alt_p && mu % 2 == 1) term = -term;
    rhs += term;
  }
  const bool alt_q = case_id >= 1;
  const Kind node_q = case_id <= 2 ? Kind::I : Kind::II;
  for (unsigned long mu = 1; mu < q; ++mu) {
    Complex term = t.node(node_q, p * mu, q) * t.shifted(shift_kind, mu, q) *
                   Real(static_cast<long>(p), wp);
    if (alt_q && mu % 2 == 1) term = -term;
    rhs += term;
  }

  // cross-check against the general machinery at Z = z/pi
  Params gp;
  gp.a = {p, q};
  gp.m = {1, 1};
  gp.w = {Rational(0), Rational(0)};
  gp.j_I = case_id == 0 ? 2 : (case_id <= 2 ? 1 : 0);
  gp.j_II = 2 - gp.j_I;
  const Real pi2 = t.pi * t.pi;
  const Complex phi_side = eval_Phi(gp, t.zp);
  const Complex psi_side = eval_Psi(gp, t.zp);

  const Real one(1L, wp);
  const Real e1 = (lhs - rhs).abs() / max(one, lhs.abs());
  const Real e2 = (lhs * pi2 - phi_side).abs() / max(one, phi_side.abs());
  const Real e3 = (rhs * pi2 - psi_side).abs() / max(one, psi_side.abs());

  VerificationReport rep;
  rep.law = "fukuhara-" + std::to_string(case_id);
  rep.params = gp;
  rep.case_tag = classify_case(gp);
  detail::ErrorTracker tracker(prec);
  tracker.add(z, lhs.round_to(prec), rhs.round_to(prec),
              max(e1, max(e2, e3)).round_to(prec));
  tracker.finalize(rep, tolerance_exponent);
  return rep;
}

/// Bezout pair A1 a2 + A2 a1 = 1 with 0 <= A1 < a1.
inline std::pair<BigInt, BigInt> bezout_canonical(unsigned long a1, unsigned long a2) {
  BigInt g, s, t;
  const BigInt b1(a1), b2(a2);
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b2.get_mpz_t(), b1.get_mpz_t());
  if (g != 1) throw NotCoprimeError("bezout pair needs coprime moduli");
  BigInt A1;
  mpz_fdiv_r(A1.get_mpz_t(), s.get_mpz_t(), b1.get_mpz_t());  // A1 = s mod a1 in [0, a1)
  const BigInt A2 = (BigInt(1) - A1 * b2) / b1;
  return {A1, A2};
}

/// The shared-pole signature of the two-factor identity.
inline int sgn2(Kind K1, Kind K2, unsigned long a1, unsigned long a2, const Rational& w1,
                const Rational& w2, const BigInt& A1, const BigInt& A2) {
  const Rational center = Rational(A1) * w2 + Rational(A2) * w1;
  if (K1 == K2) return sgn(K1, center, a1 + a2, w1 + w2);
  return sgn(K1, center, a1, w1) * sgn(K2, center, a2, w2);
}

/// Two-factor identity for r = 2, m = (1,1), coprime a: the product of two
/// first-order factors against the constant, the shared-pole term and the
/// two primed node sums. K1 <= K2 is required (cot factors first).
inline VerificationReport r2_identity(unsigned long a1, unsigned long a2, const Rational& w1,
                                      const Rational& w2, Kind K1, Kind K2, const Complex& z,
                                      Precision prec, long tolerance_exponent = 0) {
  if (K1 == Kind::II && K2 == Kind::I)
    throw InadmissibleTripleError("factor kinds must be ordered cot before csc");
  if (std::gcd(a1, a2) != 1) throw NotCoprimeError("two-factor identity requires coprime a1, a2");
  if (tolerance_exponent == 0) tolerance_exponent = prec / 2;

  Params p;
  p.a = {a1, a2};
  p.m = {1, 1};
  p.w = {w1, w2};
  p.j_I = (K1 == Kind::I ? 1 : 0) + (K2 == Kind::I ? 1 : 0);
  p.j_II = 2 - p.j_I;
  p.validate();
  const Kind J = classify_case(p);
  const Precision wp = prec + detail::kGuardBits;
  const Complex zw = z.round_to(wp);

  const Complex lhs = eval_Phi(p, zw);

  Complex rhs(wp);
  if (K1 == Kind::I && K2 == Kind::I) {
    const Real pi = Real::pi(wp);
    rhs -= Complex(pi * pi * Real(static_cast<long>(a1 * a2), wp), Real(wp));
  }
  const auto [A1, A2] = bezout_canonical(a1, a2);
  if ((Rational(BigInt(a1)) * w2 - Rational(BigInt(a2)) * w1).is_integer()) {
    const int s2 = sgn2(K1, K2, a1, a2, w1, w2, A1, A2);
    if (s2 != 0) {
      const Rational center = Rational(A1) * w2 + Rational(A2) * w1;
      const Complex term = phi(J, 2, zw - Complex(center, wp));
      rhs += s2 < 0 ? -term : term;
    }
  }
  // primed node sums; singular nodes are exactly the shared poles
  const auto node_sum_for = [&](std::size_t l, std::size_t u, Kind Kl, Kind Ku) {
    const unsigned long al = l == 0 ? a1 : a2;
    const unsigned long au = u == 0 ? a1 : a2;
    const Rational& wl = l == 0 ? w1 : w2;
    const Rational& wu = u == 0 ? w1 : w2;
    Complex acc(wp);
    for (unsigned long mu = 0; mu < al; ++mu) {
      const Rational x = (wl + Rational(BigInt(mu))) / Rational(BigInt(al));
      if (shift_test(au, wu, x).is_integral) continue;
      Complex term = phi_at_rational(Ku, 1, Rational(BigInt(au)) * x - wu, wp) *
                     phi(J, 1, zw - Complex(x, wp)) * Real(static_cast<long>(au), wp);
      if (Kl == Kind::II && mu % 2 == 1) term = -term;
      acc += term;
    }
    return acc;
  };
  rhs += node_sum_for(0, 1, K1, K2);
  rhs += node_sum_for(1, 0, K2, K1);

  VerificationReport rep;
  rep.law = "two-factor-identity";
  rep.params = p;
  rep.case_tag = J;
  detail::ErrorTracker tracker(prec);
  const Real one(1L, wp);
  tracker.add(z, lhs.round_to(prec), rhs.round_to(prec),
              ((lhs - rhs).abs() / max(one, lhs.abs())).round_to(prec));
  tracker.finalize(rep, tolerance_exponent);
  return rep;
}

}  // namespace reciplab
