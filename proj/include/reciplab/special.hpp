#pragma once

#include <numeric>
#include <vector>

#include "reciplab/identity.hpp"

namespace reciplab {

/// True iff no two index/offset pairs share a pole, i.e. every candidate
/// node has a singleton integral set.
inline bool check_multiplicity_free(const Params& p) {
  for (const PoleDatum& d : enumerate_poles(p))
    if (d.integral_set.size() != 1) return false;
  return true;
}

inline bool pairwise_coprime(const std::vector<unsigned long>& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (std::gcd(a[i], a[j]) != 1) return false;
  return true;
}

/// Explicit multiplicity-free reciprocity: every A-value sits on the
/// non-integral branch, so the whole left side is a plain trigonometric sum
/// over the nodes (w_l + mu_l)/a_l.
inline VerificationReport multiplicity_free_reciprocity(const Params& p, Precision prec,
                                                        long tolerance_exponent = 0) {
  p.validate();
  if (!check_multiplicity_free(p))
    throw NotMultiplicityFreeError("parameters share a pole; the explicit form needs "
                                   "multiplicity-free nodes");
  if (classify_case(p) != Kind::I)
    throw UsageError("the depth-one reciprocity law holds for Case I parameters only");
  if (tolerance_exponent == 0) tolerance_exponent = prec / 2;
  const Precision wp = prec + detail::kGuardBits;

  Complex lhs(wp);
  for (std::size_t l = 0; l < p.r(); ++l) {
    std::vector<std::size_t> others;
    for (std::size_t u = 0; u < p.r(); ++u)
      if (u != l) others.push_back(u);
    for (unsigned long mu = 0; mu < p.a[l]; ++mu) {
      const Rational x = (p.w[l] + Rational(BigInt(mu))) / Rational(BigInt(p.a[l]));
      const int sign = (p.is_csc(l) && mu % 2 == 1) ? -1 : 1;
      Complex node(wp);
      for (const auto& nu : weak_compositions(static_cast<long>(p.m[l]) - 1, others.size())) {
        Complex prod(Real(1L, wp), Real(wp));
        bool zero = false;
        for (std::size_t i = 0; i < others.size(); ++i) {
          const std::size_t u = others[i];
          const Complex f = coeff_A(p.kind_of(u), nu[i], x, p.a[u], p.m[u], p.w[u], wp).value;
          if (f.is_zero()) {
            zero = true;
            break;
          }
          prod *= f;
        }
        if (!zero) node += prod;
      }
      lhs += sign < 0 ? -node : node;
    }
  }

  Rational rc(0);
  if (p.j_II == 0 && p.all_m_one()) rc = Rational(BigInt(sin_pi_half(p.r())) * p.a_product());
  const PiScaled rhs_exact{rc, static_cast<unsigned>(p.r() - 1)};
  const Complex rhs(pi_scaled_value(rhs_exact, wp), Real(wp));

  VerificationReport rep;
  rep.law = "multiplicity-free-reciprocity";
  rep.params = p;
  rep.case_tag = classify_case(p);
  detail::ErrorTracker tracker(prec);
  const Real one(1L, wp);
  tracker.add(Complex(prec), lhs.round_to(prec), rhs.round_to(prec),
              ((lhs - rhs).abs() / max(one, rhs.abs())).round_to(prec));
  tracker.finalize(rep, tolerance_exponent);
  return rep;
}

/// Pole-at-origin coefficient aggregate for w = 0: the exact pi-polynomial
/// sum over subsets of [r] and their composition tuples. Always a rational
/// multiple of pi^{|m| - n}.
inline ACoeff M_coefficient(const Params& p, unsigned long n,
                            Precision prec = kDefaultPrecision) {
  p.validate();
  for (const Rational& wl : p.w)
    if (!wl.is_zero()) throw UsageError("M_coefficient requires w = 0");
  if (!pairwise_coprime(p.a)) throw NotCoprimeError("M_coefficient requires pairwise coprime a");
  if (n < 1 || n > p.total_m()) throw UsageError("M_coefficient requires 1 <= n <= |m|");

  const unsigned power = static_cast<unsigned>(p.total_m() - n);
  Rational total(0);
  const std::size_t r = p.r();
  for (std::size_t mask = 0; mask < (1UL << r); ++mask) {
    long sum_m = 0;
    std::vector<std::size_t> comp;
    for (std::size_t l = 0; l < r; ++l) {
      if (mask & (1UL << l))
        sum_m += static_cast<long>(p.m[l]);
      else
        comp.push_back(l);
    }
    const long t = sum_m - static_cast<long>(n);
    if (t < 0) continue;
    for (const auto& nu : weak_compositions(t, comp.size())) {
      Rational term(1);
      bool zero = false;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const std::size_t u = comp[i];
        const PiScaled al = alpha(p.kind_of(u), p.m[u] + nu[i]);
        if (al.is_zero()) {
          zero = true;
          break;
        }
        BigInt a_pow;
        mpz_ui_pow_ui(a_pow.get_mpz_t(), p.a[u], p.m[u] + nu[i]);
        int s = (p.m[u] % 2 == 0) ? 1 : -1;
        if (p.is_csc(u)) s = -s;  // same extra sign as the coeff_A regular part
        term *= Rational(BigInt(s) * binom(p.m[u] + nu[i] - 1, p.m[u] - 1) * a_pow) * al.coeff;
      }
      if (!zero) total += term;
    }
  }
  const PiScaled exact{total, power};
  return ACoeff{Complex(pi_scaled_value(exact, prec), Real(prec)), exact};
}

/// Zagier-type reciprocity for w = 0, m = 1: the cotangent/cosecant node sum
/// against pi^{r-1} sin(pi r/2) [j_II = 0] prod a_l - M_1.
inline VerificationReport zagier_reciprocity(const std::vector<unsigned long>& a, unsigned j_I,
                                             unsigned j_II, Precision prec,
                                             long tolerance_exponent = 0) {
  Params p;
  p.a = a;
  p.m.assign(a.size(), 1);
  p.w.assign(a.size(), Rational(0));
  p.j_I = j_I;
  p.j_II = j_II;
  p.validate();
  if (!pairwise_coprime(a)) throw NotCoprimeError("zagier reciprocity requires pairwise coprime a");
  if (classify_case(p) != Kind::I)
    throw UsageError("the depth-one reciprocity law holds for Case I parameters only");
  if (tolerance_exponent == 0) tolerance_exponent = prec / 2;
  const Precision wp = prec + detail::kGuardBits;

  Complex lhs(wp);
  for (std::size_t l = 0; l < p.r(); ++l) {
    for (unsigned long mu = 1; mu < p.a[l]; ++mu) {
      const Rational x{BigInt(mu), BigInt(p.a[l])};
      const int sign = (p.is_csc(l) && mu % 2 == 1) ? -1 : 1;
      Complex prod(Real(1L, wp), Real(wp));
      bool zero = false;
      for (std::size_t u = 0; u < p.r(); ++u) {
        if (u == l) continue;
        const Complex f = phi_at_rational(p.kind_of(u), 1, Rational(BigInt(p.a[u])) * x, wp) *
                          Real(static_cast<long>(p.a[u]), wp);
        if (f.is_zero()) {
          zero = true;
          break;
        }
        prod *= f;
      }
      if (zero) continue;
      lhs += sign < 0 ? -prod : prod;
    }
  }

  Complex rhs(wp);
  if (j_II == 0) {
    const int c = sin_pi_half(p.r());
    if (c != 0)
      rhs = Complex(Real(Rational(BigInt(c) * p.a_product()), wp) *
                        pow_si(Real::pi(wp), static_cast<long>(p.r() - 1)),
                    Real(wp));
  }
  rhs -= M_coefficient(p, 1, wp).value;

  VerificationReport rep;
  rep.law = j_II == 0 ? "zagier-reciprocity" : "zagier-reciprocity-csc";
  rep.params = p;
  rep.case_tag = classify_case(p);
  detail::ErrorTracker tracker(prec);
  const Real one(1L, wp);
  tracker.add(Complex(prec), lhs.round_to(prec), rhs.round_to(prec),
              ((lhs - rhs).abs() / max(one, rhs.abs())).round_to(prec));
  tracker.finalize(rep, tolerance_exponent);
  return rep;
}

/// The raw generalized Dedekind sum attached to factor l: the primed node
/// sum over mu_l with the remaining factors evaluated at the nodes.
inline Complex node_sum(const Params& p, std::size_t l, Precision prec) {
  p.validate();
  if (l >= p.r()) throw UsageError("node_sum factor index out of range");
  const Precision wp = prec + detail::kGuardBits;
  Complex acc(wp);
  for (unsigned long mu = 0; mu < p.a[l]; ++mu) {
    const Rational x = (p.w[l] + Rational(BigInt(mu))) / Rational(BigInt(p.a[l]));
    bool singular = false;
    for (std::size_t u = 0; u < p.r(); ++u)
      if (u != l && shift_test(p.a[u], p.w[u], x).is_integral) singular = true;
    if (singular) continue;
    const int sign = (p.is_csc(l) && mu % 2 == 1) ? -1 : 1;
    Complex prod(Real(1L, wp), Real(wp));
    for (std::size_t u = 0; u < p.r(); ++u) {
      if (u == l) continue;
      BigInt a_pow;
      mpz_ui_pow_ui(a_pow.get_mpz_t(), p.a[u], p.m[u]);
      prod *= phi_at_rational(p.kind_of(u), p.m[u], Rational(BigInt(p.a[u])) * x - p.w[u], wp) *
              Real(Rational(a_pow), wp);
    }
    acc += sign < 0 ? -prod : prod;
  }
  return acc.round_to(prec);
}

}  // namespace reciplab
