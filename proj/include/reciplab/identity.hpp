#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reciplab/laurent.hpp"
#include "reciplab/params.hpp"
#include "reciplab/phi.hpp"
#include "reciplab/poles.hpp"
#include "reciplab/rng.hpp"

namespace reciplab {

inline constexpr std::uint64_t kDefaultSeed = 12345;

struct SamplePolicy {
  unsigned count = 20;
  double im_low = 0.1;
  double im_high = 1.0;
  double exclusion_radius = 1e-3;
  std::uint64_t seed = kDefaultSeed;
};

struct Witness {
  Complex z, lhs, rhs;
};

struct VerificationReport {
  std::string law;
  Params params;
  Kind case_tag = Kind::I;
  unsigned samples = 0;
  Real max_abs_err;
  Real max_rel_err;
  Real tolerance;
  bool passed = false;
  std::vector<Witness> witnesses;  // worst cases, kept when failed
};

namespace detail {

/// Collects per-sample errors and keeps the worst witnesses.
class ErrorTracker {
 public:
  explicit ErrorTracker(Precision prec)
      : max_abs_(prec), max_rel_(prec), prec_(prec) {}

  void add(const Complex& z, const Complex& lhs, const Complex& rhs, const Real& rel) {
    const Real abs_err = (lhs - rhs).abs();
    if (abs_err > max_abs_) max_abs_ = abs_err;
    if (rel > max_rel_) max_rel_ = rel;
    worst_.push_back({Witness{z, lhs, rhs}, rel});
    std::sort(worst_.begin(), worst_.end(),
              [](const auto& a, const auto& b) { return b.second < a.second; });
    if (worst_.size() > 3) worst_.pop_back();
    ++samples_;
  }

  void finalize(VerificationReport& rep, long tolerance_exponent) const {
    rep.samples = samples_;
    rep.max_abs_err = max_abs_;
    rep.max_rel_err = max_rel_;
    rep.tolerance = Real::exp2i(-tolerance_exponent, prec_);
    rep.passed = max_rel_ <= rep.tolerance;
    rep.witnesses.clear();
    if (!rep.passed)
      for (const auto& [w, rel] : worst_) rep.witnesses.push_back(w);
  }

 private:
  Real max_abs_, max_rel_;
  Precision prec_;
  unsigned samples_ = 0;
  std::vector<std::pair<Witness, Real>> worst_;
};

}  // namespace detail

/// Product side: prod_l a_l^{m_l} phi_{m_l}^{(j,l)}(a_l z - w_l).
inline Complex eval_Phi(const Params& p, const Complex& z) {
  p.validate();
  const Precision prec = z.prec();
  const Precision wp = prec + detail::kGuardBits;
  const Complex zw = z.round_to(wp);
  Complex res(Real(1L, wp), Real(wp));
  for (std::size_t l = 0; l < p.r(); ++l) {
    const Complex arg = zw * Real(static_cast<long>(p.a[l]), wp) - Complex(p.w[l], wp);
    BigInt a_pow;
    mpz_ui_pow_ui(a_pow.get_mpz_t(), p.a[l], p.m[l]);
    res *= phi(p.kind_of(l), p.m[l], arg) * Real(Rational(a_pow), wp);
  }
  return res.round_to(prec);
}

/// Deliberate defects for negative controls: flip one signed pole factor, or
/// drop the full integral subset at one pole.
enum class CorruptionKind { none, flip_sign, drop_subset };

struct PsiCorruption {
  CorruptionKind kind = CorruptionKind::none;
  std::size_t pole_index = 0;
  std::size_t member = 0;  // index into S_rho for flip_sign
};

/// The sum side precomputed at a precision: constant term plus coefficients
/// C[rho][n] of phi_n^{(J)}(z - rho). Building it once amortizes the
/// combinatorial work across many sample points.
struct PsiExpansion {
  Kind J = Kind::I;
  Precision prec = kDefaultPrecision;
  Complex constant;
  std::vector<PoleDatum> poles;
  std::vector<std::vector<Complex>> coeff;  // [pole][n], slot 0 unused
};

inline PsiExpansion build_psi_expansion(const Params& p, Precision prec,
                                        const PsiCorruption& corr = {}) {
  p.validate();
  PsiExpansion exp;
  exp.J = classify_case(p);
  exp.prec = prec;
  exp.constant = Complex(prec);
  const Precision wp = prec + detail::kGuardBits;
  if (p.j_II == 0 && p.all_m_one()) {
    const int c = cos_pi_half(p.r());
    if (c != 0) {
      const Real v = Real(Rational(BigInt(c) * p.a_product()), wp) *
                     pow_si(Real::pi(wp), static_cast<long>(p.r()));
      exp.constant = Complex(v.round_to(prec), Real(prec));
    }
  }
  exp.poles = enumerate_poles(p);
  const unsigned long n_max = p.total_m();
  exp.coeff.assign(exp.poles.size(), std::vector<Complex>(n_max + 1, Complex(prec)));

  for (std::size_t pi = 0; pi < exp.poles.size(); ++pi) {
    const PoleDatum& pole = exp.poles[pi];
    const std::size_t s = pole.integral_set.size();
    // Taylor/Laurent factor cache per (factor, offset); filled lazily.
    std::vector<std::vector<std::optional<Complex>>> acache(
        p.r(), std::vector<std::optional<Complex>>(n_max + 1));
    const auto factor_A = [&](std::size_t u, unsigned long nu) -> const Complex& {
      auto& slot = acache[u][nu];
      if (!slot) slot = coeff_A(p.kind_of(u), nu, pole.rho, p.a[u], p.m[u], p.w[u], prec).value;
      return *slot;
    };

    for (std::size_t mask = 0; mask < (1UL << s); ++mask) {
      if (corr.kind == CorruptionKind::drop_subset && pi == corr.pole_index &&
          mask + 1 == (1UL << s))
        continue;  // drop Lambda = S_rho
      int sign = 1;
      long sum_m = 0;
      std::vector<char> in_lambda(p.r(), 0);
      for (std::size_t i = 0; i < s; ++i) {
        if (!(mask & (1UL << i))) continue;
        const std::size_t l = pole.integral_set[i];
        in_lambda[l] = 1;
        sum_m += static_cast<long>(p.m[l]);
        if (p.is_csc(l) && !integer_is_even(pole.int_values[i])) sign = -sign;
      }
      if (corr.kind == CorruptionKind::flip_sign && pi == corr.pole_index && s > 0 &&
          (mask & (1UL << (corr.member % s))))
        sign = -sign;
      std::vector<std::size_t> comp;
      for (std::size_t l = 0; l < p.r(); ++l)
        if (!in_lambda[l]) comp.push_back(l);

      for (long n = 1; n <= sum_m; ++n) {
        Complex acc(prec);
        for (const auto& nu : weak_compositions(sum_m - n, comp.size())) {
          Complex prod(Real(1L, prec), Real(prec));
          bool zero = false;
          for (std::size_t i = 0; i < comp.size(); ++i) {
            const Complex& f = factor_A(comp[i], nu[i]);
            if (f.is_zero()) {
              zero = true;
              break;
            }
            prod *= f;
          }
          if (!zero) acc += prod;
        }
        if (sign < 0) acc = -acc;
        exp.coeff[pi][static_cast<std::size_t>(n)] += acc;
      }
    }
  }
  return exp;
}

inline Complex eval_psi(const PsiExpansion& exp, const Complex& z) {
  const Precision prec = z.prec();
  const Precision wp = prec + detail::kGuardBits;
  const Complex zw = z.round_to(wp);
  Complex res = exp.constant.round_to(wp);
  for (std::size_t pi = 0; pi < exp.poles.size(); ++pi) {
    const Complex arg = zw - Complex(exp.poles[pi].rho, wp);
    for (std::size_t n = 1; n < exp.coeff[pi].size(); ++n) {
      const Complex& c = exp.coeff[pi][n];
      if (c.is_zero()) continue;
      res += c.round_to(wp) * phi(exp.J, n, arg);
    }
  }
  return res.round_to(prec);
}

/// Sum side of the product-to-sum identity at a point.
inline Complex eval_Psi(const Params& p, const Complex& z) {
  return eval_psi(build_psi_expansion(p, z.prec()), z);
}

/// Samples z per policy and compares both sides of the identity.
/// Relative error is measured against max(1, |Phi|).
inline VerificationReport verify_identity(const Params& p, const SamplePolicy& sp,
                                          Precision prec, long tolerance_exponent = 0,
                                          const PsiCorruption& corr = {}) {
  if (tolerance_exponent == 0) tolerance_exponent = prec / 2;
  const PsiExpansion exp = build_psi_expansion(p, prec, corr);
  detail::ErrorTracker tracker(prec);
  Rng rng(sp.seed);
  const Real one(1L, prec);
  for (unsigned i = 0; i < sp.count; ++i) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const Complex z(rng.uniform01(),
                      sp.im_low + (sp.im_high - sp.im_low) * rng.uniform01(), prec);
      try {
        const Complex lhs = eval_Phi(p, z);
        const Complex rhs = eval_psi(exp, z);
        tracker.add(z, lhs, rhs, (lhs - rhs).abs() / max(one, lhs.abs()));
        break;
      } catch (const PoleProximityError&) {
        continue;
      }
    }
  }
  VerificationReport rep;
  rep.law = "product-to-sum-identity";
  rep.params = p;
  rep.case_tag = exp.J;
  tracker.finalize(rep, tolerance_exponent);
  return rep;
}

/// Left side: the full signed A-product sum over poles at depth n = 1.
/// Right side, exact: pi^{r-1} sin(pi r/2) [j_II = 0] prod a_l [all m_l = 1].
/// The equality of the two holds for Case I parameters: it comes from the
/// constant term at i-infinity, which the cosecant case does not see. For
/// Case II the left side is generally nonzero while the right side is 0.
inline std::pair<Complex, PiScaled> reciprocity_sum(const Params& p, Precision prec) {
  const PsiExpansion exp = build_psi_expansion(p, prec);
  Complex lhs(prec);
  for (const auto& c : exp.coeff) lhs += c[1];
  Rational rc(0);
  if (p.j_II == 0 && p.all_m_one()) rc = Rational(BigInt(sin_pi_half(p.r())) * p.a_product());
  return {lhs, PiScaled{rc, static_cast<unsigned>(p.r() - 1)}};
}

/// Both sides of the Laurent-coefficient reciprocity at center z0, order mu.
/// lhs re-expands the sum side; rhs is the constant plus the K^+ sum, and
/// both equal the order-mu Taylor coefficient of Phi at z0.
inline std::pair<Complex, Complex> laurent_reciprocity(const Params& p, const Rational& z0,
                                                       unsigned long mu, Precision prec) {
  if (z0 < Rational(0) || z0 >= Rational(1))
    throw UsageError("expansion center z0 must lie in [0,1)");
  const PsiExpansion exp = build_psi_expansion(p, prec);
  const Precision wp = prec + detail::kGuardBits;

  Complex lhs(wp);
  for (std::size_t pi = 0; pi < exp.poles.size(); ++pi) {
    const Rational& rho = exp.poles[pi].rho;
    for (std::size_t n = 1; n < exp.coeff[pi].size(); ++n) {
      const Complex& c = exp.coeff[pi][n];
      if (c.is_zero()) continue;
      const Complex a = coeff_A(exp.J, mu, z0, 1, n, rho, wp).value;
      lhs += c.round_to(wp) * a;
    }
  }

  Complex rhs(wp);
  if (mu == 0 && p.j_II == 0 && p.all_m_one()) {
    const int c = cos_pi_half(p.r());
    if (c != 0)
      rhs = Complex(Real(Rational(BigInt(-c) * p.a_product()), wp) *
                        pow_si(Real::pi(wp), static_cast<long>(p.r())),
                    Real(wp));
  }
  const PoleDatum at = integral_data_at(p, z0);
  const std::size_t s = at.integral_set.size();
  for (std::size_t mask = 0; mask < (1UL << s); ++mask) {
    int sign = 1;
    long sum_m = 0;
    std::vector<char> in_lambda(p.r(), 0);
    for (std::size_t i = 0; i < s; ++i) {
      if (!(mask & (1UL << i))) continue;
      const std::size_t l = at.integral_set[i];
      in_lambda[l] = 1;
      sum_m += static_cast<long>(p.m[l]);
      if (p.is_csc(l) && !integer_is_even(at.int_values[i])) sign = -sign;
    }
    std::vector<std::size_t> comp;
    for (std::size_t l = 0; l < p.r(); ++l)
      if (!in_lambda[l]) comp.push_back(l);
    Complex acc(wp);
    for (const auto& nu : weak_compositions(static_cast<long>(mu) + sum_m, comp.size())) {
      Complex prod(Real(1L, wp), Real(wp));
      bool zero = false;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        const Complex f = coeff_A(p.kind_of(comp[i]), nu[i], z0, p.a[comp[i]],
                                  p.m[comp[i]], p.w[comp[i]], wp)
                              .value;
        if (f.is_zero()) {
          zero = true;
          break;
        }
        prod *= f;
      }
      if (!zero) acc += prod;
    }
    if (sign < 0) acc = -acc;
    rhs += acc;
  }
  return {lhs.round_to(prec), rhs.round_to(prec)};
}

}  // namespace reciplab
