#pragma once

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

#include "reciplab/dedekind.hpp"
#include "reciplab/oracle.hpp"
#include "reciplab/special.hpp"

namespace reciplab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  long wall_time_ms = 0;
};

namespace detail {

inline long elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(
             std::chrono::steady_clock::now() - start)
      .count();
}

inline std::string err_str(const Real& r) { return r.str(6); }

}  // namespace detail

/// Randomized parameter family: r in {2,3,4}, a_l <= 6, m_l <= 3, shift
/// denominators <= 8, all block splits.
inline std::vector<Params> acceptance_family(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<Params> family;
  family.reserve(count);
  while (family.size() < count) {
    const std::size_t r = 2 + rng.below(3);
    Params p;
    for (std::size_t l = 0; l < r; ++l) {
      p.a.push_back(1 + rng.below(6));
      p.m.push_back(1 + rng.below(3));
      const unsigned long den = 1 + rng.below(8);
      p.w.push_back(Rational(BigInt(rng.below(den)), BigInt(den)));
    }
    p.j_I = static_cast<unsigned>(rng.below(r + 1));
    p.j_II = static_cast<unsigned>(r) - p.j_I;
    family.push_back(std::move(p));
  }
  return family;
}

/// 1. Closed-form kernel vs the truncated bilateral series on the band.
inline CriterionResult criterion_kernel_oracle(Precision prec, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{1, "kernel-oracle agreement", true, "", 0};
  Rng rng(seed);
  constexpr unsigned long kTrunc = 10000;
  Real worst(prec);  // max err/bound ratio
  for (int i = 0; i < 100; ++i) {
    const Complex z(rng.uniform01(), 0.1 + 0.9 * rng.uniform01(), prec);
    const auto sums = phi_series_batch(z, kTrunc, 6);
    for (Kind j : {Kind::I, Kind::II}) {
      for (unsigned long n = 1; n <= 6; ++n) {
        const Real bound = series_tail_bound(j, n, z, kTrunc);
        const Real err = (phi(j, n, z) - sums[j == Kind::I ? 0 : 1][n]).abs();
        if (err > bound) res.passed = false;
        const Real ratio = err / bound;
        if (ratio > worst) worst = ratio;
      }
    }
  }
  res.wall_time_ms = detail::elapsed_ms(start);
  if (res.wall_time_ms > 30000) res.passed = false;
  res.detail = "max err/tail_bound = " + detail::err_str(worst) + ", " +
               std::to_string(res.wall_time_ms) + " ms (budget 30000)";
  return res;
}

/// 2. Product-to-sum identity across the randomized family.
inline CriterionResult criterion_master_identity(Precision prec, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{2, "product-to-sum identity on the family", true, "", 0};
  const auto family = acceptance_family(seed, 50);
  SamplePolicy sp;
  sp.seed = seed;
  Real worst(prec);
  int case_i = 0, case_ii = 0;
  for (const Params& p : family) {
    (classify_case(p) == Kind::I ? case_i : case_ii)++;
    const VerificationReport rep = verify_identity(p, sp, prec, 128);
    if (!rep.passed) res.passed = false;
    if (rep.max_rel_err > worst) worst = rep.max_rel_err;
  }
  if (case_i == 0 || case_ii == 0) res.passed = false;
  res.wall_time_ms = detail::elapsed_ms(start);
  if (res.wall_time_ms > 120000) res.passed = false;
  res.detail = "max rel err = " + detail::err_str(worst) + " (tol 2^-128), cases I/II = " +
               std::to_string(case_i) + "/" + std::to_string(case_ii) + ", " +
               std::to_string(res.wall_time_ms) + " ms (budget 120000)";
  return res;
}

/// 3. Depth-one reciprocity over the family's Case I members, plus the
/// exact hand instance a = (1,1,1), m = 1: lhs = -pi^2.
inline CriterionResult criterion_depth_one(Precision prec, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{3, "depth-one reciprocity sums", true, "", 0};
  const auto family = acceptance_family(seed, 50);
  const Real one(1L, prec);
  const Real tol = Real::exp2i(-128, prec);
  Real worst(prec);
  int checked = 0;
  for (const Params& p : family) {
    if (classify_case(p) != Kind::I) continue;  // the law's domain
    ++checked;
    const auto [lhs, rhs] = reciprocity_sum(p, prec);
    const Real rhs_val = pi_scaled_value(rhs, prec);
    const Real rhs_abs = rhs_val.sign() < 0 ? -rhs_val : rhs_val;
    const Real err = (lhs - Complex(rhs_val, Real(prec))).abs() / (one + rhs_abs);
    if (err > tol) res.passed = false;
    if (err > worst) worst = err;
  }
  Params hand;
  hand.a = {1, 1, 1};
  hand.m = {1, 1, 1};
  hand.w = {Rational(0), Rational(0), Rational(0)};
  hand.j_I = 3;
  hand.j_II = 0;
  const auto [hl, hr] = reciprocity_sum(hand, prec);
  const Real pi_sq = Real::pi(prec) * Real::pi(prec);
  const bool hand_ok = (hl + Complex(pi_sq, Real(prec))).abs() <= Real::exp2i(-200, prec) &&
                       hr.coeff == Rational(-1) && hr.pi_power == 2;
  if (!hand_ok) res.passed = false;
  res.wall_time_ms = detail::elapsed_ms(start);
  res.detail = "max rel err = " + detail::err_str(worst) + " over " + std::to_string(checked) +
               " Case I members; exact hand case " + (hand_ok ? "ok" : "FAILED");
  return res;
}

/// 4. Laurent-coefficient reciprocity against the contour oracle for ten
/// family members, orders mu <= 3, centers {0, 1/5, 1/2}. Both sides must
/// agree and match the contour coefficient of Phi (minus the constant term
/// of the sum side at order 0).
inline CriterionResult criterion_laurent(Precision prec, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{4, "Laurent coefficient reciprocity", true, "", 0};
  const auto family = acceptance_family(seed, 10);
  const Real one(1L, prec);
  const Real tol = Real::exp2i(-100, prec);
  Real worst(prec);
  for (const Params& p : family) {
    const auto poles = enumerate_poles(p);
    const Complex constant = build_psi_expansion(p, prec).constant;
    for (const Rational& z0 : {Rational(0), Rational(1, 5), Rational(1, 2)}) {
      Rational dist(1);
      for (const PoleDatum& d : poles)
        for (long shift = -1; shift <= 1; ++shift) {
          const Rational dd = (z0 - d.rho - Rational(shift)).abs();
          if (!dd.is_zero() && dd < dist) dist = dd;
        }
      const auto f = [&](const Complex& z) { return eval_Phi(p, z); };
      for (unsigned long mu = 0; mu <= 3; ++mu) {
        const auto [lhs, rhs] = laurent_reciprocity(p, z0, mu, prec);
        Real err = (lhs - rhs).abs() / max(one, rhs.abs());
        if (err > worst) worst = err;
        if (err > tol) res.passed = false;
        Complex expected =
            contour_coefficient(f, z0, static_cast<long>(mu), dist / Rational(2), 256, prec);
        if (mu == 0) expected -= constant;
        err = (lhs - expected).abs() / max(one, expected.abs());
        if (err > worst) worst = err;
        if (err > tol) res.passed = false;
      }
    }
  }
  res.wall_time_ms = detail::elapsed_ms(start);
  res.detail = "max rel err = " + detail::err_str(worst) + " (tol 2^-100), " +
               std::to_string(res.wall_time_ms) + " ms";
  return res;
}

/// 5. Apostol reciprocity: the exact k = 0 value at two precisions and the
/// higher laws for k = 1, 2.
inline CriterionResult criterion_apostol(Precision prec) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{5, "Apostol reciprocity", true, "", 0};
  const Complex s_hi = apostol_sum(1, 2, 3, prec) + apostol_sum(1, 3, 2, prec);
  const Real target(Rational(-1, 18), prec);
  const bool hi_ok = (s_hi - Complex(target, Real(prec))).abs() <= Real(1e-30, prec);
  const Complex s_lo = apostol_sum(1, 2, 3, 53) + apostol_sum(1, 3, 2, 53);
  const bool lo_ok = (s_lo - Complex(Real(Rational(-1, 18), 53), Real(53))).abs() <= Real(1e-12, 53);
  if (!hi_ok || !lo_ok) res.passed = false;
  Real worst(prec);
  for (unsigned long k : {1UL, 2UL}) {
    for (auto [p, q] : {std::pair<unsigned long, unsigned long>{2, 3}, {3, 4}, {5, 7}}) {
      const VerificationReport rep = apostol_reciprocity(k, p, q, prec, 100);
      if (!rep.passed) res.passed = false;
      if (rep.max_rel_err > worst) worst = rep.max_rel_err;
    }
  }
  res.wall_time_ms = detail::elapsed_ms(start);
  res.detail = std::string("s_1 exact case ") + (hi_ok && lo_ok ? "ok" : "FAILED") +
               ", higher laws max rel err = " + detail::err_str(worst) + " (tol 2^-100)";
  return res;
}

/// 6. The five classical two-factor formulas at z = 0.37 + 0.21i over the
/// parity-admissible (p, q) pairs.
inline CriterionResult criterion_fukuhara(Precision prec) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{6, "classical two-factor formulas", true, "", 0};
  const Complex z(0.37, 0.21, prec);
  Real worst(prec);
  int runs = 0;
  for (auto [p, q] : {std::pair<unsigned long, unsigned long>{1, 1}, {3, 2}, {2, 3}, {3, 5}}) {
    for (int c = 0; c <= 4; ++c) {
      const bool admissible = c == 0 || (c == 1 && q % 2 == 0) || (c == 2 && q % 2 == 1) ||
                              (c == 3 && (p + q) % 2 == 0) || (c == 4 && (p + q) % 2 == 1);
      if (!admissible) continue;
      ++runs;
      const VerificationReport rep = fukuhara_instance(c, p, q, z, prec, 128);
      if (!rep.passed) res.passed = false;
      if (rep.max_rel_err > worst) worst = rep.max_rel_err;
    }
  }
  res.wall_time_ms = detail::elapsed_ms(start);
  res.detail = "max rel err = " + detail::err_str(worst) + " (tol 2^-128) over " +
               std::to_string(runs) + " instances";
  return res;
}

/// 7. Zagier reciprocity for a = (2,3,5), both kinds, plus the exact
/// M_1 = -pi^2 identity at a = (1,1,1).
inline CriterionResult criterion_zagier(Precision prec) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{7, "Zagier reciprocity", true, "", 0};
  const VerificationReport cot = zagier_reciprocity({2, 3, 5}, 3, 0, prec, 100);
  const VerificationReport csc = zagier_reciprocity({2, 3, 5}, 0, 3, prec, 100);
  Params unit;
  unit.a = {1, 1, 1};
  unit.m = {1, 1, 1};
  unit.w = {Rational(0), Rational(0), Rational(0)};
  unit.j_I = 3;
  unit.j_II = 0;
  const ACoeff m1 = M_coefficient(unit, 1, prec);
  const bool exact_ok = m1.exact_part.has_value() && m1.exact_part->coeff == Rational(-1) &&
                        m1.exact_part->pi_power == 2;
  res.passed = cot.passed && csc.passed && exact_ok;
  const Real worst = max(cot.max_rel_err, csc.max_rel_err);
  res.wall_time_ms = detail::elapsed_ms(start);
  res.detail = "max rel err = " + detail::err_str(worst) + " (tol 2^-100); exact M_1 " +
               (exact_ok ? "ok" : "FAILED");
  return res;
}

/// 8. Negative controls: a flipped pole sign factor or a dropped full
/// integral subset must break the identity on at least 90% of the family.
inline CriterionResult criterion_negative_controls(Precision prec, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult res{8, "negative controls", true, "", 0};
  const auto family = acceptance_family(seed, 50);
  SamplePolicy sp;
  sp.seed = seed;
  sp.count = 5;
  int flip_failed = 0, drop_failed = 0;
  for (const Params& p : family) {
    PsiCorruption corr;
    corr.kind = CorruptionKind::flip_sign;
    if (!verify_identity(p, sp, prec, 128, corr).passed) ++flip_failed;
    corr.kind = CorruptionKind::drop_subset;
    if (!verify_identity(p, sp, prec, 128, corr).passed) ++drop_failed;
  }
  const int n = static_cast<int>(family.size());
  if (flip_failed * 10 < n * 9 || drop_failed * 10 < n * 9) res.passed = false;
  res.wall_time_ms = detail::elapsed_ms(start);
  res.detail = "flip broke " + std::to_string(flip_failed) + "/" + std::to_string(n) +
               ", drop broke " + std::to_string(drop_failed) + "/" + std::to_string(n) +
               " (need >= 90%)";
  return res;
}

/// Runs criteria 1-8, streaming one pass/fail line per criterion.
inline std::vector<CriterionResult> run_selftest(Precision prec, std::uint64_t seed,
                                                 std::ostream* progress) {
  std::vector<CriterionResult> results;
  const auto run = [&](CriterionResult r) {
    if (progress)
      *progress << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                << " -- " << r.detail << "\n";
    results.push_back(std::move(r));
  };
  run(criterion_kernel_oracle(prec, seed));
  run(criterion_master_identity(prec, seed));
  run(criterion_depth_one(prec, seed));
  run(criterion_laurent(prec, seed));
  run(criterion_apostol(prec));
  run(criterion_fukuhara(prec));
  run(criterion_zagier(prec));
  run(criterion_negative_controls(prec, seed));
  return results;
}

}  // namespace reciplab
