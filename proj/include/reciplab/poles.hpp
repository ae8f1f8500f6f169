#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "reciplab/params.hpp"
#include "reciplab/rational.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

/// A candidate pole rho = (w_v + mu_v) / a_v in [0,1) together with the set
/// of factor indices whose shifted argument a_l rho - w_l is an integer.
/// Factors outside the set are regular at rho.
struct PoleDatum {
  Rational rho;
  std::vector<std::size_t> integral_set;  // ascending, 0-based
  std::vector<BigInt> int_values;         // a_l rho - w_l for l in integral_set
};

/// Exact decision of a*z0 - w in Z, with the integer value when true.
struct ShiftTest {
  bool is_integral = false;
  BigInt integer_value;
};

inline ShiftTest shift_test(unsigned long a, const Rational& w, const Rational& z0) {
  const Rational t = Rational(BigInt(a)) * z0 - w;
  if (!t.is_integer()) return {};
  return ShiftTest{true, t.numerator()};
}

/// Integral data of the map l -> a_l x - w_l at an arbitrary rational x.
inline PoleDatum integral_data_at(const Params& p, const Rational& x) {
  PoleDatum d;
  d.rho = x;
  for (std::size_t l = 0; l < p.r(); ++l) {
    const ShiftTest t = shift_test(p.a[l], p.w[l], x);
    if (t.is_integral) {
      d.integral_set.push_back(l);
      d.int_values.push_back(t.integer_value);
    }
  }
  return d;
}

/// Deduplicated candidate poles { (w_v + mu_v)/a_v } in [0,1), each with its
/// full integral set, sorted ascending.
inline std::vector<PoleDatum> enumerate_poles(const Params& p) {
  std::map<Rational, bool> seen;
  for (std::size_t v = 0; v < p.r(); ++v)
    for (unsigned long mu = 0; mu < p.a[v]; ++mu)
      seen.emplace((p.w[v] + Rational(BigInt(mu))) / Rational(BigInt(p.a[v])), true);
  std::vector<PoleDatum> out;
  out.reserve(seen.size());
  for (const auto& [rho, _] : seen) out.push_back(integral_data_at(p, rho));
  return out;
}

/// Sharing count d_v^{(mu)} at the node (w_v + mu)/a_v; equals |S_rho|.
inline unsigned multiplicity_d(const Params& p, std::size_t v, unsigned long mu) {
  if (v >= p.r() || mu >= p.a[v]) throw UsageError("multiplicity_d index out of range");
  const Rational rho = (p.w[v] + Rational(BigInt(mu))) / Rational(BigInt(p.a[v]));
  return static_cast<unsigned>(integral_data_at(p, rho).integral_set.size());
}

/// All 2^{|S_rho|} subsets of the integral set, including the empty one.
/// Downstream composition filters decide which contribute.
inline std::vector<std::vector<std::size_t>> residue_subsets(const PoleDatum& d) {
  const std::size_t n = d.integral_set.size();
  std::vector<std::vector<std::size_t>> out;
  out.reserve(1UL << n);
  for (std::size_t mask = 0; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) s.push_back(d.integral_set[i]);
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::size_t> subset_complement(std::size_t r,
                                                  const std::vector<std::size_t>& lambda) {
  std::vector<std::size_t> out;
  out.reserve(r - lambda.size());
  for (std::size_t l = 0; l < r; ++l)
    if (!std::binary_search(lambda.begin(), lambda.end(), l)) out.push_back(l);
  return out;
}

/// All nonnegative integer tuples of the given length summing to `total`,
/// in lexicographic order. Empty when total < 0; the single empty tuple when
/// length 0 and total 0.
inline std::vector<std::vector<unsigned long>> weak_compositions(long total, std::size_t parts) {
  std::vector<std::vector<unsigned long>> out;
  if (total < 0) return out;
  if (parts == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<unsigned long> cur(parts, 0);
  const auto rec = [&](auto&& self, std::size_t idx, long rest) -> void {
    if (idx + 1 == parts) {
      cur[idx] = static_cast<unsigned long>(rest);
      out.push_back(cur);
      return;
    }
    for (long v = 0; v <= rest; ++v) {
      cur[idx] = static_cast<unsigned long>(v);
      self(self, idx + 1, rest - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

/// Composition sets pairing pole orders with Taylor offsets: the tuples
/// (nu_k) over the complement of Lambda with
///   sum nu_k = sum_{l in Lambda} m_l - n   (sign '-')
///   sum nu_k = mu + sum_{l in Lambda} m_l  (sign '+').
/// Tuples are aligned with subset_complement(r, lambda).
inline std::vector<std::vector<unsigned long>> compositions_K(
    long target, char sign, const std::vector<std::size_t>& lambda, const Params& p) {
  if (sign != '+' && sign != '-') throw UsageError("composition sign must be '+' or '-'");
  long sum_m = 0;
  for (std::size_t l : lambda) sum_m += static_cast<long>(p.m[l]);
  const long total = sign == '-' ? sum_m - target : sum_m + target;
  return weak_compositions(total, p.r() - lambda.size());
}

}  // namespace reciplab
