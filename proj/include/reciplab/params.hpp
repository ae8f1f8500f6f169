#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "reciplab/rational.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

/// Input tuple (r, a, m, w, j) of the identity engine. Factor indices are
/// 0-based; the first j_I factors are cotangent-kind, the rest cosecant-kind.
struct Params {
  std::vector<unsigned long> a;
  std::vector<unsigned long> m;
  std::vector<Rational> w;
  unsigned j_I = 0;
  unsigned j_II = 0;

  std::size_t r() const { return a.size(); }

  Kind kind_of(std::size_t l) const { return l < j_I ? Kind::I : Kind::II; }

  bool is_csc(std::size_t l) const { return l >= j_I; }

  unsigned long total_m() const {
    return std::accumulate(m.begin(), m.end(), 0UL);
  }

  bool all_m_one() const {
    for (unsigned long ml : m)
      if (ml != 1) return false;
    return true;
  }

  BigInt a_product() const {
    BigInt p(1);
    for (unsigned long al : a) p *= BigInt(al);
    return p;
  }

  void validate() const {
    const std::size_t n = r();
    if (n < 2) throw UsageError("need at least two factors");
    if (m.size() != n || w.size() != n)
      throw UsageError("a, m, w must have equal lengths");
    if (j_I + j_II != n) throw UsageError("j_I + j_II must equal the factor count");
    for (unsigned long al : a)
      if (al < 1) throw UsageError("factors a_l must be >= 1");
    for (unsigned long ml : m)
      if (ml < 1) throw UsageError("orders m_l must be >= 1");
    for (const Rational& wl : w)
      if (wl < Rational(0) || wl >= Rational(1))
        throw UsageError("shifts w_l must lie in [0,1), got " + wl.str());
  }
};

/// Case dichotomy: Case I when there is no cosecant block or the sum of a_l
/// over the cosecant block is even; Case II when that sum is odd.
inline Kind classify_case(const Params& p) {
  if (p.j_II == 0) return Kind::I;
  unsigned long s = 0;
  for (std::size_t l = p.j_I; l < p.r(); ++l) s += p.a[l];
  return s % 2 == 0 ? Kind::I : Kind::II;
}

/// cos(pi r / 2) and sin(pi r / 2) as exact integers in {-1, 0, 1}.
inline int cos_pi_half(unsigned long r) {
  switch (r % 4) {
    case 0: return 1;
    case 2: return -1;
    default: return 0;
  }
}

inline int sin_pi_half(unsigned long r) {
  switch (r % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

}  // namespace reciplab
