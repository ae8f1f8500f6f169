#pragma once

#include <array>
#include <functional>
#include <vector>

#include "reciplab/complex.hpp"
#include "reciplab/phi.hpp"
#include "reciplab/rational.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

namespace detail {

/// RAII block of mpfr_t scratch registers at one precision.
class MpfrArray {
 public:
  MpfrArray(std::size_t n, Precision p) : n_(n), a_(new mpfr_t[n]) {
    for (std::size_t i = 0; i < n_; ++i) {
      mpfr_init2(a_[i], p);
      mpfr_set_zero(a_[i], 1);
    }
  }
  MpfrArray(const MpfrArray&) = delete;
  MpfrArray& operator=(const MpfrArray&) = delete;
  ~MpfrArray() {
    for (std::size_t i = 0; i < n_; ++i) mpfr_clear(a_[i]);
    delete[] a_;
  }
  mpfr_ptr operator[](std::size_t i) { return a_[i]; }

 private:
  std::size_t n_;
  mpfr_t* a_;
};

// in-place complex multiply: (ar, ai) *= (br, bi), with temps t1..t3
inline void cmul_inplace(mpfr_ptr ar, mpfr_ptr ai, mpfr_srcptr br, mpfr_srcptr bi,
                         mpfr_ptr t1, mpfr_ptr t2, mpfr_ptr t3) {
  mpfr_mul(t1, ar, br, MPFR_RNDN);
  mpfr_mul(t2, ai, bi, MPFR_RNDN);
  mpfr_sub(t1, t1, t2, MPFR_RNDN);
  mpfr_mul(t2, ar, bi, MPFR_RNDN);
  mpfr_mul(t3, ai, br, MPFR_RNDN);
  mpfr_add(ai, t2, t3, MPFR_RNDN);
  mpfr_set(ar, t1, MPFR_RNDN);
}

// (rr, ri) = 1 / (xr + i*xi)
inline void cinv(mpfr_ptr rr, mpfr_ptr ri, mpfr_srcptr xr, mpfr_srcptr xi,
                 mpfr_ptr t1, mpfr_ptr t2) {
  mpfr_sqr(t1, xr, MPFR_RNDN);
  mpfr_sqr(t2, xi, MPFR_RNDN);
  mpfr_add(t1, t1, t2, MPFR_RNDN);
  mpfr_div(rr, xr, t1, MPFR_RNDN);
  mpfr_div(ri, xi, t1, MPFR_RNDN);
  mpfr_neg(ri, ri, MPFR_RNDN);
}

}  // namespace detail

struct SeriesResult {
  Complex value;
  unsigned long truncation = 0;
  Real tail_bound;
};

/// Truncation bound for the symmetric partial sum of the defining series.
/// For N >= 2 the integral estimate 2 (N/(N-1)) (M-|z|)^{1-N}; for N = 1 the
/// cotangent family pairs (z+n) with (z-n) and gets 2|z|/(M-|z|), while the
/// cosecant family gains one more order from consecutive-pair cancellation,
/// 4|z|/(M-|z|)^2.
inline Real series_tail_bound(Kind J, unsigned long N, const Complex& z, unsigned long M) {
  const Precision p = z.prec();
  const Real az = z.abs();
  const Real mz = Real(M, p) - az;
  if (N >= 2) {
    const Real ratio = Real(static_cast<long>(N), p) / Real(static_cast<long>(N - 1), p);
    return Real(2L, p) * ratio * pow_si(mz, 1 - static_cast<long>(N));
  }
  if (J == Kind::I) return Real(2L, p) * az / mz;
  return Real(4L, p) * az / (mz * mz);
}

/// Symmetric partial sums 1/z^k + sum_{n=1}^{M} (-1)^{n delta_{J,II}}
/// [(z+n)^{-k} + (z-n)^{-k}] for all k = 1..n_max and both kinds in one
/// pass over n. Index the result as [J][k].
inline std::array<std::vector<Complex>, 2>
phi_series_batch(const Complex& z, unsigned long M, unsigned long n_max) {
  if (n_max == 0) throw Error("phi_series requires N >= 1");
  const Precision p = z.prec();
  {
    auto [xr, fl] = detail::reduce_mod_one(z.re());
    if (detail::dist_sq_to_lattice(xr, z.im()) < Real(1e-6, p))
      throw PoleProximityError("series point within 1e-3 of an integer");
  }
  if (Real(M, p) < Real(4L, p) * (z.abs() + Real(1L, p)))
    throw Error("series truncation M must be >= 4(|z|+1)");

  detail::MpfrArray ar(2 * (n_max + 1), p);  // acc kind I: re/im interleaved
  detail::MpfrArray br(2 * (n_max + 1), p);  // acc kind II
  detail::MpfrArray w(16, p);
  mpfr_ptr zpre = w[0], zmre = w[1], yim = w[2];
  mpfr_ptr upre = w[3], upim = w[4], umre = w[5], umim = w[6];
  mpfr_ptr ppr = w[7], ppi = w[8], pmr = w[9], pmi = w[10];
  mpfr_ptr t1 = w[11], t2 = w[12], t3 = w[13], sre = w[14], sim = w[15];

  mpfr_set(zpre, z.re().raw(), MPFR_RNDN);
  mpfr_set(zmre, z.re().raw(), MPFR_RNDN);
  mpfr_set(yim, z.im().raw(), MPFR_RNDN);

  // n = 0 term: powers of 1/z into both accumulators
  detail::cinv(upre, upim, zpre, yim, t1, t2);
  mpfr_set(ppr, upre, MPFR_RNDN);
  mpfr_set(ppi, upim, MPFR_RNDN);
  for (unsigned long k = 1; k <= n_max; ++k) {
    mpfr_set(ar[2 * k], ppr, MPFR_RNDN);
    mpfr_set(ar[2 * k + 1], ppi, MPFR_RNDN);
    mpfr_set(br[2 * k], ppr, MPFR_RNDN);
    mpfr_set(br[2 * k + 1], ppi, MPFR_RNDN);
    if (k < n_max) detail::cmul_inplace(ppr, ppi, upre, upim, t1, t2, t3);
  }

  for (unsigned long n = 1; n <= M; ++n) {
    mpfr_add_ui(zpre, zpre, 1, MPFR_RNDN);
    mpfr_sub_ui(zmre, zmre, 1, MPFR_RNDN);
    detail::cinv(upre, upim, zpre, yim, t1, t2);
    detail::cinv(umre, umim, zmre, yim, t1, t2);
    mpfr_set(ppr, upre, MPFR_RNDN);
    mpfr_set(ppi, upim, MPFR_RNDN);
    mpfr_set(pmr, umre, MPFR_RNDN);
    mpfr_set(pmi, umim, MPFR_RNDN);
    const bool odd = (n & 1UL) != 0;
    for (unsigned long k = 1; k <= n_max; ++k) {
      mpfr_add(sre, ppr, pmr, MPFR_RNDN);
      mpfr_add(sim, ppi, pmi, MPFR_RNDN);
      mpfr_add(ar[2 * k], ar[2 * k], sre, MPFR_RNDN);
      mpfr_add(ar[2 * k + 1], ar[2 * k + 1], sim, MPFR_RNDN);
      if (odd) {
        mpfr_sub(br[2 * k], br[2 * k], sre, MPFR_RNDN);
        mpfr_sub(br[2 * k + 1], br[2 * k + 1], sim, MPFR_RNDN);
      } else {
        mpfr_add(br[2 * k], br[2 * k], sre, MPFR_RNDN);
        mpfr_add(br[2 * k + 1], br[2 * k + 1], sim, MPFR_RNDN);
      }
      if (k < n_max) {
        detail::cmul_inplace(ppr, ppi, upre, upim, t1, t2, t3);
        detail::cmul_inplace(pmr, pmi, umre, umim, t1, t2, t3);
      }
    }
  }

  std::array<std::vector<Complex>, 2> out;
  for (int j = 0; j < 2; ++j) out[j].assign(n_max + 1, Complex(p));
  for (unsigned long k = 1; k <= n_max; ++k) {
    Real re(p), im(p);
    mpfr_set(re.raw(), ar[2 * k], MPFR_RNDN);
    mpfr_set(im.raw(), ar[2 * k + 1], MPFR_RNDN);
    out[0][k] = Complex(re, im);
    mpfr_set(re.raw(), br[2 * k], MPFR_RNDN);
    mpfr_set(im.raw(), br[2 * k + 1], MPFR_RNDN);
    out[1][k] = Complex(re, im);
  }
  return out;
}

/// Brute-force evaluation of phi_N^{(J)}(z) by the truncated defining series.
inline SeriesResult phi_series(Kind J, unsigned long N, const Complex& z, unsigned long M) {
  auto sums = phi_series_batch(z, M, N);
  return SeriesResult{sums[J == Kind::I ? 0 : 1][N], M, series_tail_bound(J, N, z, M)};
}

/// Trapezoidal contour extraction of the order-`order` Laurent coefficient of
/// f at z0 on the circle |z - z0| = radius. Nodes double (reusing previous
/// evaluations) until two successive values agree to 2^{-P/2} relative, up
/// to 2^16 nodes.
inline Complex contour_coefficient(const std::function<Complex(const Complex&)>& f,
                                   const Rational& z0, long order,
                                   const Rational& radius, unsigned long nodes,
                                   Precision prec) {
  if (nodes < 256 || (nodes & (nodes - 1)) != 0)
    throw UsageError("contour nodes must be a power of two >= 256");
  if (radius <= Rational(0)) throw UsageError("contour radius must be positive");
  constexpr unsigned long kMaxNodes = 1UL << 16;
  const Precision wp = prec + detail::kGuardBits;
  const Real tol = Real::exp2i(-static_cast<long>(prec / 2), wp);
  const Real r(radius, wp);
  const Real rpow = pow_si(r, -order);
  const Real two_pi = Real(2L, wp) * Real::pi(wp);
  const Complex center(z0, wp);

  // node value: f(z0 + R e^{i t}) e^{-i order t}, t = 2 pi k / K
  const auto node = [&](unsigned long k, unsigned long K) {
    Real t = two_pi * Real(k, wp) / Real(K, wp);
    Real s(wp), c(wp);
    sin_cos(s, c, t);
    const Complex zk = center + Complex(r * c, r * s);
    Real ws(wp), wc(wp);
    sin_cos(ws, wc, t * Real(-order, wp));
    return f(zk) * Complex(wc, ws);
  };

  unsigned long K = nodes;
  Complex running(wp);
  for (unsigned long k = 0; k < K; ++k) running += node(k, K);
  Complex prev = running * rpow / Real(K, wp);
  while (2 * K <= kMaxNodes) {
    K *= 2;
    for (unsigned long k = 1; k < K; k += 2) running += node(k, K);
    const Complex cur = running * rpow / Real(K, wp);
    if ((cur - prev).abs() <= tol * max(Real(1L, wp), cur.abs()))
      return cur.round_to(prec);
    prev = cur;
  }
  throw NoConvergenceError("contour integral did not stabilize at 2^16 nodes");
}

/// Central-difference residual |(phi(z+h) - phi(z-h)) / 2h + N phi_{N+1}(z)|;
/// O(h^2) when the derivation ladder holds.
inline Real finite_diff_check(Kind J, unsigned long N, const Complex& z, const Real& h) {
  const Precision p = z.prec();
  {
    auto [xr, fl] = detail::reduce_mod_one(z.re());
    const Real d2 = detail::dist_sq_to_lattice(xr, z.im());
    const Real lim = Real(10L, p) * h;
    if (d2 < lim * lim) throw PoleProximityError("finite difference too close to a pole");
  }
  const Complex hp(h, Real(p));
  const Complex fp = phi(J, N, z + hp);
  const Complex fm = phi(J, N, z - hp);
  const Complex deriv = (fp - fm) / (Real(2L, p) * h);
  const Complex ladder = Real(static_cast<long>(N), p) * phi(J, N + 1, z);
  return (deriv + ladder).abs();
}

}  // namespace reciplab
