#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include <mpfr.h>

#include "reciplab/rational.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

/// Arbitrary-precision binary float. Every value carries its precision;
/// arithmetic rounds to the larger precision of the operands.
class Real {
 public:
  explicit Real(Precision prec = kDefaultPrecision) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(long x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  Real(unsigned long x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_ui(v_, x, MPFR_RNDN);
  }
  Real(double x, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  Real(const Rational& q, Precision prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, q.mpq(), MPFR_RNDN);
  }
  /// Parses a decimal literal at the given precision.
  Real(const std::string& s, Precision prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw UsageError("bad numeric literal: " + s);
  }

  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, kMinPrecision);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real pi(Precision prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }
  /// Exact power of two, 2^e.
  static Real exp2i(long e, Precision prec) {
    Real r(1L, prec);
    mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
    return r;
  }

  Precision prec() const { return mpfr_get_prec(v_); }

  /// Same value rounded to a new precision.
  Real round_to(Precision prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigInt floor_int() const {
    Real f(prec());
    mpfr_floor(f.v_, v_);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), f.v_, MPFR_RNDN);
    return z;
  }

  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
#define RECIPLAB_REAL_BINOP(op, fn)                                   \
  friend Real operator op(const Real& a, const Real& b) {            \
    Real r(std::max(a.prec(), b.prec()));                            \
    fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                 \
    return r;                                                        \
  }                                                                  \
  friend Real operator op(const Real& a, long b) {                   \
    Real r(a.prec());                                                \
    fn##_si(r.v_, a.v_, b, MPFR_RNDN);                               \
    return r;                                                        \
  }                                                                  \
  Real& operator op##=(const Real& b) {                              \
    if (b.prec() > prec()) *this = this->round_to(b.prec());         \
    fn(v_, v_, b.v_, MPFR_RNDN);                                     \
    return *this;                                                    \
  }
  RECIPLAB_REAL_BINOP(+, mpfr_add)
  RECIPLAB_REAL_BINOP(-, mpfr_sub)
  RECIPLAB_REAL_BINOP(*, mpfr_mul)
  RECIPLAB_REAL_BINOP(/, mpfr_div)
#undef RECIPLAB_REAL_BINOP

  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

  friend Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  friend Real hypot(const Real& a, const Real& b) {
    Real r(std::max(a.prec(), b.prec()));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend void sin_cos(Real& s, Real& c, const Real& a) {
    mpfr_sin_cos(s.v_, c.v_, a.v_, MPFR_RNDN);
  }
  friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }

  /// Decimal string with the given number of significant digits
  /// (scientific notation, round-trippable at that digit count).
  std::string str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
};

/// Significant decimal digits needed to faithfully represent `prec` bits.
inline int decimal_digits(Precision prec) {
  return static_cast<int>(prec * 0.30103) + 3;
}

}  // namespace reciplab
