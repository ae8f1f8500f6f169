#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "reciplab/types.hpp"

namespace reciplab {

using BigInt = mpz_class;

/// Exact fraction of arbitrary-size integers, always kept in lowest terms
/// with a positive denominator.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}          // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : v_(n) {} // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) { normalize(); }
  Rational(const BigInt& num, const BigInt& den) : v_(num, den) { normalize(); }

  /// Parses "num", "num/den" or "-num/den". Throws UsageError on bad input.
  static Rational parse(std::string_view s) {
    std::string t(s);
    if (t.empty()) throw UsageError("empty rational literal");
    const auto slash = t.find('/');
    try {
      if (slash == std::string::npos) return Rational(BigInt(t), BigInt(1));
      BigInt num(t.substr(0, slash));
      BigInt den(t.substr(slash + 1));
      if (den == 0) throw UsageError("zero denominator: " + t);
      return Rational(num, den);
    } catch (const std::invalid_argument&) {
      throw UsageError("bad rational literal: " + t);
    }
  }

  const BigInt numerator() const { return v_.get_num(); }
  const BigInt denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Largest integer <= *this.
  BigInt floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
  }

  /// Fractional part, in [0, 1).
  Rational frac() const { return *this - Rational(floor()); }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  int sign() const { return sgn(v_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  std::string str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  mpq_srcptr mpq() const { return v_.get_mpq_t(); }

 private:
  void normalize() {
    if (v_.get_den() == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
  }

  mpq_class v_;
};

/// True iff the (exact) value x is an even integer; x must be an integer.
inline bool integer_is_even(const BigInt& x) { return mpz_even_p(x.get_mpz_t()) != 0; }

/// (-1)^x for an exact integer x.
inline int parity_sign(const BigInt& x) { return integer_is_even(x) ? 1 : -1; }

}  // namespace reciplab
