#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "reciplab/real.hpp"

namespace reciplab {

/// Arbitrary-precision complex number; both parts share one precision.
class Complex {
 public:
  explicit Complex(Precision prec = kDefaultPrecision) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {
    const Precision p = std::max(re_.prec(), im_.prec());
    if (re_.prec() != p) re_ = re_.round_to(p);
    if (im_.prec() != p) im_ = im_.round_to(p);
  }
  Complex(const Rational& re, Precision prec) : re_(re, prec), im_(prec) {}
  Complex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  Precision prec() const { return re_.prec(); }
  Complex round_to(Precision p) const { return Complex(re_.round_to(p), im_.round_to(p)); }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  Complex operator-() const { return Complex(-re_, -im_); }

  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
  }
  friend Complex operator*(const Complex& a, const Real& b) {
    return Complex(a.re_ * b, a.im_ * b);
  }
  friend Complex operator*(const Real& b, const Complex& a) { return a * b; }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real n = b.norm();
    return Complex((a.re_ * b.re_ + a.im_ * b.im_) / n,
                   (a.im_ * b.re_ - a.re_ * b.im_) / n);
  }
  friend Complex operator/(const Complex& a, const Real& b) {
    return Complex(a.re_ / b, a.im_ / b);
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }

  Complex conj() const { return Complex(re_, -im_); }
  /// |z|^2, exact squared modulus.
  Real norm() const { return re_ * re_ + im_ * im_; }
  Real abs() const { return hypot(re_, im_); }

  Complex inverse() const {
    const Real n = norm();
    return Complex(re_ / n, -im_ / n);
  }

  /// z^e by binary powering; e >= 0.
  Complex pow(unsigned long e) const {
    Complex acc(Real(1L, prec()), Real(prec()));
    Complex base = *this;
    while (e > 0) {
      if (e & 1UL) acc *= base;
      base *= base;
      e >>= 1UL;
    }
    return acc;
  }

  std::string str(int digits) const {
    const Real mag = im_.sign() < 0 ? -im_ : im_;
    return re_.str(digits) + (im_.sign() < 0 ? " - " : " + ") + mag.str(digits) + "i";
  }

 private:
  Real re_, im_;
};

/// |a - b| / max(1, |b|): the relative-error measure used by all verifiers.
inline Real rel_error(const Complex& a, const Complex& b) {
  const Real one(1L, std::max(a.prec(), b.prec()));
  return (a - b).abs() / max(one, b.abs());
}

}  // namespace reciplab
