#pragma once

#include <deque>
#include <mutex>
#include <vector>

#include "reciplab/complex.hpp"
#include "reciplab/rational.hpp"
#include "reciplab/types.hpp"

namespace reciplab {

/// Univariate polynomial with exact rational coefficients in c = cot(pi z).
/// Trailing zero coefficients are trimmed; P_N and Q_N are parity-pure
/// (only degrees of one parity occur).
class TrigPoly {
 public:
  TrigPoly() = default;
  explicit TrigPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }

  const Rational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : Rational(0);
  }

  TrigPoly derivative() const {
    if (c_.size() <= 1) return TrigPoly{};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
      d[k - 1] = Rational(BigInt(static_cast<long>(k))) * c_[k];
    return TrigPoly(std::move(d));
  }

  /// (1 + c^2) * this.
  TrigPoly mul_one_plus_sq() const {
    if (c_.empty()) return TrigPoly{};
    std::vector<Rational> g(c_.size() + 2, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) {
      g[k] += c_[k];
      g[k + 2] += c_[k];
    }
    return TrigPoly(std::move(g));
  }

  /// c * this.
  TrigPoly mul_c() const {
    if (c_.empty()) return TrigPoly{};
    std::vector<Rational> g(c_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) g[k + 1] = c_[k];
    return TrigPoly(std::move(g));
  }

  TrigPoly operator+(const TrigPoly& o) const {
    std::vector<Rational> g(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t k = 0; k < c_.size(); ++k) g[k] += c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) g[k] += o.c_[k];
    return TrigPoly(std::move(g));
  }

  TrigPoly div_int(long n) const {
    std::vector<Rational> g(c_);
    for (auto& x : g) x /= Rational(n);
    return TrigPoly(std::move(g));
  }

  friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.c_ == b.c_; }

  /// Horner evaluation split by parity: f(c) = E(c^2) + c * O(c^2).
  Complex eval(const Complex& c) const {
    const Precision p = c.prec();
    if (c_.empty()) return Complex(p);
    const Complex c2 = c * c;
    Complex even(p), odd(p);
    bool even_any = false, odd_any = false;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (k % 2 == 0) {
        even = even_any ? even * c2 + Complex(c_[k], p) : Complex(c_[k], p);
        even_any = true;
      } else {
        odd = odd_any ? odd * c2 + Complex(c_[k], p) : Complex(c_[k], p);
        odd_any = true;
      }
    }
    if (!odd_any) return even;
    if (!even_any) return c * odd;
    return even + c * odd;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

namespace detail {

// Memo tables; deque keeps references stable across growth.
inline const TrigPoly& trig_poly_table(unsigned long n, bool cot) {
  static std::deque<TrigPoly> cots{TrigPoly({Rational(0), Rational(1)})};  // P_1 = c
  static std::deque<TrigPoly> cscs{TrigPoly({Rational(1)})};               // Q_1 = 1
  static std::mutex lock;
  std::scoped_lock guard(lock);
  auto& table = cot ? cots : cscs;
  while (table.size() < n) {
    const long nn = static_cast<long>(table.size());
    const TrigPoly& f = table.back();
    if (cot) {
      table.push_back(f.derivative().mul_one_plus_sq().div_int(nn));
    } else {
      table.push_back((f.mul_c() + f.derivative().mul_one_plus_sq()).div_int(nn));
    }
  }
  return table[n - 1];
}

}  // namespace detail

/// P_N with phi_N^{(I)}(z) = pi^N P_N(cot pi z);
/// P_1 = c, P_{N+1} = (1+c^2) P_N' / N.
inline const TrigPoly& cot_poly(unsigned long N) {
  if (N == 0) throw Error("cot_poly requires N >= 1");
  return detail::trig_poly_table(N, true);
}

/// Q_N with phi_N^{(II)}(z) = pi^N csc(pi z) Q_N(cot pi z);
/// Q_1 = 1, Q_{N+1} = [c Q_N + (1+c^2) Q_N'] / N.
inline const TrigPoly& csc_poly(unsigned long N) {
  if (N == 0) throw Error("csc_poly requires N >= 1");
  return detail::trig_poly_table(N, false);
}

}  // namespace reciplab
