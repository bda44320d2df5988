#pragma once

#include "qflag/laurent.hpp"

namespace qflag {

/// Quotient of two Laurent polynomials, reduced by gcd, denominator comonic
/// (min exponent 0, trailing coefficient 1).  Used only transiently inside
/// Gauss-Jordan elimination and coordinate solving; results are converted
/// back to Laurent by exact division.
class Fraction {
 public:
  Fraction() : num_(), den_(Laurent::one()) {}
  explicit Fraction(Laurent n) : num_(std::move(n)), den_(Laurent::one()) {}
  Fraction(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Fraction operator-() const { return raw(-num_, den_); }
  friend Fraction operator+(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator-(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Fraction operator*(const Fraction& a, const Fraction& b) {
    return Fraction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Fraction operator/(const Fraction& a, const Fraction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero fraction");
    return Fraction(a.num_ * b.den_, a.den_ * b.num_);
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Exact conversion; throws if the value is not a Laurent polynomial.
  Laurent to_laurent() const { return exact_div(num_, den_); }
  bool is_laurent() const {
    Laurent tmp;
    return try_exact_div(num_, den_, tmp);
  }

 private:
  static Fraction raw(Laurent n, Laurent d) {
    Fraction f;
    f.num_ = std::move(n);
    f.den_ = std::move(d);
    return f;
  }

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    if (num_.is_zero()) {
      den_ = Laurent::one();
      return;
    }
    Laurent g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
    // divide out the unit part of the denominator
    int m = den_.min_exp();
    Laurent u = Laurent::term(den_.coeff(m), m);
    num_ = exact_div(num_, u);
    den_ = exact_div(den_, u);
  }

  Laurent num_, den_;
};

}  // namespace qflag
