#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qflag {

// Arbitrary-precision rational, always canonical (reduced, positive denominator).
using Rational = mpq_class;

Rational rational_from_string(const std::string& s);
std::string rational_to_string(const Rational& r);

/// Element of Q[v, v^-1], v = q^{1/2}.  Sparse exponent -> coefficient map,
/// no zero coefficients stored, so equality is plain map equality.
class Laurent {
 public:
  Laurent() = default;
  explicit Laurent(const Rational& c) {
    if (c != 0) terms_[0] = c;
  }
  explicit Laurent(long c) : Laurent(Rational(c)) {}

  /// c * v^k
  static Laurent term(const Rational& c, int k) {
    Laurent r;
    if (c != 0) r.terms_[k] = c;
    return r;
  }
  static Laurent v(int k = 1) { return term(1, k); }
  static Laurent q(int k = 1) { return term(1, 2 * k); }
  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when of the form c * v^k (a unit of the ring), c != 0.
  bool is_monomial() const { return terms_.size() == 1; }

  const std::map<int, Rational>& terms() const { return terms_; }
  int min_exp() const;  // throws on zero
  int max_exp() const;
  const Rational& coeff(int k) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  Laurent operator-() const;

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

  /// Substitute v -> v^{-1} (flips all exponents).
  Laurent bar() const;

  /// Numeric evaluation at a given v, debugging only.
  double eval(double v_value) const;

  std::string str() const;

  /// Serialization: sorted list of (exponent of v, "num/den") pairs.
  std::vector<std::pair<int, std::string>> to_pairs() const;
  static Laurent from_pairs(const std::vector<std::pair<int, std::string>>& pairs);

 private:
  std::map<int, Rational> terms_;
};

/// Quantum integer [n] = (q^n - q^-n)/(q - q^-1).
Laurent gauss_bracket(int n);

/// q - q^{-1}
Laurent q_gamma();

/// Exact division in Q[v,v^-1]; returns false if b does not divide a.
bool try_exact_div(const Laurent& a, const Laurent& b, Laurent& out);
Laurent exact_div(const Laurent& a, const Laurent& b);

/// Euclidean division: a = q*b + r with span(r) < span(b) or r = 0, where
/// span is max_exp - min_exp (v-powers are units).
void laurent_divmod(const Laurent& a, const Laurent& b, Laurent& q, Laurent& r);

/// Monic-in-trailing-term gcd with min exponent 0; gcd(0,0) = 0.
Laurent laurent_gcd(const Laurent& a, const Laurent& b);

}  // namespace qflag
