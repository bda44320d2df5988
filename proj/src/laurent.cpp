#include "qflag/laurent.hpp"

#include <cmath>
#include <sstream>

namespace qflag {

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& r) { return r.get_str(); }

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int Laurent::min_exp() const {
  if (terms_.empty()) throw std::logic_error("min_exp of zero");
  return terms_.begin()->first;
}

int Laurent::max_exp() const {
  if (terms_.empty()) throw std::logic_error("max_exp of zero");
  return terms_.rbegin()->first;
}

const Rational& Laurent::coeff(int k) const {
  static const Rational kZero(0);
  auto it = terms_.find(k);
  return it == terms_.end() ? kZero : it->second;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  std::map<int, Rational> out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Rational p = ca * cb;
      auto [it, inserted] = out.try_emplace(ea + eb, p);
      if (!inserted) {
        it->second += p;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  terms_ = std::move(out);
  return *this;
}

Laurent Laurent::operator-() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

Laurent Laurent::bar() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

double Laurent::eval(double v_value) const {
  double acc = 0;
  for (const auto& [e, c] : terms_) acc += c.get_d() * std::pow(v_value, e);
  return acc;
}

std::string Laurent::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "v^" << e;
    }
  }
  return os.str();
}

std::vector<std::pair<int, std::string>> Laurent::to_pairs() const {
  std::vector<std::pair<int, std::string>> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.emplace_back(e, rational_to_string(c));
  return out;
}

Laurent Laurent::from_pairs(const std::vector<std::pair<int, std::string>>& pairs) {
  Laurent r;
  for (const auto& [e, s] : pairs) {
    Rational c = rational_from_string(s);
    if (c == 0) throw std::invalid_argument("zero coefficient in Laurent encoding");
    auto [it, inserted] = r.terms_.try_emplace(e, c);
    if (!inserted) throw std::invalid_argument("duplicate exponent in Laurent encoding");
  }
  return r;
}

Laurent gauss_bracket(int n) {
  if (n == 0) return Laurent::zero();
  if (n < 0) return -gauss_bracket(-n);
  // [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}
  Laurent r;
  for (int k = 0; k < n; ++k) r += Laurent::q(n - 1 - 2 * k);
  return r;
}

Laurent q_gamma() { return Laurent::q(1) - Laurent::q(-1); }

bool try_exact_div(const Laurent& a, const Laurent& b, Laurent& out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    out = Laurent::zero();
    return true;
  }
  // Shift both to honest polynomials (v-powers are units), divide, require
  // zero remainder, then shift the quotient back.
  const int sa = a.min_exp(), sb = b.min_exp();
  Laurent rem, bshift;
  for (const auto& [e, c] : a.terms()) rem += Laurent::term(c, e - sa);
  for (const auto& [e, c] : b.terms()) bshift += Laurent::term(c, e - sb);
  const int db = bshift.max_exp();
  const Rational& lb = bshift.coeff(db);
  Laurent quot;
  while (!rem.is_zero() && rem.max_exp() >= db) {
    Rational c = rem.coeff(rem.max_exp()) / lb;
    int shift = rem.max_exp() - db;
    quot += Laurent::term(c, shift);
    Laurent sub;
    for (const auto& [e, cb] : bshift.terms()) sub += Laurent::term(c * cb, e + shift);
    rem -= sub;
  }
  if (!rem.is_zero()) return false;
  out = quot * Laurent::v(sa - sb);
  return true;
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
  Laurent out;
  if (!try_exact_div(a, b, out)) throw std::domain_error("inexact Laurent division");
  return out;
}

void laurent_divmod(const Laurent& a, const Laurent& b, Laurent& q, Laurent& r) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  q = Laurent::zero();
  r = a;
  if (a.is_zero()) return;
  const int sb = b.min_exp();
  const int db = b.max_exp() - sb;  // span of the divisor
  const Rational& lb = b.coeff(b.max_exp());
  while (!r.is_zero() && r.max_exp() - r.min_exp() >= db) {
    Rational c = r.coeff(r.max_exp()) / lb;
    int shift = r.max_exp() - b.max_exp();
    q += Laurent::term(c, shift);
    Laurent sub;
    for (const auto& [e, cb] : b.terms()) sub += Laurent::term(c * cb, e + shift);
    r -= sub;
  }
}

namespace {

// Normalize: shift min exponent to 0 and make the trailing coefficient 1.
Laurent comonic(const Laurent& a) {
  if (a.is_zero()) return a;
  int m = a.min_exp();
  const Rational& t = a.coeff(m);
  Laurent r;
  for (const auto& [e, c] : a.terms()) r += Laurent::term(c / t, e - m);
  return r;
}

// Remainder of a by b as polynomials in v (exponents already >= 0).
Laurent poly_rem(Laurent a, const Laurent& b) {
  const int db = b.max_exp();
  const Rational& lb = b.coeff(db);
  while (!a.is_zero() && a.max_exp() >= db) {
    Rational c = a.coeff(a.max_exp()) / lb;
    int shift = a.max_exp() - db;
    Laurent sub;
    for (const auto& [e, cb] : b.terms()) sub += Laurent::term(c * cb, e + shift);
    a -= sub;
  }
  return a;
}

}  // namespace

Laurent laurent_gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero()) return comonic(b);
  if (b.is_zero()) return comonic(a);
  Laurent x = comonic(a), y = comonic(b);
  while (!y.is_zero()) {
    Laurent r = poly_rem(x, y);
    x = y;
    y = r.is_zero() ? r : comonic(r);
  }
  return comonic(x);
}

}  // namespace qflag
