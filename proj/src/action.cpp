#include "qflag/action.hpp"

#include <sstream>
#include <stdexcept>

namespace qflag {

UElement& UElement::operator+=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

UElement& UElement::operator-=(const UElement& o) {
  for (const auto& [w, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(w, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

UElement operator*(const UElement& a, const UElement& b) {
  UElement r;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      UWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      Laurent c = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(std::move(w), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  return r;
}

UElement operator*(const Laurent& s, UElement a) {
  if (s.is_zero()) return UElement();
  for (auto& [w, c] : a.terms_) c = s * c;
  return a;
}

std::string ugen_name(const UGen& g) {
  std::ostringstream os;
  switch (g.kind) {
    case UKindTag::KPlus: os << "K" << g.j; break;
    case UKindTag::KMinus: os << "Kinv" << g.j; break;
    case UKindTag::XPlus: os << "Xplus" << g.j; break;
    case UKindTag::XMinus: os << "Xminus" << g.j; break;
  }
  return os.str();
}

namespace {

int weight_of_word_j(int j, const Word& w) {
  int wt = 0;
  for (const Gen& g : w) wt += weight_of_gen(j, g);
  return wt;
}

AlgebraElement word_elem(int n, const Word& w) {
  if (w.empty()) return AlgebraElement::unit();
  std::map<Word, Laurent, WordLess> t{{w, Laurent::one()}};
  return AlgebraElement::from_terms(n, Kind::ahol, t);
}

// Dressing action of a single generator on a single coordinate zs[s,t].
AlgebraElement xi_letter(const UGen& g, int n, const Gen& l) {
  const int s = l.s, t = l.t, j = g.j;
  switch (g.kind) {
    case UKindTag::KPlus:
      return Laurent::v(weight_of_gen(j, l)) * word_elem(n, {l});
    case UKindTag::KMinus:
      return Laurent::v(-weight_of_gen(j, l)) * word_elem(n, {l});
    case UKindTag::XPlus: {
      if (j == s - 1) {
        // zs[s-1,t] - zs[s,t]*zs[s-1,s]
        return word_elem(n, {Gen{s - 1, t}}) - word_elem(n, {l}) * word_elem(n, {Gen{s - 1, s}});
      }
      if (j == s) {
        // q^{-1 + [t = s+1]/2} zs[s,t]*zs[s,s+1]
        return Laurent::v(-2 + (t == s + 1 ? 1 : 0)) *
               (word_elem(n, {l}) * word_elem(n, {Gen{s, s + 1}}));
      }
      if (j == t) {
        return -Laurent::q(-1) * word_elem(n, {Gen{s, t + 1}});
      }
      return AlgebraElement();
    }
    case UKindTag::XMinus: {
      if (j != t - 1) return AlgebraElement();
      if (s == t - 1) return AlgebraElement::scalar(-Laurent::v(1));  // -q^{1/2}
      return -Laurent::q(1) * word_elem(n, {Gen{s, t - 1}});
    }
  }
  throw std::logic_error("unreachable");
}

// xi of a ladder generator on a single word, by the coproduct recursion.
AlgebraElement xi_ladder_word(const UGen& g, int n, const Word& w) {
  if (w.empty()) return AlgebraElement();  // counit kills ladder generators
  const Gen l = w.front();
  const Word rest(w.begin() + 1, w.end());
  AlgebraElement first =
      Laurent::v(-weight_of_word_j(g.j, rest)) * (xi_letter(g, n, l) * word_elem(n, rest));
  AlgebraElement second = Laurent::v(weight_of_gen(g.j, l)) * (word_elem(n, {l}) * xi_ladder_word(g, n, rest));
  return first + second;
}

}  // namespace

AlgebraElement xi_gen(const UGen& g, const AlgebraElement& f) {
  if (!f.is_scalar() && f.kind() != Kind::ahol)
    throw std::invalid_argument("the dressing action lives on the ahol algebra");
  const int n = f.n();
  AlgebraElement out;
  for (const auto& [w, c] : f.terms()) {
    switch (g.kind) {
      case UKindTag::KPlus:
        out += (c * Laurent::v(weight_of_word_j(g.j, w))) * word_elem(n, w);
        break;
      case UKindTag::KMinus:
        out += (c * Laurent::v(-weight_of_word_j(g.j, w))) * word_elem(n, w);
        break;
      default:
        out += c * xi_ladder_word(g, n, w);
    }
  }
  return out;
}

AlgebraElement xi_apply(const UElement& y, const AlgebraElement& f) {
  AlgebraElement out;
  for (const auto& [w, c] : y.terms()) {
    AlgebraElement acc = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = xi_gen(*it, acc);
    out += c * acc;
  }
  return out;
}

AlgebraElement dot_unit(const UGen& g, const SigmaParams& sigma, int n) {
  const int j = g.j;
  if (j < 1 || j >= n || sigma.n() != n) throw std::invalid_argument("bad generator index");
  const int sj = sigma.sigma[j - 1];
  switch (g.kind) {
    case UKindTag::KPlus:
      return AlgebraElement::scalar(Laurent::v(-sj));
    case UKindTag::KMinus:
      return AlgebraElement::scalar(Laurent::v(sj));
    case UKindTag::XPlus: {
      Laurent coeff = -Laurent::v(-(1 + sj)) * gauss_bracket(sj);
      return coeff * AlgebraElement::generator(n, Kind::ahol, j, j + 1);
    }
    case UKindTag::XMinus:
      return AlgebraElement();
  }
  throw std::logic_error("unreachable");
}

namespace {

AlgebraElement dot_ladder_word(const UGen& g, int n, const Word& w, const SigmaParams& sigma) {
  if (w.empty()) return dot_unit(g, sigma, n);
  const Gen l = w.front();
  const Word rest(w.begin() + 1, w.end());
  const int sj = sigma.sigma[g.j - 1];
  // Y.(l rest) = (xi(Y1).l) (Y2.rest) with Y1 (x) Y2 = X (x) K^-1 + K (x) X
  AlgebraElement first = Laurent::v(-weight_of_word_j(g.j, rest) + sj) *
                         (xi_letter(g, n, l) * word_elem(n, rest));
  AlgebraElement second =
      Laurent::v(weight_of_gen(g.j, l)) * (word_elem(n, {l}) * dot_ladder_word(g, n, rest, sigma));
  return first + second;
}

}  // namespace

AlgebraElement dot_gen(const UGen& g, const AlgebraElement& f, const SigmaParams& sigma) {
  const int n = sigma.n();
  if (!f.is_scalar() && (f.kind() != Kind::ahol || f.n() != n))
    throw std::invalid_argument("module element does not match the parameters");
  AlgebraElement out;
  for (const auto& [w, c] : f.terms()) {
    switch (g.kind) {
      case UKindTag::KPlus:
        out += (c * Laurent::v(weight_of_word_j(g.j, w) - sigma.sigma[g.j - 1])) * word_elem(n, w);
        break;
      case UKindTag::KMinus:
        out += (c * Laurent::v(-weight_of_word_j(g.j, w) + sigma.sigma[g.j - 1])) * word_elem(n, w);
        break;
      default:
        out += c * dot_ladder_word(g, n, w, sigma);
    }
  }
  return out;
}

AlgebraElement dot_apply(const UElement& y, const AlgebraElement& f, const SigmaParams& sigma) {
  AlgebraElement out;
  for (const auto& [w, c] : y.terms()) {
    AlgebraElement acc = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) acc = dot_gen(*it, acc, sigma);
    out += c * acc;
  }
  return out;
}

std::vector<std::pair<std::string, UElement>> defining_relations(int n) {
  std::vector<std::pair<std::string, UElement>> rels;
  auto K = [](int j) { return UElement::gen(UKindTag::KPlus, j); };
  auto Kinv = [](int j) { return UElement::gen(UKindTag::KMinus, j); };
  auto X = [](bool plus, int j) {
    return UElement::gen(plus ? UKindTag::XPlus : UKindTag::XMinus, j);
  };
  auto name = [](const std::string& base, int j, int k, const char* sign = nullptr) {
    std::ostringstream os;
    os << base << "(" << j;
    if (k) os << "," << k;
    if (sign) os << "," << sign;
    os << ")";
    return os.str();
  };

  for (int j = 1; j < n; ++j) {
    rels.emplace_back(name("cartan-unit", j, 0), K(j) * Kinv(j) - UElement::one());
    for (int k = 1; k < n; ++k) {
      UElement qh_j = K(j) * K(j), qh_k = K(k) * K(k);
      if (k > j) rels.emplace_back(name("cartan-commute", j, k), qh_j * qh_k - qh_k * qh_j);
      for (bool plus : {true, false}) {
        // q^{H_j} X_k q^{-H_j} = q^{c} X_k
        int c = 0;
        if (j == k) c = plus ? 2 : -2;
        else if (j == k + 1 || j == k - 1) c = plus ? -1 : 1;
        rels.emplace_back(name("cartan-ladder", j, k, plus ? "+" : "-"),
                          qh_j * X(plus, k) - Laurent::q(c) * (X(plus, k) * qh_j));
      }
      // (q - q^-1) [X+_j, X-_k] = delta_{jk} (q^{H_j} - q^{-H_j})
      UElement comm = q_gamma() * (X(true, j) * X(false, k) - X(false, k) * X(true, j));
      if (j == k) comm -= K(j) * K(j) - Kinv(j) * Kinv(j);
      rels.emplace_back(name("ladder-commutator", j, k), comm);
      if (j != k) {
        for (bool plus : {true, false}) {
          if (std::abs(j - k) == 1) {
            UElement serre = X(plus, j) * X(plus, j) * X(plus, k) -
                             (Laurent::q(1) + Laurent::q(-1)) * (X(plus, j) * X(plus, k) * X(plus, j)) +
                             X(plus, k) * X(plus, j) * X(plus, j);
            rels.emplace_back(name("serre", j, k, plus ? "+" : "-"), serre);
          } else {
            rels.emplace_back(name("distant-commute", j, k, plus ? "+" : "-"),
                              X(plus, j) * X(plus, k) - X(plus, k) * X(plus, j));
          }
        }
      }
    }
  }
  return rels;
}

}  // namespace qflag
