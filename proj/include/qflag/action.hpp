#pragma once

#include <map>
#include <string>
#include <vector>

#include "qflag/laurent.hpp"
#include "qflag/ncalg.hpp"

namespace qflag {

/// Generator alphabet of the deformed enveloping algebra.  KPlus/KMinus are
/// the half-power Cartan elements q^{+H_j/2} / q^{-H_j/2}; the integer powers
/// q^{+-H_j} are their squares.
enum class UKindTag : std::uint8_t { KPlus, KMinus, XPlus, XMinus };

struct UGen {
  UKindTag kind;
  int j;  // 1 <= j <= N-1
  friend auto operator<=>(const UGen&, const UGen&) = default;
};

using UWord = std::vector<UGen>;

/// Free linear combination of generator words; no normal form is imposed,
/// these only ever act as operators.
class UElement {
 public:
  UElement() = default;
  static UElement one() { return from_word({}); }
  static UElement gen(UGen g) { return from_word({g}); }
  static UElement gen(UKindTag kind, int j) { return from_word({UGen{kind, j}}); }
  static UElement from_word(const UWord& w) {
    UElement e;
    e.terms_[w] = Laurent::one();
    return e;
  }

  const std::map<UWord, Laurent>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  UElement& operator+=(const UElement& o);
  UElement& operator-=(const UElement& o);
  friend UElement operator+(UElement a, const UElement& b) { return a += b; }
  friend UElement operator-(UElement a, const UElement& b) { return a -= b; }
  friend UElement operator*(const UElement& a, const UElement& b);  // word concatenation
  friend UElement operator*(const Laurent& s, UElement a);

 private:
  std::map<UWord, Laurent> terms_;
};

/// Module parameters: one integer per node of the Dynkin diagram.
struct SigmaParams {
  std::vector<int> sigma;

  int n() const { return static_cast<int>(sigma.size()) + 1; }
  bool all_nonnegative() const {
    for (int s : sigma)
      if (s < 0) return false;
    return true;
  }
};

/// Infinitesimal dressing action on one generator of the ahol algebra.
AlgebraElement xi_gen(const UGen& g, const AlgebraElement& f);
/// Action of a whole word/combination, letters composing right to left.
AlgebraElement xi_apply(const UElement& y, const AlgebraElement& f);

/// sigma-parametrized module action on the unit.
AlgebraElement dot_unit(const UGen& g, const SigmaParams& sigma, int n);
/// sigma-parametrized left module action extended by the coproduct recursion.
AlgebraElement dot_gen(const UGen& g, const AlgebraElement& f, const SigmaParams& sigma);
AlgebraElement dot_apply(const UElement& y, const AlgebraElement& f, const SigmaParams& sigma);

/// Defining relations of the deformed enveloping algebra, as named elements
/// that must act as zero (the commutator relation is cleared of the q - q^-1
/// denominator).  Includes the Serre relations.
std::vector<std::pair<std::string, UElement>> defining_relations(int n);

std::string ugen_name(const UGen& g);

}  // namespace qflag
