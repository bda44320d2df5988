#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qflag/laurent.hpp"

namespace qflag {

/// Which coordinate algebra a word lives in: holomorphic generators z[s,t]
/// or their adjoints zs[s,t].
enum class Kind : std::uint8_t { hol, ahol };

inline Kind other(Kind k) { return k == Kind::hol ? Kind::ahol : Kind::hol; }

/// Strictly upper-triangular coordinate generator, 1 <= s < t <= N.
struct Gen {
  int s = 0;
  int t = 0;
  friend auto operator<=>(const Gen&, const Gen&) = default;
};

/// Plain sequence of generators (one algebra kind per word).
using Word = std::vector<Gen>;

/// Graded-lex monomial order: by length, then letterwise by (s,t).
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

bool word_is_ordered(const Word& w);
std::string word_str(const Word& w, Kind kind);
Word word_from_str(const std::string& s, Kind* kind_out = nullptr);

/// Per-generator weight exponent: eigenvalue of the j-th Cartan element on
/// zs[s,t] is q to this power.
int weight_of_gen(int j, const Gen& g);
std::vector<int> weight_of_word(int n, const Word& w);
/// Conserved grading: sum of t-s over the letters.
int height_of_word(const Word& w);

class RelationTable;

/// Finite linear combination of words with Laurent coefficients, kept in
/// canonical normal-ordered form.  Carries the rank N and the algebra kind;
/// pure scalars have n = 0 and combine with anything.
class AlgebraElement {
 public:
  AlgebraElement() = default;
  static AlgebraElement scalar(const Laurent& c);
  static AlgebraElement unit() { return scalar(Laurent::one()); }
  static AlgebraElement generator(int n, Kind kind, int s, int t);
  /// Builds sum of coeff * word and normal-orders it.
  static AlgebraElement from_terms(int n, Kind kind, const std::map<Word, Laurent, WordLess>& terms);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  const std::map<Word, Laurent, WordLess>& terms() const { return terms_; }
  /// Coefficient of the empty word.
  Laurent scalar_part() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Laurent& s, AlgebraElement a);
  AlgebraElement operator-() const;
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.terms_ == b.terms_;  // canonical form; scalars compare across kinds
  }
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

  /// Reverses every word, swaps hol <-> ahol, renormalizes.
  AlgebraElement adjoint() const;

  std::string str() const;

 private:
  friend class RelationTable;
  void insert_term(const Word& w, const Laurent& c);

  int n_ = 0;
  Kind kind_ = Kind::hol;
  std::map<Word, Laurent, WordLess> terms_;
};

/// Rewrite rules turning each descending adjacent generator pair into a
/// combination of normal-ordered words, instantiated from the quadratic
/// exchange relation of the flag coordinate ring (or its adjoint).
class RelationTable {
 public:
  static std::shared_ptr<const RelationTable> get(int n, Kind kind);

  int n() const { return n_; }
  Kind kind() const { return kind_; }

  /// Rule for the product a*b with a > b; each rule right-hand side is a
  /// combination of normal-ordered words of the same weight.
  const std::map<Word, Laurent, WordLess>& rule(const Gen& a, const Gen& b) const;

  /// All instantiated relation equations (for consistency testing): each
  /// entry must normalize to zero.
  const std::vector<std::map<Word, Laurent, WordLess>>& equations() const { return equations_; }

  /// Normal form: repeated leftmost reduction of descending adjacent pairs.
  /// The step budget guards against non-termination (which would indicate a
  /// broken rule set); exceeding it throws.
  AlgebraElement normal_form(const AlgebraElement& e, long step_budget = kDefaultStepBudget) const;
  /// Single rewrite of the pair at position pos of w (which must descend).
  AlgebraElement rewrite_at(const Word& w, int pos) const;

  static constexpr long kDefaultStepBudget = 50'000'000;

 private:
  RelationTable(int n, Kind kind);
  void build();
  std::map<Word, Laurent, WordLess> instantiate(int j, int s, int k, int t) const;

  int n_;
  Kind kind_;
  std::map<std::pair<Gen, Gen>, std::map<Word, Laurent, WordLess>> rules_;
  std::vector<std::map<Word, Laurent, WordLess>> equations_;
};

/// Convenience free functions mirroring the table operations.
AlgebraElement normal_form(const AlgebraElement& e);
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& e);

}  // namespace qflag
