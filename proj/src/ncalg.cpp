#include "qflag/ncalg.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qflag {

namespace {

int sgn(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

int delta(int a, int b) { return a == b ? 1 : 0; }

// Resolves a formal product of two possibly-degenerate coordinates.  Factors
// with row == col are the unit, factors with row > col vanish.  Returns false
// when the whole product is zero.
bool resolve_product(int a, int b, int c, int d, Word& out) {
  out.clear();
  if (a > b || c > d) return false;
  if (a < b) out.push_back(Gen{a, b});
  if (c < d) out.push_back(Gen{c, d});
  return true;
}

}  // namespace

bool word_is_ordered(const Word& w) {
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i + 1] < w[i]) return false;
  return true;
}

std::string word_str(const Word& w, Kind kind) {
  if (w.empty()) return "1";
  std::ostringstream os;
  const char* name = kind == Kind::hol ? "z" : "zs";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) os << "*";
    os << name << "[" << w[i].s << "," << w[i].t << "]";
  }
  return os.str();
}

Word word_from_str(const std::string& s, Kind* kind_out) {
  Word w;
  Kind kind = Kind::hol;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  skip_ws();
  if (i < s.size() && s[i] == '1') {
    ++i;
    skip_ws();
    if (i != s.size()) throw std::invalid_argument("bad word literal: " + s);
    if (kind_out) *kind_out = kind;
    return w;
  }
  bool first = true;
  while (i < s.size()) {
    skip_ws();
    if (!first) {
      if (s[i] != '*') throw std::invalid_argument("bad word literal: " + s);
      ++i;
      skip_ws();
    }
    if (s.compare(i, 2, "zs") == 0) {
      kind = Kind::ahol;
      i += 2;
    } else if (s[i] == 'z') {
      kind = Kind::hol;
      i += 1;
    } else {
      throw std::invalid_argument("bad word literal: " + s);
    }
    if (i >= s.size() || s[i] != '[') throw std::invalid_argument("bad word literal: " + s);
    ++i;
    size_t comma = s.find(',', i);
    size_t close = s.find(']', i);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw std::invalid_argument("bad word literal: " + s);
    int gs = std::stoi(s.substr(i, comma - i));
    int gt = std::stoi(s.substr(comma + 1, close - comma - 1));
    w.push_back(Gen{gs, gt});
    i = close + 1;
    first = false;
    skip_ws();
  }
  if (kind_out) *kind_out = kind;
  return w;
}

int weight_of_gen(int j, const Gen& g) {
  return delta(j, g.s) - delta(j + 1, g.s) - delta(j, g.t) + delta(j + 1, g.t);
}

std::vector<int> weight_of_word(int n, const Word& w) {
  std::vector<int> wt(static_cast<size_t>(n > 0 ? n - 1 : 0), 0);
  for (const Gen& g : w)
    for (int j = 1; j < n; ++j) wt[j - 1] += weight_of_gen(j, g);
  return wt;
}

int height_of_word(const Word& w) {
  int h = 0;
  for (const Gen& g : w) h += g.t - g.s;
  return h;
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::scalar(const Laurent& c) {
  AlgebraElement e;
  if (!c.is_zero()) e.terms_[Word{}] = c;
  return e;
}

AlgebraElement AlgebraElement::generator(int n, Kind kind, int s, int t) {
  if (!(1 <= s && s < t && t <= n)) throw std::invalid_argument("generator index out of range");
  AlgebraElement e;
  e.n_ = n;
  e.kind_ = kind;
  e.terms_[Word{Gen{s, t}}] = Laurent::one();
  return e;
}

AlgebraElement AlgebraElement::from_terms(int n, Kind kind,
                                          const std::map<Word, Laurent, WordLess>& terms) {
  AlgebraElement e;
  e.n_ = n;
  e.kind_ = kind;
  e.terms_ = terms;
  for (auto it = e.terms_.begin(); it != e.terms_.end();)
    it = it->second.is_zero() ? e.terms_.erase(it) : std::next(it);
  return normal_form(e);
}

bool AlgebraElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Laurent AlgebraElement::scalar_part() const {
  auto it = terms_.find(Word{});
  return it == terms_.end() ? Laurent::zero() : it->second;
}

void AlgebraElement::insert_term(const Word& w, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

// Promotes rank/kind across binary operations; scalars are compatible with
// everything.
void unify_context(const AlgebraElement& a, const AlgebraElement& b, int& n, Kind& kind) {
  const bool a_sc = a.is_scalar(), b_sc = b.is_scalar();
  if (!a_sc && !b_sc) {
    if (a.kind() != b.kind()) throw std::invalid_argument("mixing hol and ahol words");
    n = std::max(a.n(), b.n());
    kind = a.kind();
  } else if (!a_sc) {
    n = a.n();
    kind = a.kind();
  } else {
    n = b.n();
    kind = b.kind();
  }
}

}  // namespace

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  int n;
  Kind kind;
  unify_context(*this, o, n, kind);
  n_ = n;
  kind_ = kind;
  for (const auto& [w, c] : o.terms_) insert_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  int n;
  Kind kind;
  unify_context(*this, o, n, kind);
  n_ = n;
  kind_ = kind;
  for (const auto& [w, c] : o.terms_) insert_term(w, -c);
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  int n;
  Kind kind;
  unify_context(a, b, n, kind);
  AlgebraElement raw;
  raw.n_ = n;
  raw.kind_ = kind;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      raw.insert_term(w, ca * cb);
    }
  return normal_form(raw);
}

AlgebraElement operator*(const Laurent& s, AlgebraElement a) {
  std::map<Word, Laurent, WordLess> out;
  for (const auto& [w, c] : a.terms_) {
    Laurent p = s * c;
    if (!p.is_zero()) out[w] = std::move(p);
  }
  a.terms_ = std::move(out);
  return a;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgebraElement AlgebraElement::adjoint() const {
  AlgebraElement raw;
  raw.n_ = n_;
  raw.kind_ = other(kind_);
  for (const auto& [w, c] : terms_) {
    Word rev(w.rbegin(), w.rend());
    raw.insert_term(rev, c);
  }
  return normal_form(raw);
}

std::string AlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (!w.empty()) os << "*" << word_str(w, kind_);
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// RelationTable

RelationTable::RelationTable(int n, Kind kind) : n_(n), kind_(kind) {}

std::map<Word, Laurent, WordLess> RelationTable::instantiate(int j, int s, int k, int t) const {
  // Entrywise exchange relation of the flag coordinate ring:
  //   q^{d(k,s)} z_{js} z_{kt} - q^{d(j,t)} z_{kt} z_{js}
  //     = (q^{sgn(k-j)} - q^{sgn(s-t)}) q^{d(j,s)} z_{ks} z_{jt},
  // with z_{aa} = 1 and z_{ab} = 0 for a > b resolved up front.  The ahol
  // table uses the formal adjoint (words reversed, coefficients kept).
  std::map<Word, Laurent, WordLess> eq;
  auto add = [&](const Laurent& coeff, int a, int b, int c, int d) {
    Word w;
    if (kind_ == Kind::ahol) std::swap(a, c), std::swap(b, d);  // reverse the product
    if (!resolve_product(a, b, c, d, w)) return;
    if (coeff.is_zero()) return;
    auto [it, inserted] = eq.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) eq.erase(it);
    }
  };
  add(Laurent::q(delta(k, s)), j, s, k, t);
  add(-Laurent::q(delta(j, t)), k, t, j, s);
  Laurent rhs = (Laurent::q(sgn(k - j)) - Laurent::q(sgn(s - t))) * Laurent::q(delta(j, s));
  add(-rhs, k, s, j, t);
  return eq;
}

void RelationTable::build() {
  std::vector<Gen> gens;
  for (int s = 1; s <= n_; ++s)
    for (int t = s + 1; t <= n_; ++t) gens.push_back(Gen{s, t});

  for (const Gen& a : gens)
    for (const Gen& b : gens) {
      if (!(b < a)) continue;  // need the descending product a*b
      const Word target{a, b};
      auto solve = [&](const std::map<Word, Laurent, WordLess>& eq,
                       std::map<Word, Laurent, WordLess>& rule_out) -> bool {
        auto it = eq.find(target);
        if (it == eq.end()) return false;
        const Laurent lead = it->second;
        for (const auto& [w, c] : eq) {
          if (w == target) continue;
          if (w.size() == 2 && !word_is_ordered(w))
            throw std::logic_error("relation produced a non-ordered right-hand side");
          rule_out[w] = exact_div(-c, lead);
        }
        return true;
      };

      // The instantiation placing a*b as the leading left-hand word always
      // solves for it with an ordered right-hand side.
      std::map<Word, Laurent, WordLess> rule;
      bool ok = kind_ == Kind::hol ? solve(instantiate(a.s, a.t, b.s, b.t), rule)
                                   : solve(instantiate(b.s, b.t, a.s, a.t), rule);
      if (!ok) throw std::logic_error("no relation instance covers " + word_str(target, kind_));
      rules_[{a, b}] = std::move(rule);
    }

  for (int j = 1; j <= n_; ++j)
    for (int s = 1; s <= n_; ++s)
      for (int k = 1; k <= n_; ++k)
        for (int t = 1; t <= n_; ++t) {
          auto eq = instantiate(j, s, k, t);
          if (!eq.empty()) equations_.push_back(std::move(eq));
        }

  // Conflict detection: every instantiation (including the transposed ones,
  // whose right-hand sides may themselves be out of order) must reduce to
  // zero under the completed rule set.
  for (const auto& eq : equations_) {
    AlgebraElement e;
    e.n_ = n_;
    e.kind_ = kind_;
    e.terms_ = eq;
    if (!normal_form(e).is_zero())
      throw std::logic_error("conflicting relation instances detected");
  }
}

std::shared_ptr<const RelationTable> RelationTable::get(int n, Kind kind) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  static std::mutex mu;
  static std::map<std::pair<int, Kind>, std::shared_ptr<const RelationTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, kind);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto table = std::shared_ptr<RelationTable>(new RelationTable(n, kind));
  table->build();
  cache[key] = table;
  return table;
}

const std::map<Word, Laurent, WordLess>& RelationTable::rule(const Gen& a, const Gen& b) const {
  auto it = rules_.find({a, b});
  if (it == rules_.end()) throw std::logic_error("no rule for this pair");
  return it->second;
}

AlgebraElement RelationTable::rewrite_at(const Word& w, int pos) const {
  if (!(w[pos + 1] < w[pos])) throw std::logic_error("pair at pos is not descending");
  const auto& rhs = rule(w[pos], w[pos + 1]);
  AlgebraElement out;
  out.n_ = n_;
  out.kind_ = kind_;
  for (const auto& [rw, rc] : rhs) {
    Word nw(w.begin(), w.begin() + pos);
    nw.insert(nw.end(), rw.begin(), rw.end());
    nw.insert(nw.end(), w.begin() + pos + 2, w.end());
    out.insert_term(nw, rc);
  }
  return out;
}

AlgebraElement RelationTable::normal_form(const AlgebraElement& e, long step_budget) const {
  AlgebraElement done;
  done.n_ = std::max(e.n_, n_);
  done.kind_ = e.terms_.empty() ? kind_ : e.kind_;
  std::map<Word, Laurent, WordLess> pending(e.terms_.begin(), e.terms_.end());
  long budget = step_budget;
  while (!pending.empty()) {
    // Largest word first: rewrites only produce strictly smaller words.
    auto it = std::prev(pending.end());
    Word w = it->first;
    Laurent c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;

    int pos = -1;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i + 1] < w[i]) {
        pos = static_cast<int>(i);
        break;
      }
    if (pos < 0) {
      done.insert_term(w, c);
      continue;
    }
    if (--budget < 0) throw std::runtime_error("normal_form exceeded its step budget");
    const auto& rhs = rule(w[pos], w[pos + 1]);
    for (const auto& [rw, rc] : rhs) {
      Word nw(w.begin(), w.begin() + pos);
      nw.insert(nw.end(), rw.begin(), rw.end());
      nw.insert(nw.end(), w.begin() + pos + 2, w.end());
      Laurent nc = c * rc;
      auto [pit, inserted] = pending.try_emplace(std::move(nw), nc);
      if (!inserted) {
        pit->second += nc;
        if (pit->second.is_zero()) pending.erase(pit);
      }
    }
  }
  return done;
}

AlgebraElement normal_form(const AlgebraElement& e) {
  if (e.is_scalar()) return e;
  bool ordered = true;
  for (const auto& [w, c] : e.terms())
    if (!word_is_ordered(w)) {
      ordered = false;
      break;
    }
  if (ordered) return e;
  return RelationTable::get(e.n(), e.kind())->normal_form(e);
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

AlgebraElement adjoint(const AlgebraElement& e) { return e.adjoint(); }

}  // namespace qflag
