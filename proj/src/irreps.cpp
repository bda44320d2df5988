#include "qflag/irreps.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qflag {

const ScalarMatrix& Representation::matrix(const UGen& g) const {
  auto it = matrices.find(ugen_name(g));
  if (it == matrices.end()) throw std::logic_error("missing generator matrix");
  return it->second;
}

long weyl_dimension(int n, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != n - 1) throw std::invalid_argument("sigma length must be N-1");
  for (int s : sigma)
    if (s < 0) throw std::invalid_argument("sigma entries must be non-negative");
  Rational dim(1);
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      long sum = 0;
      for (int k = i; k < j; ++k) sum += sigma[k - 1];
      Rational f(sum + (j - i), j - i);
      f.canonicalize();
      dim *= f;
    }
  dim.canonicalize();
  if (dim.get_den() != 1) throw std::logic_error("dimension formula did not produce an integer");
  return static_cast<long>(dim.get_num().get_si());
}

namespace {

// Scale a row by the unit part of its pivot coefficient (v-powers and
// rationals are units), so the pivot's lowest term becomes 1 * v^0.
AlgebraElement comonic_row(const AlgebraElement& v) {
  const Laurent& pc = v.terms().begin()->second;
  Laurent unit = Laurent::term(pc.coeff(pc.min_exp()), pc.min_exp());
  if (unit.is_one()) return v;
  std::map<Word, Laurent, WordLess> t;
  for (const auto& [w, c] : v.terms()) t[w] = exact_div(c, unit);
  return AlgebraElement::from_terms(v.n(), v.kind(), t);
}

// Module over Q[v, v^-1] in Hermite-style echelon form: one row per pivot
// monomial, the pivot being the row's minimal monomial.  Insertion runs the
// Euclidean algorithm on pivot coefficients, so after closing the row set
// under the generator action every image is an exact ring combination of
// rows and the representation matrices stay Laurent.
class Lattice {
 public:
  // Adds the span of v; returns true when the lattice grew or changed.
  bool add(AlgebraElement v) {
    bool modified = false;
    while (!v.is_zero()) {
      const Word lead = v.terms().begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) {
        rows_.emplace(lead, comonic_row(v));
        return true;
      }
      const Laurent pivot = it->second.terms().begin()->second;
      Laurent q, r;
      laurent_divmod(v.terms().begin()->second, pivot, q, r);
      v -= q * it->second;
      if (!r.is_zero()) {
        // Euclid swap: v, whose lead coefficient r has smaller span, becomes
        // the row; the displaced row continues through the reduction.
        AlgebraElement old = std::move(it->second);
        it->second = comonic_row(v);
        v = std::move(old);
        modified = true;
      }
    }
    return modified;
  }

  // Exact coordinates with respect to the rows, keyed by pivot monomial.
  // Throws when v is not a ring combination of the rows (which cannot happen
  // once the lattice is closed under the action).
  std::map<Word, Laurent, WordLess> coordinates(AlgebraElement v) const {
    std::map<Word, Laurent, WordLess> coords;
    while (!v.is_zero()) {
      const Word lead = v.terms().begin()->first;
      auto it = rows_.find(lead);
      if (it == rows_.end()) throw std::logic_error("vector is outside the lattice");
      const Laurent& pivot = it->second.terms().begin()->second;
      Laurent q, r;
      laurent_divmod(v.terms().begin()->second, pivot, q, r);
      if (!r.is_zero()) throw std::logic_error("vector is not a ring combination of the rows");
      coords[lead] = q;
      v -= q * it->second;
    }
    return coords;
  }

  const std::map<Word, AlgebraElement, WordLess>& rows() const { return rows_; }

 private:
  std::map<Word, AlgebraElement, WordLess> rows_;
};

std::vector<UGen> generator_order(int n) {
  std::vector<UGen> gens;
  for (int j = 1; j < n; ++j) gens.push_back(UGen{UKindTag::XPlus, j});
  for (int j = 1; j < n; ++j) gens.push_back(UGen{UKindTag::XMinus, j});
  for (int j = 1; j < n; ++j) gens.push_back(UGen{UKindTag::KPlus, j});
  for (int j = 1; j < n; ++j) gens.push_back(UGen{UKindTag::KMinus, j});
  return gens;
}

}  // namespace

Representation build_irrep(int n, const SigmaParams& sigma, long cap) {
  if (sigma.n() != n) throw std::invalid_argument("sigma length must be N-1");
  if (!sigma.all_nonnegative())
    throw std::invalid_argument("module is finite-dimensional only for non-negative sigma");
  const long dim_expected = weyl_dimension(n, sigma.sigma);
  if (cap < 0) cap = dim_expected + 2;

  const std::vector<UGen> gens = generator_order(n);
  Lattice lat;
  lat.add(AlgebraElement::unit());
  // Close the row lattice under all generators.  Termination: the rows span
  // an ascending chain of finitely generated modules inside a fixed
  // coordinate space over a noetherian ring.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<AlgebraElement> snapshot;
    snapshot.reserve(lat.rows().size());
    for (const auto& [piv, row] : lat.rows()) snapshot.push_back(row);
    for (const AlgebraElement& b : snapshot)
      for (const UGen& g : gens)
        if (lat.add(dot_gen(g, b, sigma))) changed = true;
    if (static_cast<long>(lat.rows().size()) > cap) {
      std::ostringstream os;
      os << "closure exceeded cap " << cap << " vectors";
      throw ClosureExceedsCap(os.str());
    }
  }

  Representation rep;
  rep.n = n;
  rep.sigma = sigma;
  const int d = static_cast<int>(lat.rows().size());
  std::map<Word, int, WordLess> index_of;
  for (const auto& [piv, row] : lat.rows()) {
    index_of.emplace(piv, rep.dimension());
    rep.basis.push_back(row);
  }

  for (const UGen& g : gens) {
    ScalarMatrix m(d, d);
    for (int col = 0; col < d; ++col) {
      AlgebraElement image = dot_gen(g, rep.basis[col], sigma);
      for (const auto& [piv, coeff] : lat.coordinates(image))
        if (!coeff.is_zero()) m(index_of.at(piv), col) = coeff;
    }
    rep.matrices.emplace(ugen_name(g), std::move(m));
  }

  // weight labels from the K matrices, which must be diagonal v-powers
  rep.weights.assign(d, Weight{std::vector<int>(n - 1, 0)});
  for (int j = 1; j < n; ++j) {
    const ScalarMatrix& k = rep.matrix(UGen{UKindTag::KPlus, j});
    for (int row = 0; row < d; ++row) {
      for (int col = 0; col < d; ++col)
        if (row != col && !k(row, col).is_zero())
          throw NonDiagonalWeight("Cartan matrix has an off-diagonal entry");
      const Laurent& e = k(row, row);
      if (!e.is_monomial() || e.coeff(e.min_exp()) != 1)
        throw NonDiagonalWeight("Cartan eigenvalue is not a power of v");
      rep.weights[row].w[j - 1] = e.min_exp();
    }
  }
  return rep;
}

Report verify_representation(const Representation& rep) {
  Report r;
  {
    std::ostringstream os;
    os << "irrep N=" << rep.n << " sigma=(";
    for (size_t i = 0; i < rep.sigma.sigma.size(); ++i)
      os << (i ? "," : "") << rep.sigma.sigma[i];
    os << ")";
    r.suite = os.str();
  }
  const int n = rep.n, d = rep.dimension();
  auto K = [&](int j) { return rep.matrix(UGen{UKindTag::KPlus, j}); };
  auto Kinv = [&](int j) { return rep.matrix(UGen{UKindTag::KMinus, j}); };
  auto X = [&](bool plus, int j) {
    return rep.matrix(UGen{plus ? UKindTag::XPlus : UKindTag::XMinus, j});
  };
  const ScalarMatrix I = ScalarMatrix::identity(d, Laurent::one());

  auto check = [&](const std::string& name, const ScalarMatrix& a, const ScalarMatrix& b) {
    bool ok = a == b;
    std::string detail;
    if (!ok) {
      int i = -1, j = -1;
      ScalarMatrix::first_difference(a, b, i, j);
      std::ostringstream os;
      os << "first mismatch at (" << i << "," << j << ")";
      detail = os.str();
    }
    r.add(name, ok, detail);
  };

  r.add("dimension", d == weyl_dimension(n, rep.sigma.sigma), "");

  for (int j = 1; j < n; ++j) {
    std::ostringstream tj;
    tj << "(j=" << j << ")";
    check("cartan-unit" + tj.str(), K(j) * Kinv(j), I);
    // lowest-weight conditions on the cyclic vector
    bool ann = true;
    for (int row = 0; row < d; ++row)
      if (!X(false, j)(row, 0).is_zero()) ann = false;
    r.add("lowest-weight-annihilation" + tj.str(), ann, "");
    r.add("lowest-weight-eigenvalue" + tj.str(),
          K(j)(0, 0) == Laurent::v(-rep.sigma.sigma[j - 1]), "");
    for (int k = 1; k < n; ++k) {
      std::ostringstream t;
      t << "(j=" << j << ",k=" << k << ")";
      ScalarMatrix qh_j = K(j) * K(j);
      if (k > j) check("cartan-commute" + t.str(), qh_j * K(k) * K(k), K(k) * K(k) * qh_j);
      for (bool plus : {true, false}) {
        int c = 0;
        if (j == k) c = plus ? 2 : -2;
        else if (std::abs(j - k) == 1) c = plus ? -1 : 1;
        check(std::string("cartan-ladder") + (plus ? "+" : "-") + t.str(), qh_j * X(plus, k),
              Laurent::q(c) * (X(plus, k) * qh_j));
      }
      ScalarMatrix comm = q_gamma() * (X(true, j) * X(false, k) - X(false, k) * X(true, j));
      ScalarMatrix rhs = j == k ? K(j) * K(j) - Kinv(j) * Kinv(j) : ScalarMatrix::zero(d, d);
      check("ladder-commutator" + t.str(), comm, rhs);
      if (j != k) {
        for (bool plus : {true, false}) {
          std::string sign = plus ? "+" : "-";
          if (std::abs(j - k) == 1) {
            ScalarMatrix s = X(plus, j) * X(plus, j) * X(plus, k) -
                             (Laurent::q(1) + Laurent::q(-1)) * (X(plus, j) * X(plus, k) * X(plus, j)) +
                             X(plus, k) * X(plus, j) * X(plus, j);
            check("serre" + sign + t.str(), s, ScalarMatrix::zero(d, d));
          } else {
            check("distant-commute" + sign + t.str(), X(plus, j) * X(plus, k),
                  X(plus, k) * X(plus, j));
          }
        }
      }
    }
  }

  // weight labels must be symmetric under w -> -reverse(w)
  {
    std::multiset<std::vector<int>> weights, mirrored;
    for (const Weight& w : rep.weights) {
      weights.insert(w.w);
      std::vector<int> m(w.w.rbegin(), w.w.rend());
      for (int& x : m) x = -x;
      mirrored.insert(std::move(m));
    }
    r.add("weight-symmetry", weights == mirrored, "");
  }

  // su(2) family: no proper nonzero invariant subspace spanned by weight
  // spaces (all weight multiplicities are one there, so these are exactly
  // the candidate subspaces respecting the Cartan grading)
  if (n == 2 && d <= 8) {
    bool ok = true;
    std::vector<UGen> gens = generator_order(n);
    for (unsigned mask = 1; mask + 1 < (1u << d) && ok; ++mask) {
      bool invariant = true;
      for (const UGen& g : gens) {
        const ScalarMatrix& m = rep.matrix(g);
        for (int col = 0; col < d && invariant; ++col) {
          if (!(mask & (1u << col))) continue;
          for (int row = 0; row < d; ++row)
            if (!(mask & (1u << row)) && !m(row, col).is_zero()) {
              invariant = false;
              break;
            }
        }
        if (!invariant) break;
      }
      if (invariant) ok = false;  // found a proper nonzero invariant subspace
    }
    r.add("no-proper-weight-invariant-subspace", ok, "");
  }

  // cyclicity: iterated generator images of the first basis vector span
  {
    std::vector<std::vector<Fraction>> queue;
    std::vector<Fraction> e0(d);
    e0[0] = Fraction(Laurent::one());
    // simple exact row-reduction over the fraction field
    std::vector<std::vector<Fraction>> rowsRed;
    auto insert_vec = [&](std::vector<Fraction> v) -> bool {
      for (const auto& row : rowsRed) {
        int p = -1;
        for (int i = 0; i < d; ++i)
          if (!row[i].is_zero()) {
            p = i;
            break;
          }
        if (p >= 0 && !v[p].is_zero()) {
          Fraction f = v[p] / row[p];
          for (int i = 0; i < d; ++i) v[i] = v[i] - f * row[i];
        }
      }
      bool nonzero = false;
      for (int i = 0; i < d; ++i)
        if (!v[i].is_zero()) nonzero = true;
      if (nonzero) rowsRed.push_back(v);
      return nonzero;
    };
    insert_vec(e0);
    queue.push_back(e0);
    std::vector<UGen> gens = generator_order(n);
    for (size_t head = 0; head < queue.size(); ++head) {
      for (const UGen& g : gens) {
        const ScalarMatrix& m = rep.matrix(g);
        std::vector<Fraction> img(d);
        for (int row = 0; row < d; ++row) {
          Fraction acc;
          for (int col = 0; col < d; ++col)
            if (!m(row, col).is_zero() && !queue[head][col].is_zero())
              acc = acc + Fraction(m(row, col)) * queue[head][col];
          img[row] = acc;
        }
        if (insert_vec(img)) queue.push_back(std::move(img));
      }
      if (rowsRed.size() == static_cast<size_t>(d)) break;
    }
    r.add("cyclic-span", rowsRed.size() == static_cast<size_t>(d), "");
  }

  return r;
}

}  // namespace qflag
