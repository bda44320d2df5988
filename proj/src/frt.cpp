#include "qflag/frt.hpp"

#include <sstream>

#include "qflag/rmatrix.hpp"

namespace qflag {

namespace {

std::string alg_witness(const AlgMatrix& a, const AlgMatrix& b) {
  int i, j;
  if (!AlgMatrix::first_difference(a, b, i, j)) return "";
  std::ostringstream os;
  os << "first mismatch at (" << i << "," << j << ")";
  return os.str();
}

// Entry scale: scalar matrix times a fixed algebra element.
AlgMatrix scale_by_element(const ScalarMatrix& m, const AlgebraElement& f) {
  AlgMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = m(i, j) * f;
  return r;
}

}  // namespace

void LambdaParams::validate() const {
  if (lambda.size() < 2) throw std::invalid_argument("need at least two spectral parameters");
  for (size_t i = 0; i < lambda.size(); ++i)
    for (size_t j = i + 1; j < lambda.size(); ++j)
      if (lambda[i] == lambda[j])
        throw std::invalid_argument("spectral parameters must be mutually distinct");
}

LambdaParams LambdaParams::from_sigma(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size()) + 1;
  LambdaParams p;
  p.lambda.assign(n, Laurent::one());
  for (int i = n - 2; i >= 0; --i) p.lambda[i] = Laurent::q(2 * sigma[i]) * p.lambda[i + 1];
  return p;
}

AlgMatrix build_X12(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("level out of range");
  const AlgMatrix I = alg_identity(n);
  const AlgMatrix X = ahol_idempotent(n, m);
  const AlgMatrix R12 = lift(build_R(n));
  const AlgMatrix P = lift(build_P(n));
  const AlgMatrix R21 = P * R12 * P;
  AlgMatrix X1 = kron(X, I), X2 = kron(I, X);
  return R12 * X2 * R21 - AlgebraElement::scalar(q_gamma()) * (X1 * R12 * P * X1);
}

AlgMatrix build_X12_series(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("level out of range");
  const AlgMatrix I2 = alg_identity(n * n);
  const AlgMatrix Zs2 = kron(alg_identity(n), matrix_adjoint(padded_block(n, m)));
  const AlgMatrix F2 = kron(alg_identity(n), lift(build_F(n, m)));
  const AlgMatrix E2 = kron(alg_identity(n), lift(build_E(n, m)));
  const AlgMatrix R12 = lift(build_R(n)), R12inv = lift(build_R_inverse(n));
  const AlgMatrix K = F2 * R12 * Zs2 * R12inv;
  AlgMatrix acc = I2, pow = I2;
  for (int i = 1; i <= n * n + 1; ++i) {
    pow = pow * K;
    if (pow.is_zero()) break;
    if (i == n * n + 1) throw std::logic_error("expected nilpotent correction");
    acc = acc + pow;
  }
  return acc * E2;
}

FrtState::FrtState(int n, LambdaParams lambda) : n_(n), lambda_(std::move(lambda)) {
  lambda_.validate();
  if (lambda_.n() != n) throw std::invalid_argument("need one spectral parameter per dimension");
  idem_.reserve(n + 1);
  x12_.reserve(n + 1);
  for (int m = 0; m <= n; ++m) {
    idem_.push_back(ahol_idempotent(n, m));
    x12_.push_back(build_X12(n, m));
  }
  r_ = build_R(n);
  rinv_ = build_R_inverse(n);
  ScalarMatrix p = build_P(n);
  r21inv_ = p * rinv_ * p;

  // Partial transpose of R^-1 on the second slot; its inverse splits the
  // recursion into individual letters.
  ScalarMatrix l(n * n, n * n);
  for (int i2 = 0; i2 < n; ++i2)
    for (int j1 = 0; j1 < n; ++j1)
      for (int k2 = 0; k2 < n; ++k2)
        for (int a = 0; a < n; ++a)
          l(i2 * n + j1, k2 * n + a) = rinv_(i2 * n + a, k2 * n + j1);
  lsolve_ = gauss_jordan_inverse(l);

  unit_action_ = AlgMatrix(n, n);
  for (int m = 1; m <= n; ++m) {
    Laurent coeff = lambda_.lambda[m - 1] - (m == n ? Laurent::zero() : lambda_.lambda[m]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!idem_[m](i, j).is_zero()) unit_action_(i, j) += coeff * idem_[m](i, j);
  }
}

const AlgMatrix& FrtState::x12(int m) const {
  if (m < 0 || m > n_) throw std::invalid_argument("level out of range");
  return x12_[m];
}

const AlgMatrix& FrtState::idempotent(int m) const {
  if (m < 0 || m > n_) throw std::invalid_argument("level out of range");
  return idem_[m];
}

AlgMatrix FrtState::action_on_word(const Word& w) const {
  auto it = memo_.find(w);
  if (it != memo_.end()) return it->second;
  if (w.empty()) return unit_action_;

  const Gen letter = w.front();
  const int s = letter.s, t = letter.t;
  const Word rest(w.begin() + 1, w.end());
  const AlgMatrix prev = action_on_word(rest);

  // A = (M . rest)_1 R21^-1, then B = X12(s) A; the columns with second leg
  // index s determine the action on every word with first letter in row s.
  const AlgMatrix A = kron(prev, alg_identity(n_)) * lift(r21inv_);
  const AlgMatrix B = x12_[s] * A;

  AlgMatrix result(n_, n_);
  for (int i1 = 0; i1 < n_; ++i1) {
    // gather the right-hand side G(i2, j1)
    std::vector<AlgebraElement> g(static_cast<size_t>(n_) * n_);
    for (int i2 = 0; i2 < n_; ++i2)
      for (int j1 = 0; j1 < n_; ++j1)
        g[static_cast<size_t>(i2) * n_ + j1] = B(i1 * n_ + i2, j1 * n_ + (s - 1));
    // solve for W(k2, a)
    for (int k2 = 0; k2 < n_; ++k2)
      for (int a = 0; a < n_; ++a) {
        AlgebraElement acc;
        for (int row = 0; row < n_ * n_; ++row) {
          const Laurent& c = lsolve_(k2 * n_ + a, row);
          if (!c.is_zero() && !g[row].is_zero()) acc += c * g[row];
        }
        if (k2 + 1 < s) {
          if (!acc.is_zero()) throw std::logic_error("recursion produced a value below the block");
        } else if (k2 + 1 == s) {
          if (!(acc == prev(i1, a)))
            throw std::logic_error("recursion failed to reproduce the previous layer");
        } else if (k2 + 1 == t) {
          result(i1, a) = acc;
        }
      }
  }

  memo_.emplace(w, result);
  return result;
}

AlgMatrix FrtState::m_dot(const AlgebraElement& f) const {
  AlgMatrix out(n_, n_);
  for (const auto& [w, c] : f.terms()) {
    AlgMatrix part = action_on_word(w);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (!part(i, j).is_zero()) out(i, j) += c * part(i, j);
  }
  return out;
}

namespace {

// Applies the matrix M on the chosen leg to an algebra-valued two-leg matrix:
// entrywise module action composed with the leg's matrix index contraction.
AlgMatrix apply_m_on_leg(const FrtState& st, const AlgMatrix& g, int leg) {
  const int n = st.n();
  AlgMatrix out(n * n, n * n);
  std::vector<AlgMatrix> acted(static_cast<size_t>(n * n) * (n * n));
  for (int row = 0; row < n * n; ++row)
    for (int col = 0; col < n * n; ++col) acted[static_cast<size_t>(row) * n * n + col] = st.m_dot(g(row, col));
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = 0; i2 < n; ++i2)
      for (int j = 0; j < n * n; ++j) {
        AlgebraElement acc;
        for (int k = 0; k < n; ++k) {
          const AlgMatrix& md = leg == 1 ? acted[static_cast<size_t>(k * n + i2) * n * n + j]
                                         : acted[static_cast<size_t>(i1 * n + k) * n * n + j];
          const AlgebraElement& val = leg == 1 ? md(i1, k) : md(i2, k);
          if (!val.is_zero()) acc += val;
        }
        out(i1 * n + i2, j) = acc;
      }
  return out;
}

}  // namespace

Report verify_frt(int n, const LambdaParams& lambda, int max_degree) {
  Report rep;
  {
    std::ostringstream os;
    os << "frt N=" << n;
    rep.suite = os.str();
  }
  lambda.validate();
  FrtState st(n, lambda);

  auto check = [&](const std::string& name, const AlgMatrix& a, const AlgMatrix& b) {
    bool ok = a == b;
    rep.add(name, ok, ok ? "" : alg_witness(a, b));
  };

  // agreement of the closed formula with the series inverse
  for (int m = 0; m <= n; ++m) {
    std::ostringstream tag;
    tag << "(m=" << m << ")";
    check("series-inverse-agreement" + tag.str(), st.x12(m), build_X12_series(n, m));
  }
  check("prefix-at-zero", st.x12(0), AlgMatrix(n * n, n * n));
  check("prefix-at-top", st.x12(n), alg_identity(n * n));

  // idempotent chain
  for (int m = 1; m <= n; ++m)
    for (int mm = m; mm <= n; ++mm) {
      std::ostringstream tag;
      tag << "(m=" << m << ",n=" << mm << ")";
      check("idempotent-chain" + tag.str(), st.x12(mm) * st.x12(m), st.x12(m));
    }

  // three-leg exchange
  {
    const ScalarMatrix r = build_R(n);
    for (int m = 1; m <= n; ++m)
      for (int mm = m; mm <= n; ++mm) {
        AlgMatrix X12m = embed(st.x12(m), LegEmbedding{3, n, 1, 2});
        AlgMatrix X13n = embed(st.x12(mm), LegEmbedding{3, n, 1, 3});
        AlgMatrix R32 = lift(embed(r, 3, n, 3, 2));
        AlgMatrix R23 = lift(embed(r, 3, n, 2, 3));
        std::ostringstream tag;
        tag << "(m=" << m << ",n=" << mm << ")";
        check("three-leg-exchange" + tag.str(), R32 * X12m * R23 * X13n, X13n * R32 * X12m * R23);
      }
  }

  // symmetrized exchange
  {
    const AlgMatrix R12inv = lift(build_R_inverse(n));
    const AlgMatrix I = alg_identity(n);
    for (int m = 1; m <= n; ++m)
      for (int mm = m; mm <= n; ++mm) {
        AlgMatrix Xm21 = embed(st.x12(m), LegEmbedding{2, n, 2, 1});
        AlgMatrix Xn21 = embed(st.x12(mm), LegEmbedding{2, n, 2, 1});
        AlgMatrix Xn2 = kron(I, st.idempotent(mm)), Xm2 = kron(I, st.idempotent(m));
        AlgMatrix Xn1 = kron(st.idempotent(mm), I), Xm1 = kron(st.idempotent(m), I);
        std::ostringstream tag;
        tag << "(m=" << m << ",n=" << mm << ")";
        check("symmetrized-exchange" + tag.str(),
              (Xm21 * Xn2 + Xn21 * Xm2) * R12inv,
              R12inv * (st.x12(m) * Xn1 + st.x12(mm) * Xm1));
      }
  }

  // inversion identity driven through the action itself, on the unit and on
  // every generator: (I - F2 R Zs2 R^-1) [M1 R21^-1 . (X2 f)] = E2 [M1 R21^-1 . f]
  {
    const ScalarMatrix rs = build_R(n), rsinv = build_R_inverse(n), p = build_P(n);
    const ScalarMatrix r21inv = p * rsinv * p;
    std::vector<AlgebraElement> probes{AlgebraElement::unit()};
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t)
        probes.push_back(AlgebraElement::generator(n, Kind::ahol, s, t));
    for (int m = 1; m < n; ++m) {
      const AlgMatrix Km = kron(alg_identity(n), lift(build_F(n, m))) * lift(rs) *
                           kron(alg_identity(n), matrix_adjoint(padded_block(n, m))) * lift(rsinv);
      const AlgMatrix E2 = kron(alg_identity(n), lift(build_E(n, m)));
      for (size_t pi = 0; pi < probes.size(); ++pi) {
        const AlgebraElement& f = probes[pi];
        AlgMatrix H(n * n, n * n);
        for (int i1 = 0; i1 < n; ++i1)
          for (int i2 = 0; i2 < n; ++i2)
            for (int j2 = 0; j2 < n; ++j2) {
              const AlgebraElement& x = st.idempotent(m)(i2, j2);
              if (!x.is_zero()) H(i1 * n + i2, i1 * n + j2) = x * f;
            }
        AlgMatrix lhs = (alg_identity(n * n) - Km) * apply_m_on_leg(st, lift(r21inv) * H, 1);
        AlgMatrix rhs = E2 * apply_m_on_leg(st, scale_by_element(r21inv, f), 1);
        std::ostringstream tag;
        tag << "(m=" << m << ",probe=" << pi << ")";
        check("inversion-identity" + tag.str(), lhs, rhs);
      }
    }
  }

  // action on the unit
  {
    AlgMatrix mu = st.m_dot(AlgebraElement::unit());
    bool diag_ok = true, sub_ok = true, upper_ok = true;
    for (int s = 1; s <= n; ++s) {
      if (!(mu(s - 1, s - 1) == AlgebraElement::scalar(lambda.lambda[s - 1]))) diag_ok = false;
      if (s < n) {
        Laurent c = lambda.lambda[s - 1] - lambda.lambda[s];
        AlgebraElement expect = c * AlgebraElement::generator(n, Kind::ahol, s, s + 1);
        if (!(mu(s, s - 1) == expect)) sub_ok = false;
      }
      for (int t = s + 1; t <= n; ++t)
        if (!mu(s - 1, t - 1).is_zero()) upper_ok = false;
    }
    rep.add("action-on-unit-diagonal", diag_ok, "");
    rep.add("action-on-unit-subdiagonal", sub_ok, "");
    // the holomorphic half of the hermitian matrix dies on the unit, so the
    // adjoint of the action matrix must rebuild the same spectral
    // combination from the holomorphic blocks
    rep.add("action-on-unit-upper-vanishes", upper_ok, "");
    {
      AlgMatrix mirror(n, n);
      for (int m = 1; m <= n; ++m) {
        Laurent c = lambda.lambda[m - 1] - (m == n ? Laurent::zero() : lambda.lambda[m]);
        AlgMatrix jm = embed_grassmann(n, m);
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b)
            if (!jm(a, b).is_zero()) mirror(a, b) += c * jm(a, b);
      }
      rep.add("hermiticity-mirror", matrix_adjoint(mu) == mirror, "");
    }
  }

  // reflection relation through the recursive action, monomial by monomial
  {
    std::vector<Gen> gens;
    for (int s = 1; s <= n; ++s)
      for (int t = s + 1; t <= n; ++t) gens.push_back(Gen{s, t});
    std::vector<Word> monos{Word{}};
    for (size_t lo = 0, d = 1; d <= static_cast<size_t>(max_degree); ++d) {
      size_t hi = monos.size();
      for (size_t i = lo; i < hi; ++i)
        for (const Gen& g : gens) {
          if (!monos[i].empty() && g < monos[i].back()) continue;  // keep normal order
          Word w = monos[i];
          w.push_back(g);
          monos.push_back(std::move(w));
        }
      lo = hi;
    }
    const ScalarMatrix p = build_P(n);
    const ScalarMatrix rinv = build_R_inverse(n);
    const ScalarMatrix r21inv = p * rinv * p;
    for (const Word& w : monos) {
      AlgebraElement f = w.empty() ? AlgebraElement::unit()
                                   : AlgebraElement::from_terms(n, Kind::ahol,
                                                                {{w, Laurent::one()}});
      // left side: M2 R12^-1 M1 R21^-1 . f, right side: R12^-1 M1 R21^-1 M2 . f
      AlgMatrix lhs = apply_m_on_leg(st, lift(rinv) * apply_m_on_leg(st, scale_by_element(r21inv, f), 1), 2);
      AlgMatrix rhs = lift(rinv) * apply_m_on_leg(st, lift(r21inv) * kron(alg_identity(n), st.m_dot(f)), 1);
      std::ostringstream tag;
      tag << "(f=" << word_str(w, Kind::ahol) << ")";
      check("reflection" + tag.str(), lhs, rhs);
    }
  }

  return rep;
}

}  // namespace qflag
