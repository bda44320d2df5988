#include "qflag/grassmann.hpp"

#include <sstream>

#include "qflag/rmatrix.hpp"

namespace qflag {

namespace {

int sgn(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string alg_witness(const AlgMatrix& a, const AlgMatrix& b) {
  int i, j;
  if (!AlgMatrix::first_difference(a, b, i, j)) return "";
  std::ostringstream os;
  os << "first mismatch at (" << i << "," << j << "): " << a(i, j).str() << " vs " << b(i, j).str();
  return os.str();
}

}  // namespace

AlgMatrix lift(const ScalarMatrix& m) {
  AlgMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) r(i, j) = AlgebraElement::scalar(m(i, j));
  return r;
}

AlgMatrix alg_identity(int size) { return AlgMatrix::identity(size, AlgebraElement::unit()); }

AlgMatrix flag_matrix(int n, Kind kind) {
  AlgMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    z(j, j) = AlgebraElement::unit();
    for (int k = j + 1; k < n; ++k) z(j, k) = AlgebraElement::generator(n, kind, j + 1, k + 1);
  }
  return z;
}

AlgMatrix invert_unitriangular(const AlgMatrix& z) {
  const int n = z.rows();
  if (z.cols() != n) throw std::invalid_argument("not square");
  for (int i = 0; i < n; ++i) {
    if (!(z(i, i) == AlgebraElement::unit())) throw std::invalid_argument("diagonal is not the unit");
    for (int j = 0; j < i; ++j)
      if (!z(i, j).is_zero()) throw std::invalid_argument("not upper triangular");
  }
  AlgMatrix nil = z - alg_identity(n);
  AlgMatrix acc = alg_identity(n);
  AlgMatrix pow = alg_identity(n);
  for (int k = 1; k < n; ++k) {
    pow = pow * nil;
    if (pow.is_zero()) break;
    acc = (k % 2 == 1) ? acc - pow : acc + pow;
  }
  return acc;
}

AlgMatrix embed_grassmann(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("block level out of range");
  AlgMatrix z = flag_matrix(n);
  return invert_unitriangular(z) * lift(build_E(n, m)) * z;
}

AlgMatrix grassmann_block(int n, int m) {
  AlgMatrix full = embed_grassmann(n, m);
  AlgMatrix blk(m, n - m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < n - m; ++k) blk(j, k) = full(j, m + k);
  return blk;
}

AlgMatrix padded_block(int n, int m) { return embed_grassmann(n, m) - lift(build_E(n, m)); }

AlgMatrix matrix_adjoint(const AlgMatrix& m) {
  AlgMatrix r(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(j, i) = m(i, j).adjoint();
  return r;
}

AlgMatrix ahol_idempotent(int n, int m) {
  return lift(build_E(n, m)) + matrix_adjoint(padded_block(n, m));
}

Report verify_flag_grassmann(int n) {
  Report rep;
  {
    std::ostringstream os;
    os << "flag/grassmann N=" << n;
    rep.suite = os.str();
  }
  auto check = [&](const std::string& name, const AlgMatrix& a, const AlgMatrix& b) {
    bool ok = a == b;
    rep.add(name, ok, ok ? "" : alg_witness(a, b));
  };

  const AlgMatrix Z = flag_matrix(n);
  const AlgMatrix Zinv = invert_unitriangular(Z);
  const AlgMatrix I = alg_identity(n);

  check("unitriangular-inverse-left", Zinv * Z, I);
  check("unitriangular-inverse-right", Z * Zinv, I);

  std::vector<AlgMatrix> J(n + 1);       // conjugated projectors, level 0..N
  std::vector<AlgMatrix> padded(n + 1);  // their off-diagonal parts
  for (int m = 0; m <= n; ++m) {
    J[m] = embed_grassmann(n, m);
    padded[m] = J[m] - lift(build_E(n, m));
  }

  // block-shape invariants
  for (int m = 1; m < n; ++m) {
    std::ostringstream tag;
    tag << "(m=" << m << ")";
    AlgMatrix E = lift(build_E(n, m));
    check("block-shape-rows" + tag.str(), E * J[m], J[m]);
    check("block-shape-cols" + tag.str(), J[m] * E, E);
  }

  // reconstruction of Z from the blocks, both forms
  {
    AlgMatrix sum1(n, n), sum2 = alg_identity(n);
    for (int m = 1; m <= n; ++m) sum1 = sum1 + lift(build_F(n, m - 1)) * J[m];
    for (int m = 1; m < n; ++m) sum2 = sum2 + lift(build_F(n, m - 1)) * padded[m];
    check("reconstruction-full", sum1, Z);
    check("reconstruction-offdiag", sum2, Z);
  }

  // nested products
  for (int m = 1; m < n; ++m)
    for (int mm = m; mm < n; ++mm) {
      std::ostringstream tag;
      tag << "(m=" << m << ",n=" << mm << ")";
      if (m < mm) check("nested-product-left" + tag.str(), J[m] * J[mm], J[m]);
      check("nested-product-right" + tag.str(), J[mm] * J[m], J[m]);
    }

  // classical block constraint
  for (int m = 1; m < n; ++m)
    for (int mm = m + 1; mm < n; ++mm) {
      AlgMatrix zm = grassmann_block(n, m), zn = grassmann_block(n, mm);
      AlgMatrix left(m, n), right(n, n - mm);
      for (int j = 0; j < m; ++j) left(j, j) = AlgebraElement::unit();
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < n - m; ++k) left(j, m + k) = zm(j, k);
      for (int j = 0; j < mm; ++j)
        for (int k = 0; k < n - mm; ++k) right(j, k) = -zn(j, k);
      for (int k = 0; k < n - mm; ++k) right(mm + k, k) = AlgebraElement::unit();
      std::ostringstream tag;
      tag << "(m=" << m << ",n=" << mm << ")";
      check("classical-constraint" + tag.str(), left * right, AlgMatrix::zero(m, n - mm));
    }

  // cross commutation on two legs, m <= n
  {
    const AlgMatrix R12 = lift(build_R(n) /* two-leg */);
    const AlgMatrix R21 = lift(build_P(n) * build_R(n) * build_P(n));
    for (int m = 1; m < n; ++m)
      for (int mm = m; mm < n; ++mm) {
        AlgMatrix Jm1 = kron(J[m], I), Jn2 = kron(I, J[mm]);
        std::ostringstream tag;
        tag << "(m=" << m << ",n=" << mm << ")";
        check("cross-commutation" + tag.str(), R21 * Jm1 * R12 * Jn2, Jn2 * R21 * Jm1 * R12);
      }
  }

  // reduced R-matrix exchange per block (for side dimension 1 the reduced
  // matrix degenerates to the 1x1 matrix [q])
  for (int m = 1; m < n; ++m) {
    AlgMatrix zb = grassmann_block(n, m);
    ScalarMatrix rm = build_R(m);
    ScalarMatrix rn = build_R(n - m);
    ScalarMatrix rm21 = build_P(m) * rm * build_P(m);
    std::ostringstream tag;
    tag << "(m=" << m << ")";
    check("reduced-rmatrix-exchange" + tag.str(), lift(rm21) * kron(zb, zb),
          kron_swapped(zb, zb) * lift(rn));
  }

  // mixed projector exchange identities, 0 <= m <= n <= N
  {
    const AlgMatrix R12 = lift(build_R(n));
    const AlgMatrix R12inv = lift(build_R_inverse(n));
    const AlgMatrix P = lift(build_P(n));
    const AlgMatrix R21inv = P * R12inv * P;
    const AlgMatrix Q = lift(build_diagR(n));
    const Laurent gamma = q_gamma();
    std::vector<AlgMatrix> X(n + 1), Xbar(n + 1), Y(n + 1);
    for (int m = 0; m <= n; ++m) {
      AlgMatrix E = lift(build_E(n, m)), F = lift(build_F(n, m));
      X[m] = Z * E;
      Xbar[m] = Zinv * E;
      Y[m] = E * Z * F;
      std::ostringstream tag;
      tag << "(m=" << m << ")";
      check("projector-factorization-left" + tag.str(), Xbar[m] * X[m], E);
      check("projector-factorization-right" + tag.str(), X[m] * Xbar[m], E);
      check("projector-factorization-conjugate" + tag.str(), Xbar[m] * (X[m] + Y[m]), J[m]);
    }
    for (int m = 0; m <= n; ++m)
      for (int mm = m; mm <= n; ++mm) {
        std::ostringstream tag;
        tag << "(m=" << m << ",n=" << mm << ")";
        AlgMatrix Xm1 = kron(X[m], I), Xn2 = kron(I, X[mm]);
        AlgMatrix Ym1 = kron(Y[m], I), Yn2 = kron(I, Y[mm]);
        AlgMatrix Em1 = kron(lift(build_E(n, m)), I), En2 = kron(I, lift(build_E(n, mm)));
        AlgMatrix Fm1 = kron(lift(build_F(n, m)), I), Fm2 = kron(I, lift(build_F(n, m)));
        AlgMatrix Fn1 = kron(lift(build_F(n, mm)), I);
        check("mixed-exchange-XX" + tag.str(), R21inv * Xm1 * Q * Xn2,
              Xn2 * Q * Xm1 * R21inv * Em1);
        check("mixed-exchange-XY" + tag.str(), R21inv * Xm1 * Q * Yn2, Yn2 * Xm1);
        check("mixed-exchange-YX" + tag.str(), Em1 * R12 * Ym1 * Q * Xn2,
              Xn2 * Q * Ym1 * R12 * Fm1 * En2);
        check("mixed-exchange-YY" + tag.str(), Em1 * R12 * Ym1 * Q * Yn2,
              Yn2 * Ym1 * R12 + AlgebraElement::scalar(gamma) * (Xn2 * Fm2 * Ym1 * Fn1 * P));
      }
  }

  // entrywise Grassmann relations inside the flag algebra
  for (int m = 1; m < n; ++m) {
    AlgMatrix zb = grassmann_block(n, m);
    bool ok = true;
    std::string detail;
    for (int j = 1; j <= m && ok; ++j)
      for (int k = m + 1; k <= n && ok; ++k)
        for (int s = 1; s <= m && ok; ++s)
          for (int t = m + 1; t <= n && ok; ++t) {
            AlgebraElement zjk = zb(j - 1, k - m - 1), zst = zb(s - 1, t - m - 1);
            AlgebraElement zsk = zb(s - 1, k - m - 1), zjt = zb(j - 1, t - m - 1);
            Laurent coeff = Laurent::q(sgn(j - s)) - Laurent::q(sgn(k - t));
            AlgebraElement lhs = zjk * zst - zst * zjk;
            AlgebraElement rhs = coeff * (zsk * zjt);
            if (!(lhs == rhs)) {
              ok = false;
              std::ostringstream os;
              os << "failed at m=" << m << " (j,k,s,t)=(" << j << "," << k << "," << s << "," << t
                 << ")";
              detail = os.str();
            }
          }
    std::ostringstream tag;
    tag << "(m=" << m << ")";
    rep.add("entrywise-grassmann-relations" + tag.str(), ok, detail);
  }

  // ahol transport: idempotent family and its exchange relation
  {
    const AlgMatrix R12 = lift(build_R(n));
    const AlgMatrix P = lift(build_P(n));
    const AlgMatrix R21 = P * R12 * P;
    std::vector<AlgMatrix> XA(n + 1);
    for (int m = 0; m <= n; ++m) XA[m] = ahol_idempotent(n, m);
    for (int m = 0; m <= n; ++m)
      for (int mm = m; mm <= n; ++mm) {
        std::ostringstream tag;
        tag << "(m=" << m << ",n=" << mm << ")";
        check("ahol-idempotent-left" + tag.str(), XA[mm] * XA[m], XA[m]);
        check("ahol-idempotent-right" + tag.str(), XA[m] * XA[mm], XA[m]);
        AlgMatrix Xm1 = kron(XA[m], I), Xn2 = kron(I, XA[mm]);
        check("ahol-exchange" + tag.str(), R21 * Xm1 * R12 * Xn2, Xn2 * R21 * Xm1 * R12);
      }
  }

  return rep;
}

}  // namespace qflag
