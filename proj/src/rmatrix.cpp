#include "qflag/rmatrix.hpp"

#include <sstream>

namespace qflag {

namespace {

int sgn(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string witness(const ScalarMatrix& a, const ScalarMatrix& b) {
  int i, j;
  if (!ScalarMatrix::first_difference(a, b, i, j)) return "";
  std::ostringstream os;
  os << "first mismatch at (" << i << "," << j << "): " << a(i, j).str() << " vs " << b(i, j).str();
  return os.str();
}

}  // namespace

ScalarMatrix build_R(int n) {
  ScalarMatrix r(n * n, n * n);
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) {
      r((j - 1) * n + (k - 1), (j - 1) * n + (k - 1)) += Laurent::one();
      // second delta term lands at column (k, j)
      r((j - 1) * n + (k - 1), (k - 1) * n + (j - 1)) += Laurent::q(1) - Laurent::q(sgn(k - j));
    }
  return r;
}

ScalarMatrix build_R_inverse(int n) {
  ScalarMatrix r = build_R(n);
  ScalarMatrix out(n * n, n * n);
  for (int i = 0; i < n * n; ++i)
    for (int j = 0; j < n * n; ++j) out(i, j) = r(i, j).bar();
  return out;
}

ScalarMatrix build_P(int n) {
  ScalarMatrix p(n * n, n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) p(j * n + k, k * n + j) = Laurent::one();
  return p;
}

ScalarMatrix build_diagR(int n) {
  ScalarMatrix d(n * n, n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) d(j * n + k, j * n + k) = Laurent::q(j == k ? 1 : 0);
  return d;
}

ScalarMatrix build_diagR_inverse(int n) {
  ScalarMatrix d(n * n, n * n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) d(j * n + k, j * n + k) = Laurent::q(j == k ? -1 : 0);
  return d;
}

ScalarMatrix build_E(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("projector level out of range");
  ScalarMatrix e(n, n);
  for (int j = 0; j < m; ++j) e(j, j) = Laurent::one();
  return e;
}

ScalarMatrix build_F(int n, int m) {
  if (m < 0 || m > n) throw std::invalid_argument("projector level out of range");
  ScalarMatrix f(n, n);
  for (int j = m; j < n; ++j) f(j, j) = Laurent::one();
  return f;
}

ScalarMatrix matrix_unit(int n, int j, int k) {
  ScalarMatrix e(n, n);
  e(j - 1, k - 1) = Laurent::one();
  return e;
}

Report verify_rmatrix_identities(int n) {
  Report rep;
  {
    std::ostringstream os;
    os << "rmatrix N=" << n;
    rep.suite = os.str();
  }
  const ScalarMatrix R = build_R(n);
  const ScalarMatrix Rinv = build_R_inverse(n);
  const ScalarMatrix P = build_P(n);
  const ScalarMatrix Q = build_diagR(n);
  const ScalarMatrix Qinv = build_diagR_inverse(n);
  const ScalarMatrix I2 = ScalarMatrix::identity(n * n, Laurent::one());

  auto check = [&](const std::string& name, const ScalarMatrix& a, const ScalarMatrix& b) {
    bool ok = a == b;
    rep.add(name, ok, ok ? "" : witness(a, b));
  };

  // Yang-Baxter on three legs
  {
    ScalarMatrix R12 = embed(R, 3, n, 1, 2);
    ScalarMatrix R13 = embed(R, 3, n, 1, 3);
    ScalarMatrix R23 = embed(R, 3, n, 2, 3);
    check("yang-baxter", R12 * R13 * R23, R23 * R13 * R12);
  }

  // closed-form inverse, against both the identity and Gauss-Jordan
  check("inverse-by-q-inversion", Rinv * R, I2);
  check("inverse-matches-gauss-jordan", Rinv, gauss_jordan_inverse(R));

  // transpose flip
  check("transpose-flip", R.transpose(), P * R * P);

  const ScalarMatrix R21 = P * R * P;
  const ScalarMatrix R21inv = P * Rinv * P;

  // Hecke condition, both forms
  {
    ScalarMatrix lhs = q_gamma() * P;
    check("hecke-a", lhs, R - R21inv);
    check("hecke-b", lhs, R21 - Rinv);
  }

  // lower triangularity in the lexicographic basis
  {
    bool ok = true;
    std::string detail;
    for (int row = 0; row < n * n && ok; ++row)
      for (int col = row + 1; col < n * n; ++col)
        if (!R(row, col).is_zero()) {
          ok = false;
          std::ostringstream os;
          os << "nonzero above diagonal at (" << row << "," << col << ")";
          detail = os.str();
          break;
        }
    rep.add("lower-triangular", ok, detail);
  }

  // projector absorption and commutation, all levels
  for (int m = 0; m <= n; ++m) {
    std::ostringstream tag;
    tag << "(m=" << m << ")";
    ScalarMatrix E1 = embed(build_E(n, m), 2, n, 1);
    ScalarMatrix E2 = embed(build_E(n, m), 2, n, 2);
    ScalarMatrix F1 = embed(build_F(n, m), 2, n, 1);
    ScalarMatrix F2 = embed(build_F(n, m), 2, n, 2);
    check("projector-absorb-E1" + tag.str(), E1 * R, E1 * R * E1);
    check("projector-absorb-E2" + tag.str(), R * E2, E2 * R * E2);
    check("projector-absorb-F1" + tag.str(), R * F1, F1 * R * F1);
    check("projector-absorb-F2" + tag.str(), F2 * R, F2 * R * F2);
    check("mixed-projector-EF" + tag.str(), E1 * F2 * R, E1 * F2);
    check("projector-commute-EE" + tag.str(), E1 * E2 * R, R * E1 * E2);
    check("projector-commute-FF" + tag.str(), F1 * F2 * R, R * F1 * F2);
  }

  // diag(R) corner identities on the matrix units E^{(m)} F^{(m-1)}
  for (int m = 1; m <= n; ++m) {
    std::ostringstream tag;
    tag << "(n=" << m << ")";
    ScalarMatrix Em1 = embed(build_E(n, m), 2, n, 1);
    ScalarMatrix Em2 = embed(build_E(n, m), 2, n, 2);
    ScalarMatrix Fp1 = embed(build_F(n, m - 1), 2, n, 1);
    ScalarMatrix Fp2 = embed(build_F(n, m - 1), 2, n, 2);
    check("diagR-absorb-left+" + tag.str(), Em1 * R * Fp1, Q * Em1 * Fp1);
    check("diagR-absorb-left-" + tag.str(), Em1 * Rinv * Fp1, Qinv * Em1 * Fp1);
    check("diagR-absorb-right+" + tag.str(), Fp2 * R * Em2, Q * Em2 * Fp2);
    check("diagR-absorb-right-" + tag.str(), Fp2 * Rinv * Em2, Qinv * Em2 * Fp2);
  }
  for (int m = 1; m <= n; ++m)
    for (int mm = 1; mm <= n; ++mm) {
      ScalarMatrix D1 = embed(build_E(n, m) * build_F(n, m - 1), 2, n, 1);
      ScalarMatrix D2 = embed(build_E(n, mm) * build_F(n, mm - 1), 2, n, 2);
      std::ostringstream tag;
      tag << "(m=" << m << ",n=" << mm << ")";
      if (m >= mm) {
        check("diagR-absorb-pair+" + tag.str(), R * D1 * D2, Q * D1 * D2);
        check("diagR-absorb-pair-" + tag.str(), Rinv * D1 * D2, Qinv * D1 * D2);
      }
      if (m != mm) {
        check("diagR-trivial-offdiag+" + tag.str(), Q * D1 * D2, D1 * D2);
        check("diagR-trivial-offdiag-" + tag.str(), Qinv * D1 * D2, D1 * D2);
      }
    }

  return rep;
}

}  // namespace qflag
