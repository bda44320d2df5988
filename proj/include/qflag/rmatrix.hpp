#pragma once

#include "qflag/matrix.hpp"
#include "qflag/report.hpp"

namespace qflag {

/// The N^2 x N^2 solution of the Yang-Baxter equation used throughout:
/// R_{jk,st} = d_{js} d_{kt} + (q - q^{sgn(k-j)}) d_{jt} d_{ks}, sgn(0) = 0.
/// Indices in this header are 1-based like the math; storage is row-major
/// over the lexicographic two-leg basis.
ScalarMatrix build_R(int n);
ScalarMatrix build_R_inverse(int n);  // closed form: substitute v -> v^-1

/// Flip operator P_{jk,st} = d_{jt} d_{ks}.
ScalarMatrix build_P(int n);
/// diag(R)_{jk,st} = q^{d_{jk}} d_{js} d_{kt} and its inverse.
ScalarMatrix build_diagR(int n);
ScalarMatrix build_diagR_inverse(int n);
/// Orthogonal projector onto the first m basis vectors, and its complement.
ScalarMatrix build_E(int n, int m);
ScalarMatrix build_F(int n, int m);
/// Matrix unit E_{jk} (rank-one operator).
ScalarMatrix matrix_unit(int n, int j, int k);

/// Exhaustive exact verification of the R-matrix identities: Yang-Baxter,
/// inversion by q -> q^-1, transpose flip, the Hecke condition, lower
/// triangularity, the projector absorption/commutation identities for all
/// 0 <= m <= N, and the diag(R) corner identities for all admissible (m, n).
Report verify_rmatrix_identities(int n);

}  // namespace qflag
