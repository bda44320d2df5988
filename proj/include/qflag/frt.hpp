#pragma once

#include <map>
#include <vector>

#include "qflag/grassmann.hpp"
#include "qflag/matrix.hpp"
#include "qflag/ncalg.hpp"
#include "qflag/report.hpp"

namespace qflag {

/// Spectral parameters of the positive-matrix module; must be mutually
/// distinct Laurent scalars.  lambda_{N+1} := 0 by convention.
struct LambdaParams {
  std::vector<Laurent> lambda;

  int n() const { return static_cast<int>(lambda.size()); }
  void validate() const;  // throws on duplicates or wrong arity

  /// Bridge from the Dynkin-label parameters: lambda_N = 1 and
  /// lambda_j = q^{2 sigma_j} lambda_{j+1}.
  static LambdaParams from_sigma(const std::vector<int>& sigma);
};

/// Cached per-rank data for the recursive module action of the positive
/// matrix M: the ahol idempotents, their two-leg prefix matrices, and the
/// inverse of the partially transposed R-matrix used to split the recursion
/// into individual generator letters.
class FrtState {
 public:
  FrtState(int n, LambdaParams lambda);

  int n() const { return n_; }
  const LambdaParams& lambda() const { return lambda_; }

  /// Action of the full matrix M on f: an N x N matrix over the ahol algebra.
  AlgMatrix m_dot(const AlgebraElement& f) const;

  /// Two-leg prefix matrix of level m (0 <= m <= N).
  const AlgMatrix& x12(int m) const;
  /// Ahol idempotent family E^(m) + Z^(m)*.
  const AlgMatrix& idempotent(int m) const;

 private:
  AlgMatrix action_on_word(const Word& w) const;

  int n_;
  LambdaParams lambda_;
  std::vector<AlgMatrix> idem_;       // level 0..N
  std::vector<AlgMatrix> x12_;        // level 0..N
  ScalarMatrix r_, rinv_, r21inv_;
  ScalarMatrix lsolve_;               // inverse of (R^-1)^{t2}
  AlgMatrix unit_action_;             // M . 1
  mutable std::map<Word, AlgMatrix, WordLess> memo_;
};

/// Two-leg prefix matrix built from the closed polynomial formula
///   R_12 X2 R_21 - (q - q^-1) X1 R_12 P X1,  X = E^(m) + Z^(m)*.
AlgMatrix build_X12(int n, int m);

/// Independent construction of the same matrix by inverting
/// I - F2 R Zs2 R^-1 through its nilpotent geometric series.
AlgMatrix build_X12_series(int n, int m);

/// Exact verification of the module structure: the idempotent-chain and
/// exchange identities of the prefix matrices, the reflection relation
/// through m_dot on every normal-ordered monomial up to max_degree, the
/// action on the unit, and hermiticity of M . 1.
Report verify_frt(int n, const LambdaParams& lambda, int max_degree);

}  // namespace qflag
