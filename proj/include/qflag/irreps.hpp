#pragma once

#include <map>
#include <string>
#include <vector>

#include "qflag/action.hpp"
#include "qflag/matrix.hpp"
#include "qflag/ncalg.hpp"
#include "qflag/report.hpp"

namespace qflag {

/// Integer weight labels: the j-th Cartan element acts on the vector with
/// eigenvalue q^{w_j}.
struct Weight {
  std::vector<int> w;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// An extracted finite-dimensional module: ordered basis (basis[0] is the
/// unit, the cyclic lowest-weight vector), one exact matrix per generator,
/// one weight label per basis vector.
struct Representation {
  int n = 0;
  SigmaParams sigma;
  std::vector<AlgebraElement> basis;
  std::map<std::string, ScalarMatrix> matrices;  // keyed by ugen_name
  std::vector<Weight> weights;

  int dimension() const { return static_cast<int>(basis.size()); }
  const ScalarMatrix& matrix(const UGen& g) const;
};

struct ClosureExceedsCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonDiagonalWeight : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Classical dimension of the irreducible module with the given Dynkin
/// labels: prod_{i<j} (sigma_i + ... + sigma_{j-1} + j - i) / (j - i).
long weyl_dimension(int n, const std::vector<int>& sigma);

/// Breadth-first closure of the cyclic module generated by the unit, with
/// exact echelon elimination; cap < 0 means weyl_dimension + 2.
Representation build_irrep(int n, const SigmaParams& sigma, long cap = -1);

/// Checks the defining relations as matrix identities, lowest-weight
/// conditions, the dimension against the classical formula, weight-diagram
/// symmetry, and cyclicity.
Report verify_representation(const Representation& rep);

}  // namespace qflag
