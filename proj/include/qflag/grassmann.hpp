#pragma once

#include "qflag/matrix.hpp"
#include "qflag/ncalg.hpp"
#include "qflag/report.hpp"

namespace qflag {

using AlgMatrix = Matrix<AlgebraElement>;

/// Lift a scalar matrix to an algebra-valued one.
AlgMatrix lift(const ScalarMatrix& m);
AlgMatrix alg_identity(int size);

/// The upper unitriangular coordinate matrix of the flag algebra
/// (unit diagonal, z[j,k] above it) and the ahol adjoint variant.
AlgMatrix flag_matrix(int n, Kind kind = Kind::hol);

/// Exact inverse of an upper unitriangular algebra-valued matrix via the
/// nilpotent geometric series; entry products keep their order.
AlgMatrix invert_unitriangular(const AlgMatrix& z);

/// Conjugated projector Z^-1 E^(m) Z: rows > m vanish, columns <= m carry
/// E^(m), the upper-right block holds the embedded Grassmann coordinates.
AlgMatrix embed_grassmann(int n, int m);

/// Upper-right m x (N-m) block of embed_grassmann (the z^{(m)} coordinates).
AlgMatrix grassmann_block(int n, int m);

/// Padded square matrix with the Grassmann block in the upper right corner.
AlgMatrix padded_block(int n, int m);

/// E^(m) + adjoint of the padded block: the ahol idempotent family.
AlgMatrix ahol_idempotent(int n, int m);

/// Entrywise adjoint combined with matrix transposition.
AlgMatrix matrix_adjoint(const AlgMatrix& m);

/// Exhaustive exact verification of the flag/Grassmann relations:
/// reconstruction of Z from the blocks, the nested-product constraints, the
/// classical block constraint, the cross commutation relations for all
/// m <= n, the reduced R-matrix exchange relation per block, the mixed
/// projector exchange identities, the entrywise Grassmann relations, and the
/// ahol transports of the idempotent/exchange identities.
Report verify_flag_grassmann(int n);

}  // namespace qflag
