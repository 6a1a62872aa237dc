#ifndef SYMPAIR_LINALG_HPP
#define SYMPAIR_LINALG_HPP

#include <Eigen/Core>

#include "sympair/scalar.hpp"

namespace sympair {

using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// In-place reduced row echelon form with exact first-nonzero pivoting.
/// Returns the rank.
Eigen::Index row_reduce(MatX& m);

Eigen::Index rank_of(const MatX& m);

/// Rows form a canonical (RREF) basis of the kernel {x : m*x = 0}.
MatX nullspace(const MatX& m);

Scalar determinant(const MatX& m);

/// Exact inverse; throws std::invalid_argument on singular input.
MatX inverse(const MatX& m);

/// Congruence diagonalization of a symmetric matrix: returns (diag, p)
/// with p^T * g * p diagonal and diag its diagonal entries.
std::pair<VecX, MatX> symmetric_diagonalize(const MatX& g);

}  // namespace sympair

#endif  // SYMPAIR_LINALG_HPP
