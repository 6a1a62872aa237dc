#include "sympair/linalg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace sympair {

Eigen::Index row_reduce(MatX& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index pivot_row = 0;
  for (Eigen::Index col = 0; col < cols && pivot_row < rows; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = pivot_row; r < rows; ++r) {
      if (!m(r, col).is_zero()) { sel = r; break; }
    }
    if (sel < 0) continue;
    if (sel != pivot_row) m.row(sel).swap(m.row(pivot_row));
    Scalar inv_pivot = Scalar(1) / m(pivot_row, col);
    for (Eigen::Index c = col; c < cols; ++c) m(pivot_row, c) *= inv_pivot;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, col).is_zero()) continue;
      Scalar f = m(r, col);
      for (Eigen::Index c = col; c < cols; ++c) m(r, c) -= f * m(pivot_row, c);
    }
    ++pivot_row;
  }
  return pivot_row;
}

Eigen::Index rank_of(const MatX& m) {
  MatX copy = m;
  return row_reduce(copy);
}

MatX nullspace(const MatX& m) {
  const Eigen::Index cols = m.cols();
  MatX r = m;
  row_reduce(r);

  std::vector<Eigen::Index> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index row = 0; row < r.rows(); ++row) {
    Eigen::Index col = 0;
    while (col < cols && r(row, col).is_zero()) ++col;
    if (col == cols) break;
    pivot_col_of_row.push_back(col);
    is_pivot[static_cast<std::size_t>(col)] = true;
  }

  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  MatX basis(static_cast<Eigen::Index>(free_cols.size()), cols);
  basis.setConstant(Scalar(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(static_cast<Eigen::Index>(k), free_cols[k]) = Scalar(1);
    for (std::size_t row = 0; row < pivot_col_of_row.size(); ++row) {
      basis(static_cast<Eigen::Index>(k), pivot_col_of_row[row]) =
          -r(static_cast<Eigen::Index>(row), free_cols[k]);
    }
  }
  row_reduce(basis);
  return basis;
}

Scalar determinant(const MatX& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
  MatX a = m;
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = col; r < n; ++r) {
      if (!a(r, col).is_zero()) { sel = r; break; }
    }
    if (sel < 0) return Scalar(0);
    if (sel != col) {
      a.row(sel).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    Scalar inv_pivot = Scalar(1) / a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      Scalar f = a(r, col) * inv_pivot;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

MatX inverse(const MatX& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: square matrix required");
  const Eigen::Index n = m.rows();
  MatX aug(n, 2 * n);
  aug.leftCols(n) = m;
  aug.rightCols(n) = MatX::Identity(n, n);
  if (row_reduce(aug) != n) throw std::invalid_argument("inverse: singular matrix");
  return aug.rightCols(n);
}

std::pair<VecX, MatX> symmetric_diagonalize(const MatX& g) {
  if (g.rows() != g.cols()) throw std::invalid_argument("symmetric_diagonalize: square matrix required");
  const Eigen::Index n = g.rows();
  MatX a = g;
  MatX p = MatX::Identity(n, n);

  auto add_col_into = [&](Eigen::Index dst, Eigen::Index src, const Scalar& f) {
    // basis change u_dst += f*u_src, applied as a congruence.
    for (Eigen::Index c = 0; c < n; ++c) a(dst, c) += f * a(src, c);
    for (Eigen::Index r = 0; r < n; ++r) a(r, dst) += f * a(r, src);
    for (Eigen::Index r = 0; r < n; ++r) p(r, dst) += f * p(r, src);
  };
  auto swap_basis = [&](Eigen::Index i, Eigen::Index j) {
    a.row(i).swap(a.row(j));
    a.col(i).swap(a.col(j));
    p.col(i).swap(p.col(j));
  };

  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k).is_zero()) {
      Eigen::Index diag = -1, off = -1;
      for (Eigen::Index j = k + 1; j < n; ++j) {
        if (diag < 0 && !a(j, j).is_zero()) diag = j;
        if (off < 0 && !a(k, j).is_zero()) off = j;
      }
      if (diag >= 0) {
        swap_basis(k, diag);
      } else if (off >= 0) {
        // remaining diagonal is zero, so this makes a(k,k) = 2*a(k,off) != 0
        add_col_into(k, off, Scalar(1));
      } else {
        continue;  // row k is null against the remaining block
      }
    }
    Scalar inv_pivot = Scalar(1) / a(k, k);
    for (Eigen::Index j = k + 1; j < n; ++j) {
      if (a(k, j).is_zero()) continue;
      add_col_into(j, k, -a(k, j) * inv_pivot);
    }
  }

  VecX diag(n);
  for (Eigen::Index i = 0; i < n; ++i) diag(i) = a(i, i);
  return {std::move(diag), std::move(p)};
}

}  // namespace sympair
