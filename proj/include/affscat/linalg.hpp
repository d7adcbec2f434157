#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "affscat/rational.hpp"

// Exact Gaussian elimination. Eigen's decompositions pivot on magnitude,
// which is meaningless for rationals, so elimination is done here directly.
namespace affscat {

template <typename Scalar>
struct Echelon {
  MatT<Scalar> r;
  std::vector<int> pivots;
};

template <typename Scalar>
Echelon<Scalar> rref(MatT<Scalar> m) {
  Echelon<Scalar> out;
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index p = row;
    while (p < rows && m(p, col) == 0) ++p;
    if (p == rows) continue;
    if (p != row) m.row(p).swap(m.row(row));
    const Scalar lead = m(row, col);
    m.row(row) /= lead;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Scalar f = m(i, col);
      m.row(i) -= f * m.row(row);
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  out.r = std::move(m);
  return out;
}

template <typename Scalar>
int rank(const MatT<Scalar>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(rref(m).pivots.size());
}

// Basis of {x : m x = 0}, one column per free variable.
template <typename Scalar>
MatT<Scalar> kernel(const MatT<Scalar>& m) {
  const Eigen::Index cols = m.cols();
  if (m.rows() == 0) return MatT<Scalar>::Identity(cols, cols);
  const auto e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < cols; ++c)
    if (!is_pivot[c]) free.push_back(c);
  MatT<Scalar> k = MatT<Scalar>::Zero(cols, static_cast<Eigen::Index>(free.size()));
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      k(e.pivots[i], f) = -e.r(i, free[f]);
  }
  return k;
}

// Some solution of m x = b, or nothing if the system is inconsistent.
template <typename Scalar>
std::optional<VecT<Scalar>> solve(const MatT<Scalar>& m, const VecT<Scalar>& b) {
  MatT<Scalar> aug(m.rows(), m.cols() + 1);
  aug << m, b;
  const auto e = rref(aug);
  VecT<Scalar> x = VecT<Scalar>::Zero(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == m.cols()) return std::nullopt;
    x(e.pivots[i]) = e.r(i, m.cols());
  }
  return x;
}

template <typename Scalar>
Scalar determinant(MatT<Scalar> m) {
  const Eigen::Index n = m.rows();
  Scalar det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != col) {
      m.row(p).swap(m.row(col));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index i = col + 1; i < n; ++i) {
      if (m(i, col) == 0) continue;
      const Scalar f = m(i, col) / m(col, col);
      m.row(i) -= f * m.row(col);
    }
  }
  return det;
}

template <typename Scalar>
MatT<Scalar> principal_submatrix(const MatT<Scalar>& m, const std::vector<int>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  MatT<Scalar> s(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) s(i, j) = m(idx[i], idx[j]);
  return s;
}

// Sylvester's criterion on a symmetric matrix.
template <typename Scalar>
bool positive_definite(const MatT<Scalar>& s) {
  for (Eigen::Index k = 1; k <= s.rows(); ++k)
    if (determinant<Scalar>(s.topLeftCorner(k, k)) <= 0) return false;
  return true;
}

// Stack vectors as rows.
template <typename Scalar>
MatT<Scalar> rows_of(const std::vector<VecT<Scalar>>& vs, Eigen::Index cols) {
  MatT<Scalar> m(static_cast<Eigen::Index>(vs.size()), cols);
  for (std::size_t i = 0; i < vs.size(); ++i) m.row(i) = vs[i].transpose();
  return m;
}

}  // namespace affscat
