#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "ak4/exterior.hpp"

namespace ak4 {

/// Exact rank over a field scalar; FullPivLU with epsilon() == 0 counts every
/// nonzero pivot.
template <typename Derived>
int rank(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(Eigen::FullPivLU<Mat<S>>(m).rank());
}

/// Columns spanning the nullspace (empty matrix when trivial).
template <typename Derived>
Mat<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  if (m.cols() == 0) return Mat<S>(0, 0);
  if (m.rows() == 0) return Mat<S>::Identity(m.cols(), m.cols());
  Eigen::FullPivLU<Mat<S>> lu(m);
  if (lu.dimensionOfKernel() == 0) return Mat<S>(m.cols(), 0);
  return lu.kernel();
}

/// A maximal independent subset of the columns of m, as column indices.
template <typename S>
std::vector<int> independent_columns(const Mat<S>& m) {
  std::vector<int> picked;
  if (m.rows() == 0 || m.cols() == 0) return picked;
  Mat<S> accum(m.rows(), 0);
  int r = 0;
  for (int c = 0; c < m.cols(); ++c) {
    Mat<S> trial(m.rows(), accum.cols() + 1);
    trial << accum, m.col(c);
    if (rank(trial) > r) {
      accum = std::move(trial);
      ++r;
      picked.push_back(c);
    }
  }
  return picked;
}

/// Exact solution of A x = b, or nullopt when inconsistent.
template <typename S>
std::optional<Vec<S>> solve(const Mat<S>& A, const Vec<S>& b) {
  if (A.cols() == 0) {
    if (b.isZero(S(0))) return Vec<S>(0);
    return std::nullopt;
  }
  Eigen::FullPivLU<Mat<S>> lu(A);
  Vec<S> x = lu.solve(b);
  if (((A * x) - b).isZero(S(0))) return x;
  return std::nullopt;
}

/// Exact determinant by Gaussian elimination with explicit pivot search.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  Mat<S> m = input;
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant: square matrix required");
  const int n = static_cast<int>(m.rows());
  S det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (!(m(r, c) == S(0))) {
        pivot = r;
        break;
      }
    if (pivot < 0) return S(0);
    if (pivot != c) {
      m.row(pivot).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == S(0)) continue;
      const S factor = m(r, c) / m(c, c);
      for (int k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

/// Sylvester's criterion: symmetric and all leading principal minors positive.
template <typename Derived>
bool is_positive_definite(const Eigen::MatrixBase<Derived>& input) {
  using S = typename Derived::Scalar;
  const Mat<S> m = input;
  if (m.rows() != m.cols()) throw DimensionMismatch("is_positive_definite: square matrix required");
  if (!(m - m.transpose()).isZero(S(0))) return false;
  for (int k = 1; k <= m.rows(); ++k)
    if (!(determinant(m.topLeftCorner(k, k)) > S(0))) return false;
  return true;
}

/// Inertia of a symmetric bilinear form restricted to a subspace.
struct SignatureReport {
  int positive = 0;
  int negative = 0;
  int null = 0;
  friend bool operator==(const SignatureReport&, const SignatureReport&) = default;
};

/// Congruence diagonalization B^T G B = diag by simultaneous row/column
/// elimination; a zero diagonal with a nonzero off-diagonal entry is repaired
/// by adding the partner row/column first (exact, no square roots).
template <typename S>
struct Congruence {
  Mat<S> basis;  // columns express the diagonalizing basis in the input basis
  Vec<S> diag;
};

template <typename S>
Congruence<S> congruence_diagonalize(Mat<S> g) {
  if (g.rows() != g.cols()) throw DimensionMismatch("congruence_diagonalize: square input");
  if (!(g - g.transpose()).isZero(S(0)))
    throw DimensionMismatch("congruence_diagonalize: symmetric input required");
  const int n = static_cast<int>(g.rows());
  Mat<S> basis = Mat<S>::Identity(n, n);
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int p = -1;
    for (int i = 0; i < n && p < 0; ++i)
      if (!done[i] && !(g(i, i) == S(0))) p = i;
    if (p < 0) {
      int a = -1, b = -1;
      for (int i = 0; i < n && a < 0; ++i)
        for (int j = i + 1; j < n && a < 0; ++j)
          if (!done[i] && !done[j] && !(g(i, j) == S(0))) {
            a = i;
            b = j;
          }
      if (a < 0) break;  // remaining block is zero
      g.col(a) += g.col(b);
      g.row(a) += g.row(b);
      basis.col(a) += basis.col(b);
      p = a;  // g(a, a) is now 2*g_old(a, b) != 0
    }
    for (int r = 0; r < n; ++r) {
      if (r == p || done[r] || g(r, p) == S(0)) continue;
      const S factor = g(r, p) / g(p, p);
      g.col(r) -= factor * g.col(p);
      g.row(r) -= factor * g.row(p);
      basis.col(r) -= factor * basis.col(p);
    }
    done[p] = true;
  }
  Congruence<S> out;
  out.basis = std::move(basis);
  out.diag = g.diagonal();
  return out;
}

template <typename S>
SignatureReport signature_of_symmetric(const Mat<S>& g) {
  const Congruence<S> c = congruence_diagonalize(g);
  SignatureReport rep;
  for (int i = 0; i < c.diag.size(); ++i) {
    if (c.diag(i) > S(0))
      ++rep.positive;
    else if (c.diag(i) < S(0))
      ++rep.negative;
    else
      ++rep.null;
  }
  return rep;
}

}  // namespace ak4
