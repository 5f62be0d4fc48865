#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ak4/linalg.hpp"

namespace ak4 {

/// One structure constant: the coefficient of f_k in [f_i, f_j], i < j.
template <typename S>
struct BracketTerm {
  int i;
  int j;
  int k;
  S c;
};

template <typename S>
struct JacobiReport {
  bool holds = true;
  std::array<int, 3> triple{0, 0, 0};  // first violating (i, j, k), i < j < k
  std::string message;
};

/// Finite-dimensional real Lie algebra given by structure constants
/// [f_i, f_j] = sum_k c^k_{ij} f_k for i < j. The Jacobi identity is checked
/// at construction; `unchecked` exists only to build negative-test fixtures.
template <typename S>
class LieAlgebra {
public:
  LieAlgebra(int n, const std::vector<BracketTerm<S>>& terms) : LieAlgebra(n, terms, true) {}

  static LieAlgebra unchecked(int n, const std::vector<BracketTerm<S>>& terms) {
    return LieAlgebra(n, terms, false);
  }

  int dimension() const { return n_; }

  /// [f_i, f_j] for arbitrary index order (antisymmetry built in).
  KVector<S> basis_bracket(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j) return KVector<S>(n_, 1);
    KVector<S> out(n_, 1);
    const int a = std::min(i, j), b = std::max(i, j);
    const Vec<S>& col = table_[slot(a, b)];
    for (int k = 1; k <= n_; ++k)
      if (!(col(k - 1) == S(0))) out.add_term({k}, i < j ? col(k - 1) : -col(k - 1));
    return out;
  }

  /// Bilinear extension of the bracket to 1-vectors.
  KVector<S> bracket(const KVector<S>& u, const KVector<S>& v) const {
    if (u.dimension() != n_ || v.dimension() != n_)
      throw DimensionMismatch("bracket: dimension mismatch");
    if (u.grade() != 1 || v.grade() != 1) throw GradeError("bracket: grade-1 arguments required");
    KVector<S> out(n_, 1);
    for (const auto& [I, a] : u.terms())
      for (const auto& [J, b] : v.terms())
        out += (a * b) * basis_bracket(I.indices()[0], J.indices()[0]);
    return out;
  }

  /// c^k_{ij} for i < j.
  S structure_constant(int i, int j, int k) const {
    check_index(k);
    if (!(1 <= i && i < j && j <= n_))
      throw DimensionMismatch("structure_constant: need 1 <= i < j <= n");
    return table_[slot(i, j)](k - 1);
  }

  std::vector<BracketTerm<S>> bracket_terms() const {
    std::vector<BracketTerm<S>> out;
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int k = 1; k <= n_; ++k) {
          const S c = table_[slot(i, j)](k - 1);
          if (!(c == S(0))) out.push_back({i, j, k, c});
        }
    return out;
  }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t s = 0; s < a.table_.size(); ++s)
      if (!(a.table_[s] - b.table_[s]).isZero(S(0))) return false;
    return true;
  }

private:
  LieAlgebra(int n, const std::vector<BracketTerm<S>>& terms, bool check) : n_(n) {
    if (n < 1 || n > MultiIndex::max_dimension)
      throw DimensionMismatch("LieAlgebra: dimension out of range");
    table_.assign(n_ * (n_ - 1) / 2, Vec<S>::Zero(n_));
    std::vector<bool> seen(n_ * (n_ - 1) / 2 * n_, false);
    for (const auto& t : terms) {
      if (!(1 <= t.i && t.i < t.j && t.j <= n_) || t.k < 1 || t.k > n_)
        throw DimensionMismatch("LieAlgebra: structure constants require 1 <= i < j <= n");
      const std::size_t flat = slot(t.i, t.j) * n_ + (t.k - 1);
      if (seen[flat]) throw DimensionMismatch("LieAlgebra: duplicate structure constant entry");
      seen[flat] = true;
      table_[slot(t.i, t.j)](t.k - 1) = t.c;
    }
    if (check) {
      const JacobiReport r = check_jacobi(*this);
      if (!r.holds) throw JacobiError(r.message);
    }
  }

  std::size_t slot(int i, int j) const {
    // row-major over pairs i < j
    return static_cast<std::size_t>((i - 1) * n_ - i * (i + 1) / 2 + (j - 1));
  }

  void check_index(int i) const {
    if (i < 1 || i > n_) throw DimensionMismatch("LieAlgebra: basis index out of range");
  }

  int n_;
  std::vector<Vec<S>> table_;  // slot(i, j) -> coordinates of [f_i, f_j]

  template <typename T>
  friend JacobiReport<T> check_jacobi(const LieAlgebra<T>&);
};

/// Jacobi verdict with the first violating triple on failure.
template <typename S>
JacobiReport<S> check_jacobi(const LieAlgebra<S>& g) {
  const int n = g.dimension();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        KVector<S> residual = g.bracket(g.basis_bracket(i, j), basis_vector(g, k)) +
                              g.bracket(g.basis_bracket(j, k), basis_vector(g, i)) +
                              g.bracket(g.basis_bracket(k, i), basis_vector(g, j));
        if (!residual.is_zero()) {
          JacobiReport<S> r;
          r.holds = false;
          r.triple = {i, j, k};
          r.message = "Jacobi identity fails at triple (" + std::to_string(i) + ", " +
                      std::to_string(j) + ", " + std::to_string(k) + ")";
          return r;
        }
      }
  return {};
}

template <typename S>
KVector<S> basis_vector(const LieAlgebra<S>& g, int i) {
  KVector<S> v(g.dimension(), 1);
  v.add_term({i}, S(1));
  return v;
}

/// tr(ad_xi) = 0 for every basis xi; equivalent to top Betti number 1.
template <typename S>
bool is_unimodular(const LieAlgebra<S>& g) {
  const int n = g.dimension();
  for (int i = 1; i <= n; ++i) {
    S trace(0);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      // coefficient of f_j in ad_{f_i}(f_j) = [f_i, f_j]
      trace += evaluate_coefficient(g.basis_bracket(i, j), j);
    }
    if (!(trace == S(0))) return false;
  }
  return true;
}

template <typename S>
S evaluate_coefficient(const KVector<S>& v, int index) {
  return v.coefficient(MultiIndex::from_indices({index}));
}

/// Isomorphic copy in the basis f'_j = sum_i P_{ij} f_i (columns of P give the
/// new basis in old coordinates). Used to generate randomized valid algebras.
template <typename S>
LieAlgebra<S> transform_basis(const LieAlgebra<S>& g, const Mat<S>& P) {
  const int n = g.dimension();
  if (P.rows() != n || P.cols() != n) throw DimensionMismatch("transform_basis: P must be n x n");
  Eigen::FullPivLU<Mat<S>> lu(P);
  if (lu.rank() != n) throw DimensionMismatch("transform_basis: P must be invertible");
  const Mat<S> Pinv = lu.inverse();
  std::vector<BracketTerm<S>> terms;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      Vec<S> image = Vec<S>::Zero(n);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          const S coeff = P(i - 1, a - 1) * P(j - 1, b - 1);
          if (coeff == S(0)) continue;
          image += coeff * g.basis_bracket(i, j).coords();
        }
      const Vec<S> in_new_basis = Pinv * image;
      for (int k = 1; k <= n; ++k)
        if (!(in_new_basis(k - 1) == S(0))) terms.push_back({a, b, k, in_new_basis(k - 1)});
    }
  return LieAlgebra<S>(n, terms);
}

}  // namespace ak4
