#pragma once

#include "ak4/lie_algebra.hpp"
#include "ak4/subspace.hpp"

namespace ak4 {

/// d f^m = -sum_{i<j} c^m_{ij} f^{ij}, the Chevalley-Eilenberg differential
/// on 1-forms: (d f^m)(f_i, f_j) = -f^m([f_i, f_j]).
template <typename S>
KForm<S> ce_d_one_form(const LieAlgebra<S>& g, int m) {
  const int n = g.dimension();
  KForm<S> out(n, 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const S c = g.structure_constant(i, j, m);
      if (!(c == S(0))) out.add_term({i, j}, -c);
    }
  return out;
}

inline MultiIndex remove_index(MultiIndex I, int i) {
  return MultiIndex(I.mask() & ~(std::uint64_t(1) << (i - 1)));
}

/// Leibniz extension computed on basis monomials:
/// d f^I = sum_a (-1)^{a-1} (d f^{i_a}) ^ f^{I \ i_a}.
template <typename S>
KForm<S> ce_d(const LieAlgebra<S>& g, const KForm<S>& alpha) {
  const int n = g.dimension();
  if (alpha.dimension() != n) throw DimensionMismatch("ce_d: dimension mismatch");
  if (alpha.grade() + 1 > n) throw GradeError("ce_d: grade overflow");
  KForm<S> out(n, alpha.grade() + 1);
  for (const auto& [I, c] : alpha.terms()) {
    const auto idx = I.indices();
    for (std::size_t a = 0; a < idx.size(); ++a) {
      KForm<S> rest = KForm<S>::basis_element(n, remove_index(I, idx[a]));
      const KForm<S> piece = wedge(ce_d_one_form(g, idx[a]), rest);
      out += ((a % 2 == 0) ? c : -c) * piece;
    }
  }
  return out;
}

/// Matrix of d : Lambda^k(g*) -> Lambda^{k+1}(g*) in the lexicographic bases.
template <typename S>
Mat<S> ce_d_matrix(const LieAlgebra<S>& g, int k) {
  const int n = g.dimension();
  if (k < 0 || k + 1 > n) throw GradeError("ce_d_matrix: need 0 <= k <= n-1");
  const auto& dom = index_basis(n, k);
  Mat<S> m(index_basis(n, k + 1).size(), dom.size());
  for (std::size_t c = 0; c < dom.size(); ++c)
    m.col(static_cast<int>(c)) = ce_d(g, KForm<S>::basis_element(n, dom[c])).coords();
  return m;
}

/// Homology boundary as the signed adjoint of d under the evaluation pairing:
/// evaluate(boundary(w), phi) = (-1)^{k+1} evaluate(w, d phi).
template <typename S>
KVector<S> boundary(const LieAlgebra<S>& g, const KVector<S>& w) {
  const int n = g.dimension();
  if (w.dimension() != n) throw DimensionMismatch("boundary: dimension mismatch");
  const int k = w.grade();
  if (k < 1) throw GradeError("boundary: grade underflow");
  const Mat<S> d = ce_d_matrix(g, k - 1);
  Vec<S> coords = d.transpose() * w.coords();
  if (k % 2 == 0) coords = -coords;  // (-1)^{k+1}
  return KVector<S>::from_coords(n, k - 1, coords);
}

template <typename S>
Mat<S> boundary_matrix(const LieAlgebra<S>& g, int k) {
  const int n = g.dimension();
  if (k < 1 || k > n) throw GradeError("boundary_matrix: need 1 <= k <= n");
  Mat<S> m = ce_d_matrix(g, k - 1).transpose();
  if (k % 2 == 0) m = -m;
  return m;
}

template <typename S>
Subspace<KForm<S>> cocycles(const LieAlgebra<S>& g, int k) {
  const int n = g.dimension();
  if (k < 0 || k > n) throw GradeError("cocycles: grade out of range");
  if (k == n) return Subspace<KForm<S>>::full(n, n);
  return Subspace<KForm<S>>::from_coord_columns(n, k, kernel_basis(ce_d_matrix(g, k)));
}

template <typename S>
Subspace<KForm<S>> coboundaries(const LieAlgebra<S>& g, int k) {
  const int n = g.dimension();
  if (k < 0 || k > n) throw GradeError("coboundaries: grade out of range");
  if (k == 0) return Subspace<KForm<S>>::zero(n, 0);
  return Subspace<KForm<S>>::from_coord_columns(n, k, ce_d_matrix(g, k - 1));
}

template <typename S>
Subspace<KVector<S>> cycles(const LieAlgebra<S>& g, int k) {
  const int n = g.dimension();
  if (k < 0 || k > n) throw GradeError("cycles: grade out of range");
  if (k == 0) return Subspace<KVector<S>>::full(n, 0);
  return Subspace<KVector<S>>::from_coord_columns(n, k, kernel_basis(boundary_matrix(g, k)));
}

template <typename S>
Subspace<KVector<S>> boundaries(const LieAlgebra<S>& g, int k) {
  const int n = g.dimension();
  if (k < 0 || k > n) throw GradeError("boundaries: grade out of range");
  if (k == n) return Subspace<KVector<S>>::zero(n, n);
  return Subspace<KVector<S>>::from_coord_columns(n, k, boundary_matrix(g, k + 1));
}

/// Exact quotient bookkeeping for one (co)homology degree.
template <typename E>
struct CohomologySpace {
  int grade = 0;
  Subspace<E> closed;    // cocycles or cycles
  Subspace<E> exact;     // coboundaries or boundary vectors
  int quotient_dimension = 0;
};

template <typename S>
CohomologySpace<KForm<S>> cohomology_space(const LieAlgebra<S>& g, int k) {
  CohomologySpace<KForm<S>> out{k, cocycles(g, k), coboundaries(g, k), 0};
  if (!out.closed.contains(out.exact))
    throw std::logic_error("cohomology_space: coboundaries not contained in cocycles");
  out.quotient_dimension = out.closed.dimension() - out.exact.dimension();
  return out;
}

template <typename S>
CohomologySpace<KVector<S>> homology_space(const LieAlgebra<S>& g, int k) {
  CohomologySpace<KVector<S>> out{k, cycles(g, k), boundaries(g, k), 0};
  if (!out.closed.contains(out.exact))
    throw std::logic_error("homology_space: boundaries not contained in cycles");
  out.quotient_dimension = out.closed.dimension() - out.exact.dimension();
  return out;
}

template <typename S>
int betti(const LieAlgebra<S>& g, int k) {
  return cocycles(g, k).dimension() - coboundaries(g, k).dimension();
}

template <typename S>
int homology_betti(const LieAlgebra<S>& g, int k) {
  return cycles(g, k).dimension() - boundaries(g, k).dimension();
}

}  // namespace ak4
