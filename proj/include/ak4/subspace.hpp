#pragma once

#include <vector>

#include "ak4/linalg.hpp"

namespace ak4 {

/// Linear subspace of Lambda^k, held as an independent list of elements plus
/// their coordinate matrix. All queries are exact rank computations.
template <typename E>
class Subspace {
public:
  using Scalar = typename E::ScalarType;

  /// Empty space over the trivial ambient; useful only as a placeholder.
  Subspace() : Subspace(0, 0) {}

  /// Spans the given generators, keeping a maximal independent subset in
  /// input order as the stored basis.
  static Subspace span(int n, int k, const std::vector<E>& generators) {
    Subspace s(n, k);
    if (!generators.empty()) {
      Mat<Scalar> all(s.coord_dim(), static_cast<int>(generators.size()));
      for (std::size_t c = 0; c < generators.size(); ++c) {
        s.check_element(generators[c]);
        all.col(static_cast<int>(c)) = generators[c].coords();
      }
      for (int c : independent_columns(all)) s.push(generators[c]);
    }
    return s;
  }

  static Subspace from_coord_columns(int n, int k, const Mat<Scalar>& cols) {
    std::vector<E> gens;
    gens.reserve(cols.cols());
    for (int c = 0; c < cols.cols(); ++c) gens.push_back(E::from_coords(n, k, cols.col(c)));
    return span(n, k, gens);
  }

  static Subspace zero(int n, int k) { return Subspace(n, k); }
  static Subspace full(int n, int k) {
    return from_coord_columns(
        n, k, Mat<Scalar>::Identity(index_basis(n, k).size(), index_basis(n, k).size()));
  }

  int dimension() const { return static_cast<int>(basis_.size()); }
  int ambient_dimension() const { return n_; }
  int grade() const { return k_; }
  const std::vector<E>& basis() const { return basis_; }
  const Mat<Scalar>& coord_matrix() const { return coords_; }

  bool contains_element(const E& e) const {
    check_element(e);
    if (e.is_zero()) return true;
    if (dimension() == 0) return false;
    Mat<Scalar> aug(coord_dim(), dimension() + 1);
    aug << coords_, e.coords();
    return rank(aug) == dimension();
  }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (const E& b : other.basis_)
      if (!contains_element(b)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dimension() == b.dimension() && a.contains(b);
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    std::vector<E> gens = a.basis_;
    gens.insert(gens.end(), b.basis_.begin(), b.basis_.end());
    return span(a.n_, a.k_, gens);
  }

  /// Intersection via the nullspace of the stacked coordinate matrix [A | -B].
  friend Subspace intersection(const Subspace& a, const Subspace& b) {
    a.check_compatible(b);
    if (a.dimension() == 0 || b.dimension() == 0) return zero(a.n_, a.k_);
    Mat<Scalar> stacked(a.coord_dim(), a.dimension() + b.dimension());
    stacked << a.coords_, -b.coords_;
    const Mat<Scalar> null = kernel_basis(stacked);
    Mat<Scalar> inter(a.coord_dim(), null.cols());
    for (int c = 0; c < null.cols(); ++c)
      inter.col(c) = a.coords_ * null.block(0, c, a.dimension(), 1);
    return from_coord_columns(a.n_, a.k_, inter);
  }

private:
  Subspace(int n, int k) : n_(n), k_(k), coords_(coord_dim_of(n, k), 0) {}

  int coord_dim() const { return coord_dim_of(n_, k_); }
  static int coord_dim_of(int n, int k) { return static_cast<int>(index_basis(n, k).size()); }

  void check_element(const E& e) const {
    if (e.dimension() != n_ || e.grade() != k_)
      throw DimensionMismatch("Subspace: element has wrong ambient space");
  }
  void check_compatible(const Subspace& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw DimensionMismatch("Subspace: ambient space mismatch");
  }

  void push(const E& e) {
    basis_.push_back(e);
    Mat<Scalar> next(coord_dim(), dimension());
    if (coords_.cols() > 0) next.leftCols(coords_.cols()) = coords_;
    next.col(dimension() - 1) = e.coords();
    coords_ = std::move(next);
  }

  int n_;
  int k_;
  std::vector<E> basis_;
  Mat<Scalar> coords_;
};

}  // namespace ak4
