#pragma once

#include <Eigen/Core>
#include <map>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "ak4/multi_index.hpp"

namespace ak4 {

template <typename S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Distinguishes Lambda^k(g) from Lambda^k(g*); the two sides never mix
/// except through the evaluation pairing.
enum class Side { vectors, forms };

/// Graded exterior-algebra element with sparse coefficients on sorted
/// multi-indices. Immutable in spirit: operations return fresh values.
template <typename S, Side V>
class Exterior {
public:
  using ScalarType = S;

  Exterior(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > MultiIndex::max_dimension || k < 0 || k > n)
      throw GradeError("Exterior: need 0 <= k <= n");
  }

  static Exterior basis_element(int n, MultiIndex I) {
    Exterior e(n, I.grade());
    if (!I.fits_dimension(n)) throw GradeError("Exterior: index exceeds dimension");
    e.coeff_[I] = S(1);
    return e;
  }

  int dimension() const { return n_; }
  int grade() const { return k_; }
  bool is_zero() const { return coeff_.empty(); }

  S coefficient(MultiIndex I) const {
    auto it = coeff_.find(I);
    return it == coeff_.end() ? S(0) : it->second;
  }

  /// Adds c * f^{indices}; unsorted or repeated indices are normalized by the
  /// permutation sign.
  Exterior& add_term(std::span<const int> indices, const S& c) {
    if (static_cast<int>(indices.size()) != k_)
      throw GradeError("Exterior::add_term: wrong grade");
    auto [I, sign] = sort_indices(indices);
    if (sign == 0 || c == S(0)) return *this;
    if (!I.fits_dimension(n_)) throw GradeError("Exterior::add_term: index exceeds dimension");
    set(I, coefficient(I) + (sign < 0 ? -c : c));
    return *this;
  }
  Exterior& add_term(std::initializer_list<int> indices, const S& c) {
    return add_term(std::span<const int>(indices.begin(), indices.size()), c);
  }

  const std::map<MultiIndex, S>& terms() const { return coeff_; }

  /// Coordinates in the lexicographic basis of index_basis(n, k).
  Vec<S> coords() const {
    const auto& basis = index_basis(n_, k_);
    Vec<S> v(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t p = 0; p < basis.size(); ++p) v(p) = coefficient(basis[p]);
    return v;
  }

  static Exterior from_coords(int n, int k, const Vec<S>& v) {
    const auto& basis = index_basis(n, k);
    if (v.size() != static_cast<Eigen::Index>(basis.size()))
      throw DimensionMismatch("Exterior::from_coords: wrong coordinate count");
    Exterior e(n, k);
    for (std::size_t p = 0; p < basis.size(); ++p) e.set(basis[p], v(p));
    return e;
  }

  friend Exterior operator+(const Exterior& a, const Exterior& b) {
    a.check_same_shape(b, "+");
    Exterior out = a;
    for (const auto& [I, c] : b.coeff_) out.set(I, out.coefficient(I) + c);
    return out;
  }
  friend Exterior operator-(const Exterior& a, const Exterior& b) {
    a.check_same_shape(b, "-");
    Exterior out = a;
    for (const auto& [I, c] : b.coeff_) out.set(I, out.coefficient(I) - c);
    return out;
  }
  Exterior operator-() const {
    Exterior out(n_, k_);
    for (const auto& [I, c] : coeff_) out.coeff_[I] = -c;
    return out;
  }
  friend Exterior operator*(const S& s, const Exterior& a) {
    Exterior out(a.n_, a.k_);
    if (s == S(0)) return out;
    for (const auto& [I, c] : a.coeff_) out.coeff_[I] = s * c;
    return out;
  }
  friend Exterior operator*(const Exterior& a, const S& s) { return s * a; }
  Exterior& operator+=(const Exterior& o) { return *this = *this + o; }
  Exterior& operator-=(const Exterior& o) { return *this = *this - o; }

  friend bool operator==(const Exterior& a, const Exterior& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.coeff_ == b.coeff_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Exterior& e) {
    if (e.is_zero()) return os << "0";
    bool first = true;
    for (MultiIndex I : index_basis(e.n_, e.k_)) {
      auto it = e.coeff_.find(I);
      if (it == e.coeff_.end()) continue;
      if (!first) os << " + ";
      os << "(" << it->second << ")*" << (V == Side::forms ? "f^" : "f_") << I.str();
      first = false;
    }
    return os;
  }

private:
  void set(MultiIndex I, S value) {
    if (value == S(0))
      coeff_.erase(I);
    else
      coeff_[I] = std::move(value);
  }

  void check_same_shape(const Exterior& o, const char* op) const {
    if (n_ != o.n_) throw DimensionMismatch(std::string("Exterior: dimension mismatch in ") + op);
    if (k_ != o.k_) throw GradeError(std::string("Exterior: grade mismatch in ") + op);
  }

  int n_;
  int k_;
  std::map<MultiIndex, S> coeff_;

  template <typename T, Side W>
  friend Exterior<T, W> wedge(const Exterior<T, W>&, const Exterior<T, W>&);
};

template <typename S>
using KVector = Exterior<S, Side::vectors>;
template <typename S>
using KForm = Exterior<S, Side::forms>;

/// Graded wedge product; bilinear, associative, and (-1)^{pq} anticommutative.
template <typename S, Side V>
Exterior<S, V> wedge(const Exterior<S, V>& a, const Exterior<S, V>& b) {
  if (a.dimension() != b.dimension()) throw DimensionMismatch("wedge: dimension mismatch");
  if (a.grade() + b.grade() > a.dimension()) throw GradeError("wedge: grade overflow");
  Exterior<S, V> out(a.dimension(), a.grade() + b.grade());
  for (const auto& [I, c] : a.terms())
    for (const auto& [J, d] : b.terms()) {
      const int sign = wedge_sign(I, J);
      if (sign == 0) continue;
      const MultiIndex K = disjoint_union(I, J);
      const S term = (sign < 0) ? -(c * d) : c * d;
      out.set(K, out.coefficient(K) + term);
    }
  return out;
}

/// The pairing Psi^k(u, alpha) = alpha(u); basis k-vectors and k-forms are
/// dual under the determinant convention.
template <typename S>
S evaluate(const KVector<S>& u, const KForm<S>& alpha) {
  if (u.dimension() != alpha.dimension()) throw DimensionMismatch("evaluate: dimension mismatch");
  if (u.grade() != alpha.grade()) throw GradeError("evaluate: grade mismatch");
  S acc(0);
  for (const auto& [I, c] : u.terms()) acc += c * alpha.coefficient(I);
  return acc;
}

/// Simplicity test for bivectors: u is decomposable iff u ^ u = 0
/// (the Pluecker relations in grade 2).
template <typename S>
bool is_simple(const KVector<S>& u) {
  if (u.grade() != 2) throw GradeError("is_simple: grade-2 input required");
  if (u.dimension() < 4) return true;
  return wedge(u, u).is_zero();
}

/// Factors a nonzero simple bivector as v ^ w. With U the antisymmetric
/// coordinate matrix of u and u_{ij} != 0, the columns U e_j and -U e_i / u_{ij}
/// wedge back to u; the product is re-checked, so a non-simple input throws.
template <typename S>
std::pair<KVector<S>, KVector<S>> factor_simple(const KVector<S>& u) {
  if (u.grade() != 2) throw GradeError("factor_simple: grade-2 input required");
  if (u.is_zero()) throw NotSimpleError("factor_simple: zero bivector");
  const int n = u.dimension();
  const auto& [I, lead] = *u.terms().begin();
  const auto ij = I.indices();
  const int i = ij[0], j = ij[1];

  KVector<S> v(n, 1), w(n, 1);
  for (int h = 1; h <= n; ++h) {
    // column j of the antisymmetric matrix: U_{hj} = u(f_h, f_j)
    const S uhj = entry(u, h, j);
    if (!(uhj == S(0))) v.add_term({h}, uhj);
    const S uhi = entry(u, h, i);
    if (!(uhi == S(0))) w.add_term({h}, -(uhi / lead));
  }
  if (!(wedge(v, w) == u)) throw NotSimpleError("factor_simple: bivector is not simple");
  return {v, w};
}

/// Antisymmetric matrix entry u(f_h, f_k) of a bivector.
template <typename S>
S entry(const KVector<S>& u, int h, int k) {
  if (h == k) return S(0);
  if (h < k) return u.coefficient(MultiIndex::from_indices({h, k}));
  return -u.coefficient(MultiIndex::from_indices({k, h}));
}

}  // namespace ak4
