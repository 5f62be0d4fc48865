#pragma once

#include "ak4/cohomology.hpp"

namespace ak4 {

/// A dual pair (zeta, eta) of top-degree volume elements with
/// evaluate(zeta, eta) = 1. Fixes the orientation for all wedge pairings.
template <typename S>
class Orientation {
public:
  Orientation(KVector<S> zeta, KForm<S> eta) : zeta_(std::move(zeta)), eta_(std::move(eta)) {
    const int n = zeta_.dimension();
    if (eta_.dimension() != n || zeta_.grade() != n || eta_.grade() != n)
      throw DimensionMismatch("Orientation: zeta and eta must be dual top-degree elements");
    if (!(evaluate(zeta_, eta_) == S(1)))
      throw DimensionMismatch("Orientation: evaluate(zeta, eta) must be 1");
  }

  /// zeta = f_1 ^ ... ^ f_n, eta its dual volume form.
  static Orientation standard(int n) { return scaled(n, S(1)); }

  /// zeta = c f_1...n; c = -1 gives the reversed orientation.
  static Orientation scaled(int n, const S& c) {
    if (c == S(0)) throw DimensionMismatch("Orientation: zeta must be nonzero");
    const MultiIndex top = index_basis(n, n).front();
    KVector<S> zeta(n, n);
    zeta.add_term(top.indices(), c);
    KForm<S> eta(n, n);
    eta.add_term(top.indices(), S(1) / c);
    return Orientation(std::move(zeta), std::move(eta));
  }

  const KVector<S>& zeta() const { return zeta_; }
  const KForm<S>& eta() const { return eta_; }
  int dimension() const { return zeta_.dimension(); }

private:
  KVector<S> zeta_;
  KForm<S> eta_;
};

/// Phi_zeta(alpha, beta) = (alpha ^ beta)(zeta) on complementary-grade forms.
template <typename S>
S phi_zeta(const Orientation<S>& o, const KForm<S>& alpha, const KForm<S>& beta) {
  if (alpha.grade() + beta.grade() != o.dimension())
    throw GradeError("phi_zeta: grades must be complementary");
  return evaluate(o.zeta(), wedge(alpha, beta));
}

/// Phi_eta(u, w) = eta(u ^ w) on complementary-grade vectors.
template <typename S>
S phi_eta(const Orientation<S>& o, const KVector<S>& u, const KVector<S>& w) {
  if (u.grade() + w.grade() != o.dimension())
    throw GradeError("phi_eta: grades must be complementary");
  return evaluate(wedge(u, w), o.eta());
}

/// G_eta(u) in Lambda^{n-k}(g*), defined by G_eta(u)(w) = eta(u ^ w).
template <typename S>
KForm<S> g_eta(const Orientation<S>& o, const KVector<S>& u) {
  const int n = o.dimension();
  if (u.dimension() != n) throw DimensionMismatch("g_eta: dimension mismatch");
  const int k = n - u.grade();
  KForm<S> out(n, k);
  for (MultiIndex J : index_basis(n, k)) {
    const S c = phi_eta(o, u, KVector<S>::basis_element(n, J));
    if (!(c == S(0))) out.add_term(J.indices(), c);
  }
  return out;
}

/// G_zeta(alpha) in Lambda^{n-k}(g), normalized so that
/// evaluate(g_zeta(alpha), beta) = evaluate(zeta, beta ^ alpha); with this
/// convention g_zeta and g_eta are mutually inverse in every grade.
template <typename S>
KVector<S> g_zeta(const Orientation<S>& o, const KForm<S>& alpha) {
  const int n = o.dimension();
  if (alpha.dimension() != n) throw DimensionMismatch("g_zeta: dimension mismatch");
  const int k = n - alpha.grade();
  KVector<S> out(n, k);
  for (MultiIndex I : index_basis(n, k)) {
    const S c = phi_zeta(o, KForm<S>::basis_element(n, I), alpha);
    if (!(c == S(0))) out.add_term(I.indices(), c);
  }
  return out;
}

/// Gram matrix of the wedge pairing on a grade-2 subspace (n = 4), form side.
template <typename S>
Mat<S> wedge_gram(const Orientation<S>& o, const Subspace<KForm<S>>& sub) {
  require_middle_grade(o, sub.grade());
  const auto& b = sub.basis();
  Mat<S> g(sub.dimension(), sub.dimension());
  for (int i = 0; i < sub.dimension(); ++i)
    for (int j = 0; j < sub.dimension(); ++j) g(i, j) = phi_zeta(o, b[i], b[j]);
  return g;
}

template <typename S>
Mat<S> wedge_gram(const Orientation<S>& o, const Subspace<KVector<S>>& sub) {
  require_middle_grade(o, sub.grade());
  const auto& b = sub.basis();
  Mat<S> g(sub.dimension(), sub.dimension());
  for (int i = 0; i < sub.dimension(); ++i)
    for (int j = 0; j < sub.dimension(); ++j) g(i, j) = phi_eta(o, b[i], b[j]);
  return g;
}

template <typename S>
void require_middle_grade(const Orientation<S>& o, int k) {
  if (o.dimension() != 2 * k)
    throw GradeError("wedge pairing is symmetric only in the middle grade");
}

/// Signature of the wedge pairing restricted to a middle-grade subspace,
/// by exact congruence diagonalization.
template <typename S, Side V>
SignatureReport signature(const Orientation<S>& o, const Subspace<Exterior<S, V>>& sub) {
  return signature_of_symmetric(wedge_gram(o, sub));
}

/// b^+(g): positive inertia index of Phi_zeta on the closed 2-forms of a
/// unimodular 4-dimensional algebra. The dimension counts dim Z = b^+ + 3
/// and dim B = 3 - b^+ are re-checked on every call.
template <typename S>
int b_plus(const LieAlgebra<S>& g, const Orientation<S>& o) {
  if (g.dimension() != 4 || o.dimension() != 4)
    throw DimensionMismatch("b_plus: dimension-4 algebra required");
  if (!is_unimodular(g)) throw NotUnimodularError("b_plus: unimodular algebra required");
  const auto Z = cocycles(g, 2);
  const int bp = signature(o, Z).positive;
  if (Z.dimension() != bp + 3 || coboundaries(g, 2).dimension() != 3 - bp)
    throw std::logic_error("b_plus: dimension arithmetic violated");
  return bp;
}

}  // namespace ak4
