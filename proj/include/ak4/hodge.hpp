#pragma once

#include "ak4/pairings.hpp"

namespace ak4 {

/// Inner product on g as an exact symmetric positive definite Gram matrix;
/// positivity is verified by Sylvester's criterion at construction.
template <typename S>
class InnerProduct {
public:
  explicit InnerProduct(Mat<S> gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols()) throw DimensionMismatch("InnerProduct: square Gram required");
    if (!is_positive_definite(gram_))
      throw DimensionMismatch("InnerProduct: Gram matrix must be symmetric positive definite");
    inverse_ = Eigen::FullPivLU<Mat<S>>(gram_).inverse();
  }

  static InnerProduct euclidean(int n) { return InnerProduct(Mat<S>::Identity(n, n)); }

  int dimension() const { return static_cast<int>(gram_.rows()); }
  const Mat<S>& gram() const { return gram_; }
  const Mat<S>& inverse_gram() const { return inverse_; }

  S on_vectors(const KVector<S>& u, const KVector<S>& v) const {
    if (u.grade() != 1 || v.grade() != 1) throw GradeError("InnerProduct: grade-1 arguments");
    return (u.coords().transpose() * gram_ * v.coords())(0);
  }

private:
  Mat<S> gram_;
  Mat<S> inverse_;
};

/// <f^I, f^J> = det[(H^{-1})_{i_a j_b}], the metric induced on k-forms.
template <typename S>
S form_inner(const InnerProduct<S>& h, MultiIndex I, MultiIndex J) {
  const auto iI = I.indices();
  const auto iJ = J.indices();
  if (iI.size() != iJ.size()) throw GradeError("form_inner: grade mismatch");
  const int k = static_cast<int>(iI.size());
  if (k == 0) return S(1);
  Mat<S> minor(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) minor(a, b) = h.inverse_gram()(iI[a] - 1, iJ[b] - 1);
  return determinant(minor);
}

template <typename S>
S form_inner(const InnerProduct<S>& h, const KForm<S>& alpha, const KForm<S>& beta) {
  if (alpha.grade() != beta.grade()) throw GradeError("form_inner: grade mismatch");
  if (alpha.dimension() != h.dimension() || beta.dimension() != h.dimension())
    throw DimensionMismatch("form_inner: dimension mismatch");
  S acc(0);
  for (const auto& [I, a] : alpha.terms())
    for (const auto& [J, b] : beta.terms()) acc += a * b * form_inner(h, I, J);
  return acc;
}

/// Volume form of h in the orientation class of `o`. Exactness requires
/// det(H) to be a perfect rational square; anything else is rejected, as is
/// an orientation whose eta does not equal Vol_h (the pairing identity
/// Phi_zeta(alpha, *beta) = <alpha, beta> would pick up a stray factor).
template <typename S>
KForm<S> volume_form(const InnerProduct<S>& h, const Orientation<S>& o) {
  const int n = h.dimension();
  if (o.dimension() != n) throw DimensionMismatch("volume_form: dimension mismatch");
  const auto root = exact_sqrt(determinant(h.gram()));
  if (!root)
    throw MetricError("volume_form: det(Gram) is not a perfect rational square");
  const MultiIndex top = index_basis(n, n).front();
  const int sign = o.zeta().coefficient(top) > S(0) ? 1 : -1;
  KForm<S> vol(n, n);
  vol.add_term(top.indices(), sign > 0 ? *root : -*root);
  return vol;
}

/// Hodge star from alpha ^ *beta = <alpha, beta> Vol_h, solved on the basis:
/// (*beta) on the complement of I carries sign(I, I-bar) <f^I, beta> vol.
template <typename S>
KForm<S> hodge_star(const InnerProduct<S>& h, const Orientation<S>& o, const KForm<S>& beta) {
  const int n = h.dimension();
  if (beta.dimension() != n) throw DimensionMismatch("hodge_star: dimension mismatch");
  const KForm<S> vol = volume_form(h, o);
  if (!(evaluate(o.zeta(), vol) == S(1)))
    throw MetricError("hodge_star: orientation eta does not match Vol_h");
  const MultiIndex top = index_basis(n, n).front();
  const S vol_scale = vol.coefficient(top);
  KForm<S> out(n, n - beta.grade());
  for (MultiIndex I : index_basis(n, beta.grade())) {
    const S inner = form_inner(h, KForm<S>::basis_element(n, I), beta);
    if (inner == S(0)) continue;
    const MultiIndex comp = I.complement(n);
    const int sign = wedge_sign(I, comp);
    out.add_term(comp.indices(), (sign < 0 ? -inner : inner) * vol_scale);
  }
  return out;
}

/// delta = (-1)^{n(p+1)+1} * d * on p-forms; grade 0 has no codifferential.
template <typename S>
KForm<S> codifferential(const InnerProduct<S>& h, const Orientation<S>& o, const LieAlgebra<S>& g,
                        const KForm<S>& alpha) {
  const int n = h.dimension();
  const int p = alpha.grade();
  if (p < 1) throw GradeError("codifferential: grade underflow");
  KForm<S> out = hodge_star(h, o, ce_d(g, hodge_star(h, o, alpha)));
  if ((n * (p + 1) + 1) % 2 != 0) out = -out;
  return out;
}

/// Delta = d delta + delta d, with the vanishing pieces dropped at the
/// extreme grades.
template <typename S>
KForm<S> laplacian(const InnerProduct<S>& h, const Orientation<S>& o, const LieAlgebra<S>& g,
                   const KForm<S>& alpha) {
  const int n = h.dimension();
  const int p = alpha.grade();
  KForm<S> out(alpha.dimension(), p);
  if (p >= 1) out += ce_d(g, codifferential(h, o, g, alpha));
  if (p <= n - 1) out += codifferential(h, o, g, ce_d(g, alpha));
  return out;
}

template <typename S>
Mat<S> laplacian_matrix(const InnerProduct<S>& h, const Orientation<S>& o, const LieAlgebra<S>& g,
                        int p) {
  const int n = g.dimension();
  const auto& basis = index_basis(n, p);
  Mat<S> m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    m.col(static_cast<int>(c)) = laplacian(h, o, g, KForm<S>::basis_element(n, basis[c])).coords();
  return m;
}

/// H^p(g) = ker Delta; for unimodular g its dimension equals betti(g, p).
template <typename S>
Subspace<KForm<S>> harmonic_space(const InnerProduct<S>& h, const Orientation<S>& o,
                                  const LieAlgebra<S>& g, int p) {
  return Subspace<KForm<S>>::from_coord_columns(g.dimension(), p,
                                                kernel_basis(laplacian_matrix(h, o, g, p)));
}

/// alpha = harmonic + d lambda + delta mu, with the potentials returned.
template <typename S>
struct HodgeParts {
  KForm<S> harmonic;
  KForm<S> exact;    // d lambda
  KForm<S> lambda;   // grade p-1 potential
  KForm<S> coexact;  // delta mu
  KForm<S> mu;       // grade p+1 potential
};

template <typename S>
HodgeParts<S> hodge_decompose(const InnerProduct<S>& h, const Orientation<S>& o,
                              const LieAlgebra<S>& g, const KForm<S>& alpha) {
  const int n = g.dimension();
  if (!is_unimodular(g)) throw NotUnimodularError("hodge_decompose: unimodular algebra required");
  const int p = alpha.grade();
  const auto harm = harmonic_space(h, o, g, p);

  const int dim_p = static_cast<int>(index_basis(n, p).size());
  Mat<S> d_cols(dim_p, 0);
  if (p >= 1) d_cols = ce_d_matrix(g, p - 1);
  Mat<S> delta_cols(dim_p, 0);
  const auto& up_basis = (p + 1 <= n) ? index_basis(n, p + 1) : index_basis(n, 0);
  if (p + 1 <= n) {
    delta_cols.resize(dim_p, up_basis.size());
    for (std::size_t c = 0; c < up_basis.size(); ++c)
      delta_cols.col(static_cast<int>(c)) =
          codifferential(h, o, g, KForm<S>::basis_element(n, up_basis[c])).coords();
  }

  Mat<S> system(dim_p, harm.dimension() + d_cols.cols() + delta_cols.cols());
  Eigen::Index at_col = 0;
  if (harm.dimension() > 0) system.middleCols(at_col, harm.dimension()) = harm.coord_matrix();
  at_col += harm.dimension();
  if (d_cols.cols() > 0) system.middleCols(at_col, d_cols.cols()) = d_cols;
  at_col += d_cols.cols();
  if (delta_cols.cols() > 0) system.middleCols(at_col, delta_cols.cols()) = delta_cols;
  const auto x = solve(system, alpha.coords());
  if (!x) throw std::logic_error("hodge_decompose: decomposition system inconsistent");

  HodgeParts<S> parts{KForm<S>(n, p), KForm<S>(n, p), KForm<S>(n, std::max(p - 1, 0)),
                      KForm<S>(n, p), KForm<S>(n, std::min(p + 1, n))};
  int at = 0;
  parts.harmonic =
      KForm<S>::from_coords(n, p, harm.coord_matrix() * x->segment(at, harm.dimension()));
  at += harm.dimension();
  if (d_cols.cols() > 0) {
    parts.lambda = KForm<S>::from_coords(n, p - 1, x->segment(at, d_cols.cols()));
    parts.exact = ce_d(g, parts.lambda);
    at += static_cast<int>(d_cols.cols());
  }
  if (delta_cols.cols() > 0) {
    parts.mu = KForm<S>::from_coords(n, p + 1, x->segment(at, delta_cols.cols()));
    parts.coexact = codifferential(h, o, g, parts.mu);
  }
  if (!(parts.harmonic + parts.exact + parts.coexact == alpha))
    throw std::logic_error("hodge_decompose: parts do not sum to the input");
  return parts;
}

/// Self-dual / anti-self-dual split of a 2-form in dimension 4: the +-1
/// eigenspaces of the Hodge star.
template <typename S>
std::pair<KForm<S>, KForm<S>> sd_asd_split(const InnerProduct<S>& h, const Orientation<S>& o,
                                           const KForm<S>& alpha) {
  if (h.dimension() != 4 || alpha.grade() != 2)
    throw GradeError("sd_asd_split: 2-forms in dimension 4 only");
  const KForm<S> star = hodge_star(h, o, alpha);
  const S half = S(1) / S(2);
  return {half * (alpha + star), half * (alpha - star)};
}

}  // namespace ak4
