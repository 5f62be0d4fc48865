#pragma once

#include <random>

#include "ak4/hodge.hpp"
#include "ak4/rational.hpp"

namespace ak4 {

/// Almost complex structure as an endomorphism matrix with J^2 = -id, column
/// convention J f_k = sum_h A_{hk} f_h. Orientation compatibility is checked
/// against a given Orientation at the point of use.
template <typename S>
class AlmostComplexStructure {
public:
  static AlmostComplexStructure from_matrix(Mat<S> a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("AlmostComplexStructure: square matrix");
    if (!((a * a) + Mat<S>::Identity(a.rows(), a.cols())).isZero(S(0)))
      throw DimensionMismatch("AlmostComplexStructure: J^2 = -id violated");
    return AlmostComplexStructure(std::move(a));
  }

  int dimension() const { return static_cast<int>(a_.rows()); }
  const Mat<S>& matrix() const { return a_; }
  S coeff(int h, int k) const { return a_(h - 1, k - 1); }

  KVector<S> apply(const KVector<S>& v) const {
    if (v.dimension() != dimension()) throw DimensionMismatch("J: dimension mismatch");
    if (v.grade() != 1) throw GradeError("J: grade-1 vector expected");
    return KVector<S>::from_coords(dimension(), 1, a_ * v.coords());
  }

  friend bool operator==(const AlmostComplexStructure& x, const AlmostComplexStructure& y) {
    return x.a_.rows() == y.a_.rows() && (x.a_ - y.a_).isZero(S(0));
  }

private:
  explicit AlmostComplexStructure(Mat<S> a) : a_(std::move(a)) {}
  Mat<S> a_;
};

/// Sign of the orientation J induces, relative to `o`: the sign of
/// eta(v ^ Jv ^ w ^ Jw) for the first basis pair (v, w) making
/// {v, Jv, w, Jw} a basis. The sign does not depend on the pair chosen.
template <typename S>
int orientation_sign(const Orientation<S>& o, const AlmostComplexStructure<S>& j) {
  const int n = o.dimension();
  if (j.dimension() != n || n != 4)
    throw DimensionMismatch("orientation_sign: dimension-4 structures only");
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      KVector<S> v(n, 1), w(n, 1);
      v.add_term({a}, S(1));
      w.add_term({b}, S(1));
      const auto top = wedge(wedge(v, j.apply(v)), wedge(w, j.apply(w)));
      const S value = evaluate(top, o.eta());
      if (!(value == S(0))) return value > S(0) ? 1 : -1;
    }
  throw std::logic_error("orientation_sign: no adapted basis pair found (J^2 != -id?)");
}

template <typename S>
void require_positive_orientation(const Orientation<S>& o, const AlmostComplexStructure<S>& j) {
  if (orientation_sign(o, j) != 1)
    throw OrientationMismatchError(
        "J induces the opposite orientation; negate zeta (or a basis vector) and retry");
}

/// The involution alpha(., .) -> alpha(J., J.) on 2-forms.
template <typename S>
KForm<S> act_on_2forms(const AlmostComplexStructure<S>& j, const KForm<S>& alpha) {
  const int n = j.dimension();
  if (alpha.dimension() != n) throw DimensionMismatch("act_on_2forms: dimension mismatch");
  if (alpha.grade() != 2) throw GradeError("act_on_2forms: grade-2 input");
  KForm<S> out(n, 2);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q) {
      // alpha(J f_p, J f_q) = sum_{h,k} A_{hp} A_{kq} alpha(f_h, f_k)
      S value(0);
      for (const auto& [I, c] : alpha.terms()) {
        const auto hk = I.indices();
        const int h = hk[0], k = hk[1];
        value += c * (j.coeff(h, p) * j.coeff(k, q) - j.coeff(k, p) * j.coeff(h, q));
      }
      if (!(value == S(0))) out.add_term({p, q}, value);
    }
  return out;
}

/// The dual involution J(u ^ v) = Ju ^ Jv on 2-vectors.
template <typename S>
KVector<S> act_on_2vectors(const AlmostComplexStructure<S>& j, const KVector<S>& u) {
  const int n = j.dimension();
  if (u.dimension() != n) throw DimensionMismatch("act_on_2vectors: dimension mismatch");
  if (u.grade() != 2) throw GradeError("act_on_2vectors: grade-2 input");
  KVector<S> out(n, 2);
  for (const auto& [I, c] : u.terms()) {
    const auto hk = I.indices();
    KVector<S> fh(n, 1), fk(n, 1);
    fh.add_term({hk[0]}, S(1));
    fk.add_term({hk[1]}, S(1));
    out += c * wedge(j.apply(fh), j.apply(fk));
  }
  return out;
}

namespace detail {

template <typename S, typename Action>
Subspace<std::invoke_result_t<Action, MultiIndex>> eigenspace(int n, int sign, Action&& act) {
  using E = std::invoke_result_t<Action, MultiIndex>;
  std::vector<E> gens;
  for (MultiIndex I : index_basis(n, 2)) {
    E base = E::basis_element(n, I);
    E image = act(I);
    gens.push_back(sign > 0 ? base + image : base - image);
  }
  return Subspace<E>::span(n, 2, gens);
}

}  // namespace detail

/// J-invariant 2-forms via the eigenprojector (id + J-action)/2 (up to scale).
template <typename S>
Subspace<KForm<S>> lambda_plus_forms(const AlmostComplexStructure<S>& j) {
  return detail::eigenspace<S>(j.dimension(), +1, [&](MultiIndex I) {
    return act_on_2forms(j, KForm<S>::basis_element(j.dimension(), I));
  });
}

template <typename S>
Subspace<KForm<S>> lambda_minus_forms(const AlmostComplexStructure<S>& j) {
  return detail::eigenspace<S>(j.dimension(), -1, [&](MultiIndex I) {
    return act_on_2forms(j, KForm<S>::basis_element(j.dimension(), I));
  });
}

template <typename S>
Subspace<KVector<S>> lambda_plus_vectors(const AlmostComplexStructure<S>& j) {
  return detail::eigenspace<S>(j.dimension(), +1, [&](MultiIndex I) {
    return act_on_2vectors(j, KVector<S>::basis_element(j.dimension(), I));
  });
}

template <typename S>
Subspace<KVector<S>> lambda_minus_vectors(const AlmostComplexStructure<S>& j) {
  return detail::eigenspace<S>(j.dimension(), -1, [&](MultiIndex I) {
    return act_on_2vectors(j, KVector<S>::basis_element(j.dimension(), I));
  });
}

/// Pluecker data of J in the chart U_{ij}: with the relabeling that sends
/// (1, 3) to (i, j) and (2, 4) to the complementary pair in increasing order,
/// p_{hk} = b_{2h} b_{4k} - b_{2k} b_{4h} over the relabeled matrix b.
/// The chart is valid iff p_{13} != 0, i.e. {f_i, Jf_i, f_j, Jf_j} is a basis.
template <typename S>
struct ChartData {
  int i = 1;
  int j = 3;
  std::array<int, 4> relabel{};  // new index -> original index
  Mat<S> p;                      // 4x4 antisymmetric, relabeled indices
  bool valid = false;
};

template <typename S>
ChartData<S> chart_data(const AlmostComplexStructure<S>& j, int ci, int cj) {
  if (j.dimension() != 4) throw DimensionMismatch("chart_data: dimension-4 structures only");
  if (!(1 <= ci && ci < cj && cj <= 4)) throw InvalidChartError("chart_data: need 1 <= i < j <= 4");
  ChartData<S> chart;
  chart.i = ci;
  chart.j = cj;
  std::array<int, 2> comp{};
  int at = 0;
  for (int m = 1; m <= 4; ++m)
    if (m != ci && m != cj) comp[at++] = m;
  chart.relabel = {ci, comp[0], cj, comp[1]};

  const auto b = [&](int h, int k) { return j.coeff(chart.relabel[h - 1], chart.relabel[k - 1]); };
  chart.p = Mat<S>::Zero(4, 4);
  for (int h = 1; h <= 4; ++h)
    for (int k = h + 1; k <= 4; ++k) {
      chart.p(h - 1, k - 1) = b(2, h) * b(4, k) - b(2, k) * b(4, h);
      chart.p(k - 1, h - 1) = -chart.p(h - 1, k - 1);
    }
  chart.valid = !(chart.p(0, 2) == S(0));
  return chart;
}

/// Closed-form expression for Lambda^-_J(g*) out of the Pluecker data,
/// transported through the chart relabeling. Kept as an independently coded
/// cross-check of the eigenprojector route.
template <typename S>
Subspace<KForm<S>> lambda_minus_plucker(const AlmostComplexStructure<S>& j, int ci, int cj) {
  const ChartData<S> chart = chart_data(j, ci, cj);
  if (!chart.valid)
    throw InvalidChartError("lambda_minus_plucker: the plane L_ij is J-invariant in this chart");
  const auto& r = chart.relabel;
  const auto b = [&](int h, int k) { return j.coeff(r[h - 1], r[k - 1]); };

  KForm<S> first(4, 2);
  first.add_term({r[1], r[3]}, S(1));  // relabeled f^{24}
  for (int h = 1; h <= 4; ++h)
    for (int k = h + 1; k <= 4; ++k)
      first.add_term({r[h - 1], r[k - 1]}, -chart.p(h - 1, k - 1));

  KForm<S> second(4, 2);
  for (int h = 1; h <= 4; ++h) {
    if (h != 4) second.add_term({r[3], r[h - 1]}, b(2, h));  // relabeled f^{4h}
    if (h != 2) second.add_term({r[1], r[h - 1]}, -b(4, h)); // relabeled -f^{2h}
  }
  return Subspace<KForm<S>>::span(4, 2, {first, second});
}

/// N_J(u, v) = [u, v] - J[Ju, v] - J[u, Jv] - [Ju, Jv].
template <typename S>
KVector<S> nijenhuis(const LieAlgebra<S>& g, const AlmostComplexStructure<S>& j,
                     const KVector<S>& u, const KVector<S>& v) {
  if (j.dimension() != g.dimension()) throw DimensionMismatch("nijenhuis: dimension mismatch");
  const auto ju = j.apply(u);
  const auto jv = j.apply(v);
  return g.bracket(u, v) - j.apply(g.bracket(ju, v)) - j.apply(g.bracket(u, jv)) -
         g.bracket(ju, jv);
}

template <typename S>
bool is_integrable(const LieAlgebra<S>& g, const AlmostComplexStructure<S>& j) {
  const int n = g.dimension();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (!nijenhuis(g, j, basis_vector(g, a), basis_vector(g, b)).is_zero()) return false;
  return true;
}

/// One-directional integrability criterion: Lambda^-_J(g*) inside the closed
/// 2-forms forces N_J = 0.
template <typename S>
bool integrable_sufficient(const LieAlgebra<S>& g, const AlmostComplexStructure<S>& j) {
  if (g.dimension() != 4) throw DimensionMismatch("integrable_sufficient: dimension 4 only");
  return cocycles(g, 2).contains(lambda_minus_forms(j));
}

/// J-Hermitian symmetrization of a metric and its fundamental form
/// phi(u, v) = h~(Ju, v).
template <typename S>
struct HermitianData {
  InnerProduct<S> metric;
  KForm<S> fundamental_form;
};

template <typename S>
HermitianData<S> hermitian_data(const AlmostComplexStructure<S>& j, const InnerProduct<S>& h) {
  const int n = j.dimension();
  if (h.dimension() != n) throw DimensionMismatch("hermitian_data: dimension mismatch");
  const S half = S(1) / S(2);
  const Mat<S> sym = half * (h.gram() + (j.matrix().transpose() * h.gram() * j.matrix()));
  InnerProduct<S> metric(sym);
  const Mat<S> phi_matrix = j.matrix().transpose() * sym;  // phi(f_p, f_q) = h~(J f_p, f_q)
  KForm<S> phi(n, 2);
  for (int p = 1; p <= n; ++p)
    for (int q = p + 1; q <= n; ++q)
      if (!(phi_matrix(p - 1, q - 1) == S(0))) phi.add_term({p, q}, phi_matrix(p - 1, q - 1));
  return {std::move(metric), std::move(phi)};
}

/// Symmetrized Gram of omega(., J.): G(u, v) = (omega(u, Jv) + omega(v, Ju))/2.
/// Positive definiteness of this matrix is the exact taming positivity test.
template <typename S>
Mat<S> taming_gram(const AlmostComplexStructure<S>& j, const KForm<S>& omega) {
  const int n = j.dimension();
  if (omega.dimension() != n || omega.grade() != 2)
    throw GradeError("taming_gram: 2-form over J's space expected");
  Mat<S> raw(n, n);  // raw(p, q) = omega(f_p, J f_q)
  for (int p = 1; p <= n; ++p) {
    KVector<S> fp(n, 1);
    fp.add_term({p}, S(1));
    for (int q = 1; q <= n; ++q) {
      KVector<S> fq(n, 1);
      fq.add_term({q}, S(1));
      const auto jfq = j.apply(fq);
      raw(p - 1, q - 1) = evaluate(wedge(fp, jfq), omega);
    }
  }
  const S half = S(1) / S(2);
  return half * (raw + raw.transpose().eval());
}

/// omega tames J iff omega is closed and positive on every v ^ Jv
/// (decided by Sylvester's criterion on the symmetrized Gram).
template <typename S>
bool is_tamed_by(const LieAlgebra<S>& g, const AlmostComplexStructure<S>& j,
                 const KForm<S>& omega) {
  if (!ce_d(g, omega).is_zero()) return false;
  return is_positive_definite(taming_gram(j, omega));
}

/// Compatible = tamed and J-invariant.
template <typename S>
bool is_compatible_with(const LieAlgebra<S>& g, const AlmostComplexStructure<S>& j,
                        const KForm<S>& omega) {
  return is_tamed_by(g, j, omega) && act_on_2forms(j, omega) == omega;
}

/// Deterministic small-coefficient random source for sweeps and fixtures.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  Rational rational(int max_num = 3, int max_den = 2) {
    return Rational(BigInt(uniform(-max_num, max_num)), BigInt(uniform(1, max_den)));
  }

  Mat<Rational> matrix(int rows, int cols, int max_num = 3, int max_den = 2) {
    Mat<Rational> m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) m(r, c) = rational(max_num, max_den);
    return m;
  }

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
};

/// Block rotation J0: f_{2m-1} -> f_{2m}, f_{2m} -> -f_{2m-1}.
inline Mat<Rational> standard_j_matrix(int n) {
  if (n % 2 != 0) throw DimensionMismatch("standard_j_matrix: even dimension required");
  Mat<Rational> a = Mat<Rational>::Zero(n, n);
  for (int m = 0; m + 1 < n; m += 2) {
    a(m + 1, m) = Rational(1);
    a(m, m + 1) = Rational(-1);
  }
  return a;
}

/// Conjugates the standard J0 by a random invertible matrix of positive
/// determinant, so the result satisfies J^2 = -id and induces the standard
/// orientation. Degenerate draws are resampled.
inline AlmostComplexStructure<Rational> random_acs(int n, Rng& rng) {
  const Mat<Rational> j0 = standard_j_matrix(n);
  while (true) {
    const Mat<Rational> p = rng.matrix(n, n);
    const Rational det = determinant(p);
    if (det == Rational(0)) continue;
    Mat<Rational> q = p;
    if (det < Rational(0)) q.col(0) = -p.col(0);  // flip into the det > 0 component
    const Mat<Rational> inv = Eigen::FullPivLU<Mat<Rational>>(q).inverse();
    return AlmostComplexStructure<Rational>::from_matrix(q * j0 * inv);
  }
}

}  // namespace ak4
