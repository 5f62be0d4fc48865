#pragma once

#include <optional>

#include "ak4/almost_complex.hpp"

namespace ak4 {

/// Dimensions and representatives of the J-invariant / J-anti-invariant
/// subgroups of degree-2 cohomology. h_plus_reps are closed J-invariant forms
/// that stay independent modulo coboundaries; h_minus_reps span Z cap
/// Lambda^-, which injects into cohomology because B cap Lambda^- = 0.
template <typename S>
struct JCohomologyReport {
  int b2 = 0;
  int b_plus = 0;
  int h_plus = 0;
  int h_minus = 0;
  std::vector<KForm<S>> h_plus_reps;
  std::vector<KForm<S>> h_minus_reps;
  Subspace<KForm<S>> z_plus;             // Z cap Lambda^+_J, dimension b_plus + 1
  Subspace<KForm<S>> invariant_exact;    // B cap Lambda^+_J, dimension <= 1
};

namespace detail {

template <typename S>
void require_classifiable(const LieAlgebra<S>& g, const Orientation<S>& o,
                          const AlmostComplexStructure<S>& j) {
  if (g.dimension() != 4 || o.dimension() != 4 || j.dimension() != 4)
    throw DimensionMismatch("tameness: dimension-4 inputs required");
  if (!is_unimodular(g)) throw NotUnimodularError("tameness: unimodular algebra required");
  require_positive_orientation(o, j);
}

}  // namespace detail

/// The cohomological J-decomposition data. Every dimension identity this
/// rests on (the closed/exact dimension arithmetic, the J-decomposition of
/// H^2, the h- dichotomy) is re-verified; a violation is a logic error, not
/// an input error.
template <typename S>
JCohomologyReport<S> j_cohomology(const LieAlgebra<S>& g, const Orientation<S>& o,
                                  const AlmostComplexStructure<S>& j) {
  detail::require_classifiable(g, o, j);
  const auto Z = cocycles(g, 2);
  const auto B = coboundaries(g, 2);
  const auto plus = lambda_plus_forms(j);
  const auto minus = lambda_minus_forms(j);

  JCohomologyReport<S> rep{0,
                           0,
                           0,
                           0,
                           {},
                           {},
                           intersection(Z, plus),
                           intersection(B, plus)};
  rep.b2 = Z.dimension() - B.dimension();
  rep.b_plus = b_plus(g, o);
  rep.h_minus = intersection(Z, minus).dimension();
  rep.h_plus = rep.z_plus.dimension() - rep.invariant_exact.dimension();

  if (intersection(B, minus).dimension() != 0)
    throw std::logic_error("j_cohomology: B cap Lambda^- should vanish");
  if (rep.z_plus.dimension() != rep.b_plus + 1)
    throw std::logic_error("j_cohomology: dim(Z cap Lambda^+) should be b+ + 1");
  if (rep.invariant_exact.dimension() > 1)
    throw std::logic_error("j_cohomology: dim(B cap Lambda^+) should be <= 1");
  if (rep.h_plus + rep.h_minus != rep.b2)
    throw std::logic_error("j_cohomology: h+ + h- != b2");
  if (rep.h_minus != rep.b_plus && rep.h_minus != rep.b_plus - 1)
    throw std::logic_error("j_cohomology: h- outside {b+ - 1, b+}");

  rep.h_minus_reps = intersection(Z, minus).basis();

  // extend a basis of B cap Lambda^+ to one of Z cap Lambda^+; the extension
  // represents H^+_J
  auto reps = rep.invariant_exact;
  for (const auto& z : rep.z_plus.basis()) {
    if (reps.contains_element(z)) continue;
    std::vector<KForm<S>> gens = reps.basis();
    gens.push_back(z);
    reps = Subspace<KForm<S>>::span(4, 2, gens);
    rep.h_plus_reps.push_back(z);
  }
  if (static_cast<int>(rep.h_plus_reps.size()) != rep.h_plus)
    throw std::logic_error("j_cohomology: representative extension has the wrong size");

  // joint independence of all representatives modulo coboundaries
  std::vector<KForm<S>> all = B.basis();
  all.insert(all.end(), rep.h_plus_reps.begin(), rep.h_plus_reps.end());
  all.insert(all.end(), rep.h_minus_reps.begin(), rep.h_minus_reps.end());
  if (Subspace<KForm<S>>::span(4, 2, all).dimension() !=
      B.dimension() + rep.h_plus + rep.h_minus)
    throw std::logic_error("j_cohomology: representatives dependent modulo B");
  return rep;
}

/// Closed J-invariant form positive on every v ^ Jv, built from the signature
/// (1, b+) of the wedge pairing on Z cap Lambda^+: the positive axis of an
/// exact congruence diagonalization, with the sign fixed by the positivity
/// test. Exactly one of +/- the axis form is compatible; this is a theorem
/// (the two lie in opposite components of the positive cone), so both passing
/// or neither passing is a logic error.
template <typename S>
KForm<S> construct_compatible_form(const LieAlgebra<S>& g, const Orientation<S>& o,
                                   const AlmostComplexStructure<S>& j) {
  const auto rep = j_cohomology(g, o, j);
  return construct_compatible_form(g, o, j, rep);
}

template <typename S>
KForm<S> construct_compatible_form(const LieAlgebra<S>& g, const Orientation<S>& o,
                                   const AlmostComplexStructure<S>& j,
                                   const JCohomologyReport<S>& rep) {
  if (rep.h_minus != rep.b_plus - 1)
    throw NotTamedError("construct_compatible_form: J is not tamed (h- = b+)");
  const auto cong = congruence_diagonalize(wedge_gram(o, rep.z_plus));
  int positive_axis = -1;
  int positives = 0;
  for (int i = 0; i < cong.diag.size(); ++i)
    if (cong.diag(i) > S(0)) {
      positive_axis = i;
      ++positives;
    }
  if (positives != 1)
    throw std::logic_error("construct_compatible_form: signature of Z+ is not (1, b+)");
  KForm<S> axis(4, 2);
  for (int i = 0; i < rep.z_plus.dimension(); ++i)
    axis += cong.basis(i, positive_axis) * rep.z_plus.basis()[i];

  const bool plus_ok = is_compatible_with(g, j, axis);
  const KForm<S> negated = -axis;
  const bool minus_ok = is_compatible_with(g, j, negated);
  if (plus_ok == minus_ok)
    throw std::logic_error("construct_compatible_form: exactly one of +/-axis must be compatible");
  return plus_ok ? axis : negated;
}

/// Taming forms from the cone sum K^t = K^c + H^-: a compatible form plus any
/// closed anti-invariant beta still tames, because anti-invariant forms vanish
/// on every v ^ Jv.
template <typename S>
KForm<S> construct_taming_form(const LieAlgebra<S>& g, const Orientation<S>& o,
                               const AlmostComplexStructure<S>& j, const KForm<S>& beta) {
  if (!ce_d(g, beta).is_zero())
    throw DimensionMismatch("construct_taming_form: beta must be closed");
  if (!(act_on_2forms(j, beta) == -beta))
    throw DimensionMismatch("construct_taming_form: beta must be J-anti-invariant");
  const KForm<S> omega = construct_compatible_form(g, o, j) + beta;
  if (!is_tamed_by(g, j, omega))
    throw std::logic_error("construct_taming_form: sum fails the taming positivity test");
  return omega;
}

/// Certificate that no closed form can tame J: a vector v whose positive
/// bivector v ^ Jv is a 2-boundary. Every taming form would have to be
/// simultaneously positive and zero on it. The construction follows the
/// equivalence chain: pick 0 != w in B cap Lambda^+_J(g); w ^ w = 0 because B
/// is wedge-isotropic for unimodular g, so w is simple; its plane is
/// J-invariant, so w spans the same line as v ^ Jv for any v in the plane.
template <typename S>
KVector<S> obstruction_vector(const LieAlgebra<S>& g, const Orientation<S>& o,
                              const AlmostComplexStructure<S>& j) {
  detail::require_classifiable(g, o, j);
  const auto W = intersection(boundaries(g, 2), lambda_plus_vectors(j));
  if (W.dimension() == 0)
    throw std::domain_error("obstruction_vector: J is tamed, no obstruction exists");
  const KVector<S>& w = W.basis().front();
  if (!wedge(w, w).is_zero())
    throw std::logic_error("obstruction_vector: B ^ B != 0 on a unimodular algebra");
  const auto [x, y] = factor_simple(w);
  const KVector<S> v = x;
  const auto vjv = wedge(v, j.apply(v));
  // v ^ Jv must be a nonzero multiple of w; re-check exactly
  S mu(0);
  for (const auto& [I, c] : w.terms()) {
    mu = vjv.coefficient(I) / c;
    break;
  }
  if (mu == S(0) || !(vjv == mu * w))
    throw std::logic_error("obstruction_vector: v ^ Jv is not proportional to the boundary");
  return v;
}

/// The full verdict for one (g, J): tamed and almost Kaehler coincide here;
/// tamedness is decided cohomologically (h- = b+ - 1) and re-checked against
/// the linear criterion B cap Lambda^+ = 0; the witness is either a
/// compatible form or an obstruction vector.
template <typename S>
struct Classification {
  bool tamed = false;
  bool almost_kahler = false;
  bool integrable = false;
  JCohomologyReport<S> report;
  std::optional<KForm<S>> compatible_form;
  std::optional<KVector<S>> obstruction;
};

template <typename S>
Classification<S> classify(const LieAlgebra<S>& g, const Orientation<S>& o,
                           const AlmostComplexStructure<S>& j) {
  Classification<S> out;
  out.report = j_cohomology(g, o, j);
  out.tamed = (out.report.h_minus == out.report.b_plus - 1);
  const bool linear_criterion = (out.report.invariant_exact.dimension() == 0);
  if (out.tamed != linear_criterion)
    throw std::logic_error("classify: tameness criteria disagree");
  out.integrable = is_integrable(g, j);
  if (out.report.b_plus == 2 && !out.tamed && !out.integrable)
    throw std::logic_error("classify: b+ = 2 demands tamed or integrable");
  if (out.tamed) {
    out.compatible_form = construct_compatible_form(g, o, j, out.report);
    out.almost_kahler = is_compatible_with(g, j, *out.compatible_form);
    if (!out.almost_kahler) throw std::logic_error("classify: witness failed compatibility");
    // for tamed J the induced pairing on H^+_J has signature (1, b+)
    Mat<S> gram(out.report.h_plus, out.report.h_plus);
    for (int a = 0; a < out.report.h_plus; ++a)
      for (int b = 0; b < out.report.h_plus; ++b)
        gram(a, b) = phi_zeta(o, out.report.h_plus_reps[a], out.report.h_plus_reps[b]);
    if (!(signature_of_symmetric(gram) == SignatureReport{1, out.report.b_plus, 0}))
      throw std::logic_error("classify: H+ pairing signature is not (1, b+)");
  } else {
    out.obstruction = obstruction_vector(g, o, j);
  }
  return out;
}

/// Membership of a cohomology class in the tamed/compatible cones. The class
/// is given by coordinates in the representative bases emitted by
/// j_cohomology (H^+_J has no canonical basis, so the basis travels with the
/// report). For tamed J and B cap Lambda^+ = 0, the Z^+ representative of an
/// H^+ class is unique, so cone membership of the class equals the exact
/// positivity verdict of that one form; the tamed cone adds H^-_J for free.
template <typename S>
struct ConeVerdict {
  bool j_tamed = false;
  bool in_compatible_cone = false;
  bool in_tamed_cone = false;
  KForm<S> h_plus_part;
  KForm<S> h_minus_part;
};

template <typename S>
ConeVerdict<S> cone_membership(const LieAlgebra<S>& g, const Orientation<S>& o,
                               const AlmostComplexStructure<S>& j,
                               const std::vector<S>& plus_coords,
                               const std::vector<S>& minus_coords = {}) {
  const auto rep = j_cohomology(g, o, j);
  if (static_cast<int>(plus_coords.size()) != rep.h_plus)
    throw DimensionMismatch("cone_membership: expected " + std::to_string(rep.h_plus) +
                            " H+ coordinates");
  if (!minus_coords.empty() && static_cast<int>(minus_coords.size()) != rep.h_minus)
    throw DimensionMismatch("cone_membership: expected " + std::to_string(rep.h_minus) +
                            " H- coordinates");
  ConeVerdict<S> verdict{rep.h_minus == rep.b_plus - 1, false, false, KForm<S>(4, 2),
                         KForm<S>(4, 2)};
  for (int i = 0; i < rep.h_plus; ++i)
    verdict.h_plus_part += plus_coords[i] * rep.h_plus_reps[i];
  for (std::size_t i = 0; i < minus_coords.size(); ++i)
    verdict.h_minus_part += minus_coords[i] * rep.h_minus_reps[i];
  if (!verdict.j_tamed) return verdict;  // both cones are empty

  verdict.in_tamed_cone = is_positive_definite(taming_gram(j, verdict.h_plus_part));
  verdict.in_compatible_cone = verdict.in_tamed_cone && verdict.h_minus_part.is_zero();
  if (verdict.in_tamed_cone) {
    // same-component consistency with the stored witness
    const auto witness = construct_compatible_form(g, o, j, rep);
    if (!(phi_zeta(o, verdict.h_plus_part, verdict.h_plus_part) > S(0)) ||
        !(phi_zeta(o, verdict.h_plus_part, witness) > S(0)))
      throw std::logic_error("cone_membership: member fails the component consistency checks");
  }
  return verdict;
}

/// Randomized search for a taming form over the closed 2-forms, seeded with
/// the +/- candidates from the compatible-form construction. A positive
/// verdict exhibits an exact taming form; a negative verdict is certified by
/// an obstruction vector, never by search exhaustion.
inline bool feasibility_oracle(const LieAlgebra<Rational>& g, const Orientation<Rational>& o,
                               const AlmostComplexStructure<Rational>& j, int trials,
                               std::uint64_t seed = 0x5eed) {
  using S = Rational;
  detail::require_classifiable(g, o, j);
  const auto Z = cocycles(g, 2);
  std::vector<KForm<S>> candidates;

  // seed with the diagonalization axis of Z cap Lambda^+, when positive
  const auto z_plus = intersection(Z, lambda_plus_forms(j));
  const auto cong = congruence_diagonalize(wedge_gram(o, z_plus));
  for (int i = 0; i < cong.diag.size(); ++i)
    if (cong.diag(i) > S(0)) {
      KForm<S> axis(4, 2);
      for (int r = 0; r < z_plus.dimension(); ++r)
        axis += cong.basis(r, i) * z_plus.basis()[r];
      candidates.push_back(axis);
      candidates.push_back(-axis);
    }

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    KForm<S> omega(4, 2);
    for (const auto& z : Z.basis()) omega += rng.rational() * z;
    candidates.push_back(omega);
  }
  for (const auto& omega : candidates)
    if (is_positive_definite(taming_gram(j, omega))) return true;  // exact taming certificate

  if (intersection(boundaries(g, 2), lambda_plus_vectors(j)).dimension() > 0)
    return false;  // exact infeasibility certificate
  throw std::logic_error("feasibility_oracle: search failed but no obstruction exists");
}

}  // namespace ak4
