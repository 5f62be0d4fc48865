#include <doctest.h>

#include "ak4/almost_complex.hpp"
#include "ak4/rational.hpp"

using namespace ak4;
namespace {

using Q = Rational;
using J4 = AlmostComplexStructure<Q>;

KForm<Q> f2(std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
  int k = terms.size() ? static_cast<int>(terms.begin()->first.size()) : 0;
  KForm<Q> f(4, k);
  for (const auto& [idx, c] : terms) f.add_term(idx, Q(c));
  return f;
}

LieAlgebra<Q> nil3xR() { return LieAlgebra<Q>(4, {{1, 3, 2, Q(1)}}); }
LieAlgebra<Q> abelian() { return LieAlgebra<Q>(4, {}); }

/// The block rotation: Jf1 = f2, Jf2 = -f1, Jf3 = f4, Jf4 = -f3.
J4 standard_j() { return J4::from_matrix(standard_j_matrix(4)); }

/// The 2-parameter family on nil3xR (orientation-negative for f_1234).
J4 j_ab(const Q& a, const Q& b) {
  Mat<Q> m(4, 4);
  m << Q(0), Q(0), Q(-1), Q(0),
       a, Q(0), -b, Q(-1),
       Q(1), Q(0), Q(0), Q(0),
       -b, Q(1), -a, Q(0);
  return J4::from_matrix(m);
}

}  // namespace

TEST_CASE("construction rejects non-complex matrices") {
  CHECK_THROWS_AS(J4::from_matrix(Mat<Q>::Identity(4, 4)), DimensionMismatch);
  CHECK_NOTHROW(J4::from_matrix(standard_j_matrix(4)));
  CHECK_NOTHROW(j_ab(Q(1), Q(0)));
  CHECK_NOTHROW(j_ab(Q(2), Q(-3)));
}

TEST_CASE("orientation sign") {
  const auto o = Orientation<Q>::standard(4);
  const auto j = standard_j();
  CHECK(orientation_sign(o, j) == 1);
  CHECK(orientation_sign(Orientation<Q>::scaled(4, Q(-1)), j) == -1);
  // J -> -J preserves the sign
  CHECK(orientation_sign(o, J4::from_matrix(Mat<Q>(-standard_j_matrix(4)))) == 1);
  // the j_ab family induces the reversed orientation relative to f_1234
  CHECK(orientation_sign(o, j_ab(Q(1), Q(0))) == -1);
  CHECK(orientation_sign(Orientation<Q>::scaled(4, Q(-1)), j_ab(Q(1), Q(1))) == 1);
  CHECK_THROWS_AS(require_positive_orientation(o, j_ab(Q(1), Q(0))), OrientationMismatchError);
  Rng rng(101);
  for (int t = 0; t < 50; ++t) CHECK(orientation_sign(o, random_acs(4, rng)) == 1);
}

TEST_CASE("action on 2-forms matches the block-rotation fixture") {
  const auto j = standard_j();
  CHECK(act_on_2forms(j, f2({{{1, 2}, 1}})) == f2({{{1, 2}, 1}}));
  CHECK(act_on_2forms(j, f2({{{1, 3}, 1}})) == f2({{{2, 4}, 1}}));
  CHECK(act_on_2forms(j, f2({{{1, 4}, 1}, {{2, 3}, 1}})) == f2({{{1, 4}, -1}, {{2, 3}, -1}}));
}

TEST_CASE("the form action is an involution preserving phi_zeta") {
  const auto o = Orientation<Q>::standard(4);
  Rng rng(103);
  for (int t = 0; t < 120; ++t) {
    const auto j = random_acs(4, rng);
    KForm<Q> a(4, 2), b(4, 2);
    for (MultiIndex I : index_basis(4, 2)) {
      a.add_term(I.indices(), rng.rational());
      b.add_term(I.indices(), rng.rational());
    }
    CHECK(act_on_2forms(j, act_on_2forms(j, a)) == a);
    CHECK(phi_zeta(o, act_on_2forms(j, a), act_on_2forms(j, b)) == phi_zeta(o, a, b));
    KVector<Q> u(4, 2);
    for (MultiIndex I : index_basis(4, 2)) u.add_term(I.indices(), rng.rational());
    CHECK(act_on_2vectors(j, act_on_2vectors(j, u)) == u);
    // the two actions are adjoint under evaluation: evaluate(Ju, Ja) = evaluate(u, a)
    CHECK(evaluate(act_on_2vectors(j, u), act_on_2forms(j, a)) == evaluate(u, a));
  }
}

TEST_CASE("lambda_plus / lambda_minus dimensions and signatures") {
  const auto o = Orientation<Q>::standard(4);
  Rng rng(107);
  for (int t = 0; t < 60; ++t) {
    const auto j = random_acs(4, rng);
    const auto plus = lambda_plus_forms(j);
    const auto minus = lambda_minus_forms(j);
    CHECK(plus.dimension() == 4);
    CHECK(minus.dimension() == 2);
    CHECK(signature(o, plus) == SignatureReport{1, 3, 0});
    CHECK(signature(o, minus) == SignatureReport{2, 0, 0});
    CHECK(sum(plus, minus).dimension() == 6);
    // projectors land in the correct eigenspaces
    for (const auto& e : plus.basis()) CHECK(act_on_2forms(j, e) == e);
    for (const auto& e : minus.basis()) CHECK(act_on_2forms(j, e) == -e);
    // vector side mirrors the form side
    CHECK(lambda_plus_vectors(j).dimension() == 4);
    CHECK(lambda_minus_vectors(j).dimension() == 2);
    CHECK(signature(o, lambda_minus_vectors(j)) == SignatureReport{2, 0, 0});
  }
}

TEST_CASE("block-rotation fixture eigenspaces") {
  const auto j = standard_j();
  const auto minus = lambda_minus_forms(j);
  CHECK(minus == Subspace<KForm<Q>>::span(
                     4, 2, {f2({{{1, 3}, 1}, {{2, 4}, -1}}), f2({{{1, 4}, 1}, {{2, 3}, 1}})}));
  const auto plus = lambda_plus_forms(j);
  CHECK(plus.contains_element(f2({{{1, 2}, 1}})));
  CHECK(plus.contains_element(f2({{{3, 4}, 1}})));
  CHECK(plus.contains_element(f2({{{1, 4}, 1}, {{2, 3}, -1}})));
}

TEST_CASE("evaluate vanishes between opposite eigenspaces") {
  Rng rng(109);
  for (int t = 0; t < 50; ++t) {
    const auto j = random_acs(4, rng);
    const auto pv = lambda_plus_vectors(j);
    const auto mf = lambda_minus_forms(j);
    for (const auto& u : pv.basis())
      for (const auto& a : mf.basis()) CHECK(evaluate(u, a) == Q(0));
    const auto mv = lambda_minus_vectors(j);
    const auto pf = lambda_plus_forms(j);
    for (const auto& u : mv.basis())
      for (const auto& a : pf.basis()) CHECK(evaluate(u, a) == Q(0));
  }
}

TEST_CASE("g_zeta maps form eigenspaces onto vector eigenspaces") {
  const auto o = Orientation<Q>::standard(4);
  Rng rng(113);
  for (int t = 0; t < 40; ++t) {
    const auto j = random_acs(4, rng);
    for (int side = 0; side < 2; ++side) {
      const auto forms = side == 0 ? lambda_plus_forms(j) : lambda_minus_forms(j);
      const auto vectors = side == 0 ? lambda_plus_vectors(j) : lambda_minus_vectors(j);
      std::vector<KVector<Q>> images;
      for (const auto& a : forms.basis()) images.push_back(g_zeta(o, a));
      CHECK(Subspace<KVector<Q>>::span(4, 2, images) == vectors);
    }
  }
}

TEST_CASE("chart data and the chart formula against the eigenprojector") {
  // block-rotation J in chart (1,3): p_13 = 1, others 0
  const auto j = standard_j();
  const auto chart = chart_data(j, 1, 3);
  CHECK(chart.valid);
  CHECK(chart.p(0, 2) == Q(1));
  CHECK(chart.p(0, 1) == Q(0));
  const auto plucker = lambda_minus_plucker(j, 1, 3);
  CHECK(plucker == lambda_minus_forms(j));
  // chart (1,3) is invalid when the plane span{f_1, f_3} is J-invariant
  Mat<Q> m(4, 4);
  m << Q(0), Q(0), Q(-1), Q(0),
       Q(0), Q(0), Q(0), Q(-1),
       Q(1), Q(0), Q(0), Q(0),
       Q(0), Q(1), Q(0), Q(0);
  const auto jbad = J4::from_matrix(m);  // Jf1 = f3, Jf3 = -f1
  CHECK(!chart_data(jbad, 1, 3).valid);
  CHECK_THROWS_AS(lambda_minus_plucker(jbad, 1, 3), InvalidChartError);
  CHECK(lambda_minus_plucker(jbad, 1, 2) == lambda_minus_forms(jbad));
}

TEST_CASE("the chart formula equals the eigenprojector on every valid chart, random J") {
  Rng rng(127);
  int checked = 0;
  for (int t = 0; t < 100; ++t) {
    const auto j = random_acs(4, rng);
    const auto minus = lambda_minus_forms(j);
    bool some_chart = false;
    for (int ci = 1; ci <= 4; ++ci)
      for (int cj = ci + 1; cj <= 4; ++cj) {
        // chart validity is exactly the independence of {f_i, Jf_i, f_j, Jf_j}
        Mat<Q> frame(4, 4);
        frame.col(0) = Vec<Q>::Unit(4, ci - 1);
        frame.col(1) = j.matrix().col(ci - 1);
        frame.col(2) = Vec<Q>::Unit(4, cj - 1);
        frame.col(3) = j.matrix().col(cj - 1);
        CHECK(chart_data(j, ci, cj).valid == (rank(frame) == 4));
        if (!chart_data(j, ci, cj).valid) continue;
        some_chart = true;
        ++checked;
        CHECK(lambda_minus_plucker(j, ci, cj) == minus);
      }
    CHECK(some_chart);  // the charts cover the space of J
  }
  CHECK(checked >= 100);
}

TEST_CASE("the j_ab family has its closed-form Lambda^- span") {
  for (auto [a, b] : std::initializer_list<std::pair<Q, Q>>{
           {Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}, {Q(2), Q(-3)},
           {Q(BigInt(1), BigInt(2)), Q(BigInt(1), BigInt(3))}}) {
    const auto j = j_ab(a, b);
    const Q a2b2 = a * a + b * b;
    KForm<Q> gen1(4, 2);
    gen1.add_term({3, 4}, a);
    gen1.add_term({1, 2}, -a);
    gen1.add_term({2, 3}, -b);
    gen1.add_term({1, 4}, b);
    gen1.add_term({1, 3}, a2b2);
    KForm<Q> gen2(4, 2);
    gen2.add_term({2, 3}, a);
    gen2.add_term({1, 4}, -a);
    gen2.add_term({3, 4}, b);
    gen2.add_term({1, 2}, -b);
    const auto expected = Subspace<KForm<Q>>::span(4, 2, {gen1, gen2});
    CHECK(lambda_minus_forms(j) == expected);
    CHECK(lambda_minus_plucker(j, 1, 3) == expected);
    // Lambda^- is closed: the sufficient integrability criterion fires
    CHECK(cocycles(nil3xR(), 2).contains(lambda_minus_forms(j)));
    CHECK(integrable_sufficient(nil3xR(), j));
    CHECK(is_integrable(nil3xR(), j));
  }
}

TEST_CASE("Nijenhuis tensor on the block-rotation fixture") {
  const auto g = nil3xR();
  const auto j = standard_j();
  CHECK(nijenhuis(g, j, basis_vector(g, 1), basis_vector(g, 3)) == basis_vector(g, 2));
  CHECK(!is_integrable(g, j));
  CHECK(!integrable_sufficient(g, j));  // f^13 - f^24 is not closed
  // bilinear and antisymmetric
  Rng rng(131);
  for (int t = 0; t < 30; ++t) {
    KVector<Q> u(4, 1), v(4, 1);
    for (int i = 1; i <= 4; ++i) {
      u.add_term({i}, rng.rational());
      v.add_term({i}, rng.rational());
    }
    CHECK(nijenhuis(g, j, u, v) == -nijenhuis(g, j, v, u));
    CHECK(nijenhuis(g, j, u + v, v) == nijenhuis(g, j, u, v) + nijenhuis(g, j, v, v));
  }
  // abelian: every J integrable
  Rng rng2(137);
  for (int t = 0; t < 20; ++t) CHECK(is_integrable(abelian(), random_acs(4, rng2)));
  for (int t = 0; t < 5; ++t) CHECK(integrable_sufficient(abelian(), random_acs(4, rng2)));
}

TEST_CASE("integrable_sufficient implies is_integrable on random instances") {
  Rng rng(139);
  const auto algebras = {nil3xR(), abelian()};
  for (const auto& g : algebras)
    for (int t = 0; t < 40; ++t) {
      const auto j = random_acs(4, rng);
      if (integrable_sufficient(g, j)) CHECK(is_integrable(g, j));
    }
}

TEST_CASE("hermitian data: block-rotation J with the Euclidean metric") {
  const auto j = standard_j();
  const auto h = InnerProduct<Q>::euclidean(4);
  const auto data = hermitian_data(j, h);
  CHECK((data.metric.gram() - Mat<Q>::Identity(4, 4)).isZero(Q(0)));  // already Hermitian
  CHECK(data.fundamental_form == f2({{{1, 2}, 1}, {{3, 4}, 1}}));
  // phi ^ phi = 2 eta for the unit-volume pair
  const auto sq = wedge(data.fundamental_form, data.fundamental_form);
  CHECK(sq == f2({{{1, 2, 3, 4}, 2}}));
  // symmetrization is idempotent
  const auto again = hermitian_data(j, data.metric);
  CHECK((again.metric.gram() - data.metric.gram()).isZero(Q(0)));
  // phi is J-invariant and the metric is J-Hermitian
  CHECK(act_on_2forms(j, data.fundamental_form) == data.fundamental_form);
  Rng rng(149);
  for (int t = 0; t < 25; ++t) {
    const auto jr = random_acs(4, rng);
    Mat<Q> gram = rng.matrix(4, 4, 2, 1);
    gram = Mat<Q>(gram.transpose() * gram) + Mat<Q>(Q(5) * Mat<Q>::Identity(4, 4));
    const auto hd = hermitian_data(jr, InnerProduct<Q>(gram));
    const Mat<Q>& s = hd.metric.gram();
    CHECK((jr.matrix().transpose() * s * jr.matrix() - s).isZero(Q(0)));
    CHECK(lambda_plus_forms(jr).contains_element(hd.fundamental_form));
  }
}

TEST_CASE("taming and compatibility on the reference pair") {
  const auto g = nil3xR();
  const auto j = standard_j();
  const auto omega = f2({{{1, 2}, 1}, {{3, 4}, 1}});
  CHECK(is_tamed_by(g, j, omega));
  CHECK(is_compatible_with(g, j, omega));
  // f^12 - f^34 is negative on f_3 ^ Jf_3
  CHECK(!is_tamed_by(g, j, f2({{{1, 2}, 1}, {{3, 4}, -1}})));
  // anti-invariant forms never tame: beta(v, Jv) = 0
  Rng rng(151);
  for (int t = 0; t < 30; ++t) {
    const auto jr = random_acs(4, rng);
    const auto minus = lambda_minus_forms(jr);
    for (const auto& beta : minus.basis()) {
      CHECK(!is_tamed_by(g, jr, beta));
      for (int i = 1; i <= 4; ++i) {
        KVector<Q> v(4, 1);
        v.add_term({i}, Q(1));
        CHECK(evaluate(wedge(v, jr.apply(v)), beta) == Q(0));
      }
    }
  }
}

TEST_CASE("positive vectors: v ^ Jv is simple with nonnegative wedge square") {
  const auto o = Orientation<Q>::standard(4);
  Rng rng(157);
  for (int t = 0; t < 100; ++t) {
    const auto j = random_acs(4, rng);
    KVector<Q> v(4, 1);
    for (int i = 1; i <= 4; ++i) v.add_term({i}, rng.rational());
    if (v.is_zero()) continue;
    const auto pos = wedge(v, j.apply(v));
    CHECK(is_simple(pos));
    CHECK(phi_eta(o, pos, pos) == Q(0));
    // convex combinations of positive vectors have nonnegative wedge square
    KVector<Q> w(4, 1);
    for (int i = 1; i <= 4; ++i) w.add_term({i}, rng.rational());
    const auto combo = pos + wedge(w, j.apply(w));
    CHECK(phi_eta(o, combo, combo) >= Q(0));
  }
}

TEST_CASE("random_acs satisfies both structure invariants and varies with the seed") {
  const auto o = Orientation<Q>::standard(4);
  Rng rng(163);
  int distinct = 0;
  auto prev = standard_j();
  for (int t = 0; t < 100; ++t) {
    const auto j = random_acs(4, rng);
    CHECK((j.matrix() * j.matrix() + Mat<Q>::Identity(4, 4)).isZero(Q(0)));
    CHECK(orientation_sign(o, j) == 1);
    if (!(j == prev)) ++distinct;
    prev = j;
  }
  CHECK(distinct >= 95);
}
