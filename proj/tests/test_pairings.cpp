#include <doctest.h>

#include <random>

#include "ak4/pairings.hpp"
#include "ak4/rational.hpp"

using namespace ak4;
namespace {

using Q = Rational;

KForm<Q> f2(std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
  int k = terms.size() ? static_cast<int>(terms.begin()->first.size()) : 0;
  KForm<Q> f(4, k);
  for (const auto& [idx, c] : terms) f.add_term(idx, Q(c));
  return f;
}

KVector<Q> v2(std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
  int k = terms.size() ? static_cast<int>(terms.begin()->first.size()) : 0;
  KVector<Q> v(4, k);
  for (const auto& [idx, c] : terms) v.add_term(idx, Q(c));
  return v;
}

LieAlgebra<Q> nil3xR() { return LieAlgebra<Q>(4, {{1, 3, 2, Q(1)}}); }
LieAlgebra<Q> nil4() { return LieAlgebra<Q>(4, {{2, 4, 1, Q(-1)}, {3, 4, 2, Q(-1)}}); }
LieAlgebra<Q> sol3xR() { return LieAlgebra<Q>(4, {{1, 4, 1, Q(-1)}, {2, 4, 2, Q(1)}}); }
LieAlgebra<Q> r30xR() { return LieAlgebra<Q>(4, {{1, 2, 3, Q(-1)}, {1, 3, 2, Q(1)}}); }
LieAlgebra<Q> abelian() { return LieAlgebra<Q>(4, {}); }

template <typename Rng>
KForm<Q> random_form(Rng& rng, int k) {
  std::uniform_int_distribution<int> num(-3, 3);
  KForm<Q> f(4, k);
  for (MultiIndex I : index_basis(4, k)) f.add_term(I.indices(), Q(num(rng)));
  return f;
}

template <typename Rng>
KVector<Q> random_vector(Rng& rng, int k) {
  std::uniform_int_distribution<int> num(-3, 3);
  KVector<Q> v(4, k);
  for (MultiIndex I : index_basis(4, k)) v.add_term(I.indices(), Q(num(rng)));
  return v;
}

}  // namespace

TEST_CASE("orientation invariant evaluate(zeta, eta) = 1") {
  const auto o = Orientation<Q>::standard(4);
  CHECK(evaluate(o.zeta(), o.eta()) == Q(1));
  const auto flipped = Orientation<Q>::scaled(4, Q(-1));
  CHECK(evaluate(flipped.zeta(), flipped.eta()) == Q(1));
  KVector<Q> zeta(4, 4);
  zeta.add_term({1, 2, 3, 4}, Q(1));
  KForm<Q> eta(4, 4);
  eta.add_term({1, 2, 3, 4}, Q(2));
  CHECK_THROWS_AS(Orientation<Q>(zeta, eta), DimensionMismatch);
}

TEST_CASE("phi_zeta on basis pairs") {
  const auto o = Orientation<Q>::standard(4);
  CHECK(phi_zeta(o, f2({{{1, 2}, 1}}), f2({{{3, 4}, 1}})) == Q(1));
  CHECK(phi_zeta(o, f2({{{1, 2}, 1}}), f2({{{1, 2}, 1}})) == Q(0));
  CHECK(phi_zeta(o, f2({{{1, 3}, 1}}), f2({{{2, 4}, 1}})) == Q(-1));
  CHECK_THROWS_AS(phi_zeta(o, f2({{{1, 2}, 1}}), f2({{{1}, 1}})), GradeError);
}

TEST_CASE("g_eta on basis bivectors") {
  const auto o = Orientation<Q>::standard(4);
  CHECK(g_eta(o, v2({{{1, 2}, 1}})) == f2({{{3, 4}, 1}}));
  CHECK(g_eta(o, v2({{{1, 3}, 1}})) == f2({{{2, 4}, -1}}));
}

TEST_CASE("g_zeta and g_eta are mutually inverse in every grade") {
  std::mt19937_64 rng(17);
  for (const auto& o : {Orientation<Q>::standard(4), Orientation<Q>::scaled(4, Q(-1)),
                        Orientation<Q>::scaled(4, Q(3))})
    for (int k = 0; k <= 4; ++k)
      for (int trial = 0; trial < 30; ++trial) {
        const auto u = random_vector(rng, k);
        CHECK(g_zeta(o, g_eta(o, u)) == u);
        const auto a = random_form(rng, k);
        CHECK(g_eta(o, g_zeta(o, a)) == a);
      }
}

TEST_CASE("duality normalization: evaluate(g_zeta(alpha), beta) = evaluate(zeta, beta ^ alpha)") {
  std::mt19937_64 rng(19);
  const auto o = Orientation<Q>::standard(4);
  for (int k = 0; k <= 4; ++k)
    for (int trial = 0; trial < 40; ++trial) {
      const auto alpha = random_form(rng, 4 - k);
      const auto beta = random_form(rng, k);
      CHECK(evaluate(g_zeta(o, alpha), beta) == evaluate(o.zeta(), wedge(beta, alpha)));
    }
}

TEST_CASE("middle grade: g_zeta intertwines the pairings, Phi_eta(G a, G b) = Phi_zeta(b, a)") {
  std::mt19937_64 rng(29);
  const auto o = Orientation<Q>::standard(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_form(rng, 2);
    const auto b = random_form(rng, 2);
    CHECK(phi_eta(o, g_zeta(o, a), g_zeta(o, b)) == phi_zeta(o, b, a));
  }
}

TEST_CASE("signature of the full grade-2 wedge pairing is (3, 3, 0)") {
  const auto o = Orientation<Q>::standard(4);
  const auto full = Subspace<KForm<Q>>::full(4, 2);
  CHECK(signature(o, full) == SignatureReport{3, 3, 0});
  // invariance under a random change of subspace basis
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-2, 2);
  int done = 0;
  while (done < 25) {
    Mat<Q> p(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) p(i, j) = Q(num(rng));
    if (rank(p) != 6) continue;
    ++done;
    std::vector<KForm<Q>> gens;
    for (int c = 0; c < 6; ++c) gens.push_back(KForm<Q>::from_coords(4, 2, p.col(c)));
    CHECK(signature(o, Subspace<KForm<Q>>::span(4, 2, gens)) == SignatureReport{3, 3, 0});
  }
  // vector side too
  CHECK(signature(o, Subspace<KVector<Q>>::full(4, 2)) == SignatureReport{3, 3, 0});
}

TEST_CASE("coboundaries of nil3xR are isotropic: span{f^13} has signature (0,0,1)") {
  const auto o = Orientation<Q>::standard(4);
  const auto B = coboundaries(nil3xR(), 2);
  CHECK(signature(o, B) == SignatureReport{0, 0, 1});
}

TEST_CASE("b_plus on the catalog") {
  const auto o = Orientation<Q>::standard(4);
  CHECK(b_plus(nil3xR(), o) == 2);
  CHECK(b_plus(nil4(), o) == 1);
  CHECK(b_plus(abelian(), o) == 3);
  CHECK(b_plus(sol3xR(), o) == 1);
  CHECK(b_plus(r30xR(), o) == 1);
  // orientation flip leaves b_plus unchanged (signature on Z is (b+, b+, 3-b+))
  const auto neg = Orientation<Q>::scaled(4, Q(-1));
  CHECK(b_plus(nil3xR(), neg) == 2);
  CHECK(b_plus(nil4(), neg) == 1);
  const auto aff = LieAlgebra<Q>(4, {{1, 2, 2, Q(1)}});
  CHECK_THROWS_AS(b_plus(aff, o), NotUnimodularError);
}

TEST_CASE("g_eta maps cycles onto cocycles and boundaries onto coboundaries (unimodular)") {
  const auto o = Orientation<Q>::standard(4);
  for (const auto& g : {nil3xR(), nil4(), sol3xR(), r30xR(), abelian()})
    for (int k = 0; k <= 4; ++k) {
      const auto Zk = cycles(g, k);
      std::vector<KForm<Q>> images;
      for (const auto& u : Zk.basis()) images.push_back(g_eta(o, u));
      CHECK(Subspace<KForm<Q>>::span(4, 4 - k, images) == cocycles(g, 4 - k));
      const auto Bk = boundaries(g, k);
      std::vector<KForm<Q>> bimages;
      for (const auto& u : Bk.basis()) bimages.push_back(g_eta(o, u));
      CHECK(Subspace<KForm<Q>>::span(4, 4 - k, bimages) == coboundaries(g, 4 - k));
    }
}

TEST_CASE("Phi_zeta(cocycle, complementary coboundary) = 0 on unimodular algebras") {
  const auto o = Orientation<Q>::standard(4);
  for (const auto& g : {nil3xR(), nil4(), sol3xR(), r30xR()})
    for (int k = 0; k <= 4; ++k) {
      const auto Z = cocycles(g, k);
      const auto B = coboundaries(g, 4 - k);
      for (const auto& z : Z.basis())
        for (const auto& b : B.basis()) CHECK(phi_zeta(o, z, b) == Q(0));
    }
}
