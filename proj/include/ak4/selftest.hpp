#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ak4/io.hpp"

namespace ak4 {

struct CriterionResult {
  int number = 0;
  std::string label;
  bool passed = false;
  std::string detail;  // first failure, empty when passed
};

namespace selftest_detail {

using Q = Rational;

class Checker {
public:
  void require(bool condition, const std::string& message) {
    ++count_;
    if (!condition && detail_.empty()) detail_ = message;
    ok_ = ok_ && condition;
  }
  bool ok() const { return ok_; }
  int count() const { return count_; }
  std::string detail() const { return detail_; }

private:
  bool ok_ = true;
  int count_ = 0;
  std::string detail_;
};

inline KForm<Q> form2(std::initializer_list<std::pair<std::initializer_list<int>, int>> terms) {
  KForm<Q> f(4, 2);
  for (const auto& [idx, c] : terms) f.add_term(idx, Q(c));
  return f;
}

template <typename Rng>
KForm<Q> random_form(Rng& rng, int k) {
  KForm<Q> f(4, k);
  for (MultiIndex I : index_basis(4, k)) f.add_term(I.indices(), rng.rational());
  return f;
}

template <typename Rng>
KVector<Q> random_vector(Rng& rng, int k) {
  KVector<Q> v(4, k);
  for (MultiIndex I : index_basis(4, k)) v.add_term(I.indices(), rng.rational());
  return v;
}

inline bool valid_obstruction(const LieAlgebra<Q>& g, const AlmostComplexStructure<Q>& j,
                              const KVector<Q>& v) {
  if (v.is_zero() || v.grade() != 1) return false;
  const auto vjv = wedge(v, j.apply(v));
  if (vjv.is_zero() || !boundaries(g, 2).contains_element(vjv)) return false;
  const auto Z = cocycles(g, 2);
  for (const auto& z : Z.basis())
    if (!(evaluate(vjv, z) == Q(0))) return false;
  return true;
}

// ---- criterion 1: the block-rotation fixture on nil3xR ----
inline void criterion_fixture(Checker& c) {
  const auto& entry = catalog_get<Q>("nil3xR");
  const auto o = Orientation<Q>::standard(4);
  const auto j = family_j(entry, "J_std", {});
  const auto cls = classify(entry.algebra, o, j);
  c.require(cls.tamed, "fixture must be tamed");
  c.require(cls.almost_kahler, "fixture must be almost Kaehler");
  c.require(cls.report.h_plus == 3, "h+ must be 3");
  c.require(cls.report.h_minus == 1, "h- must be 1");
  c.require(cls.report.b_plus == 2, "b+ must be 2");
  c.require(cls.report.b2 == 4, "b2 must be 4");
  const auto B = coboundaries(entry.algebra, 2);
  auto modulo_B = [&](const std::vector<KForm<Q>>& forms) {
    auto gens = B.basis();
    gens.insert(gens.end(), forms.begin(), forms.end());
    return Subspace<KForm<Q>>::span(4, 2, gens);
  };
  c.require(modulo_B(cls.report.h_plus_reps) ==
                modulo_B({form2({{{1, 2}, 1}}), form2({{{3, 4}, 1}}),
                          form2({{{1, 4}, 1}, {{2, 3}, -1}})}),
            "H+ representative span must match {f^12, f^34, f^14 - f^23} mod B");
  c.require(modulo_B(cls.report.h_minus_reps) == modulo_B({form2({{{1, 4}, 1}, {{2, 3}, 1}})}),
            "H- representative span must match {f^14 + f^23} mod B");
}

// ---- criterion 2: exact cone region grid on the fixture ----
inline void criterion_cone_grid(Checker& c) {
  const auto& entry = catalog_get<Q>("nil3xR");
  const auto o = Orientation<Q>::standard(4);
  const auto j = family_j(entry, "J_std", {});
  const auto rep = j_cohomology(entry.algebra, o, j);
  Mat<Q> reps(6, rep.h_plus);
  for (int i = 0; i < rep.h_plus; ++i) reps.col(i) = rep.h_plus_reps[i].coords();

  std::vector<Q> axis;
  for (int den : {1, 2})
    for (int num = -4; num <= 4; ++num) {
      const Q v = Q(BigInt(num), BigInt(den));
      if (std::find(axis.begin(), axis.end(), v) == axis.end()) axis.push_back(v);
    }
  int points = 0;
  for (const Q& a : axis)
    for (const Q& b : axis)
      for (const Q& cc : axis) {
        const KForm<Q> target = a * form2({{{1, 2}, 1}}) + b * form2({{{3, 4}, 1}}) +
                                cc * form2({{{1, 4}, 1}, {{2, 3}, -1}});
        const auto x = solve(reps, target.coords());
        if (!x) {
          c.require(false, "natural-basis class not representable in emitted basis");
          return;
        }
        std::vector<Q> coords{(*x)(0), (*x)(1), (*x)(2)};
        const bool expected = a > Q(0) && b > Q(0) && a * b - cc * cc > Q(0);
        const auto verdict = cone_membership(entry.algebra, o, j, coords);
        c.require(verdict.in_compatible_cone == expected,
                  "cone grid mismatch at (" + a.str() + "," + b.str() + "," + cc.str() + ")");
        c.require(verdict.in_tamed_cone == expected,
                  "tamed-cone grid mismatch for pure H+ classes");
        ++points;
      }
  c.require(points == 13 * 13 * 13, "grid must enumerate all 2197 rational points");
}

// ---- criterion 3: the J_ab family ----
inline void criterion_j_ab(Checker& c) {
  const auto& entry = catalog_get<Q>("nil3xR");
  const auto o = Orientation<Q>::scaled(4, Q(-1));  // J_ab induces the reversed orientation
  const auto Z = cocycles(entry.algebra, 2);
  const std::vector<std::pair<Q, Q>> params = {
      {Q(1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(1)}, {Q(2), Q(-3)},
      {Q(BigInt(1), BigInt(2)), Q(BigInt(1), BigInt(3))}};
  for (const auto& [a, b] : params) {
    const auto j = family_j(entry, "J_ab", {a, b});
    KForm<Q> gen1(4, 2);
    gen1.add_term({3, 4}, a);
    gen1.add_term({1, 2}, -a);
    gen1.add_term({2, 3}, -b);
    gen1.add_term({1, 4}, b);
    gen1.add_term({1, 3}, a * a + b * b);
    KForm<Q> gen2(4, 2);
    gen2.add_term({2, 3}, a);
    gen2.add_term({1, 4}, -a);
    gen2.add_term({3, 4}, b);
    gen2.add_term({1, 2}, -b);
    const auto minus = lambda_minus_forms(j);
    c.require(minus == Subspace<KForm<Q>>::span(4, 2, {gen1, gen2}),
              "Lambda^- must equal the closed-form span for J_ab");
    c.require(Z.contains(minus), "Lambda^-_{J_ab} must consist of closed forms");
    const auto cls = classify(entry.algebra, o, j);
    c.require(!cls.tamed, "J_ab must not be tamed");
    c.require(cls.integrable, "J_ab must be integrable");
    c.require(cls.obstruction.has_value() &&
                  valid_obstruction(entry.algebra, j, *cls.obstruction),
              "J_ab obstruction certificate must verify");
  }
}

// ---- criterion 4: the J_t family ----
inline void criterion_j_t(Checker& c) {
  const auto& entry = catalog_get<Q>("nil4");
  const auto o = Orientation<Q>::standard(4);
  const Q half(BigInt(1), BigInt(2));
  const Q three_quarters(BigInt(3), BigInt(4));
  for (const Q& t : {Q(0), half, -half, three_quarters, -three_quarters}) {
    const auto j = family_j(entry, "J_t", {t});
    const auto anti = form2({{{1, 4}, 1}, {{2, 3}, 1}});
    c.require(lambda_minus_forms(j).contains_element(anti),
              "f^14 + f^23 must be J_t-anti-invariant");
    c.require(cocycles(entry.algebra, 2).contains_element(anti), "f^14 + f^23 must be closed");
    const auto cls = classify(entry.algebra, o, j);
    c.require(cls.report.b_plus == 1, "nil4 must have b+ = 1");
    c.require(!cls.tamed, "J_t must not be tamed");
  }
}

// ---- criteria 5-7: randomized sweeps over all catalog algebras ----
inline void criterion_decomposition_sweep(Checker& c, std::uint64_t seed) {
  const auto o = Orientation<Q>::standard(4);
  for (const auto& entry : catalog<Q>()) {
    Rng rng(seed ^ std::hash<std::string>{}(entry.name));
    const int b2 = betti(entry.algebra, 2);
    const int bp = b_plus(entry.algebra, o);
    for (int t = 0; t < 100; ++t) {
      const auto j = random_acs(4, rng);
      try {
        const auto rep = j_cohomology(entry.algebra, o, j);  // internal checks run inside
        c.require(rep.h_plus + rep.h_minus == b2, "h+ + h- must equal b2 on " + entry.name);
        c.require(rep.h_minus == bp || rep.h_minus == bp - 1,
                  "h- must be b+ or b+ - 1 on " + entry.name);
      } catch (const std::logic_error& e) {
        c.require(false, std::string("decomposition check threw: ") + e.what());
        return;
      }
    }
  }
}

inline void criterion_criteria_agreement(Checker& c, std::uint64_t seed) {
  const auto o = Orientation<Q>::standard(4);
  for (const auto& entry : catalog<Q>()) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ULL + std::hash<std::string>{}(entry.name)));
    for (int t = 0; t < 100; ++t) {
      const auto j = random_acs(4, rng);
      const auto rep = j_cohomology(entry.algebra, o, j);
      const bool cohomological = (rep.h_minus == rep.b_plus - 1);
      const bool linear = (rep.invariant_exact.dimension() == 0);
      const bool oracle = feasibility_oracle(entry.algebra, o, j, 12, rng.raw());
      c.require(cohomological == linear,
                "cohomological and linear tameness criteria must agree on " + entry.name);
      c.require(cohomological == oracle, "feasibility oracle must agree on " + entry.name);
      if (!cohomological) {
        const auto v = obstruction_vector(entry.algebra, o, j);
        c.require(valid_obstruction(entry.algebra, j, v),
                  "obstruction certificate must verify on " + entry.name);
      }
    }
  }
}

inline void criterion_bplus_branches(Checker& c, std::uint64_t seed) {
  const auto o = Orientation<Q>::standard(4);
  // b+ = 3: every J tamed (and integrable on the abelian algebra)
  {
    const auto& entry = catalog_get<Q>("r4");
    Rng rng(seed ^ 0xabcdULL);
    for (int t = 0; t < 100; ++t) {
      const auto cls = classify(entry.algebra, o, random_acs(4, rng));
      c.require(cls.tamed, "every J on R^4 must be tamed");
      c.require(cls.integrable, "every J on R^4 must be integrable");
      c.require(cls.report.h_minus == 2, "h- must be 2 when b+ = 3");
    }
  }
  // b+ = 2: tamed XOR (Lambda^- closed)
  {
    const auto& entry = catalog_get<Q>("nil3xR");
    Rng rng(seed ^ 0xbcdeULL);
    for (int t = 0; t < 100; ++t) {
      const auto j = random_acs(4, rng);
      const auto cls = classify(entry.algebra, o, j);
      const bool minus_closed = cocycles(entry.algebra, 2).contains(lambda_minus_forms(j));
      c.require(cls.tamed != minus_closed, "b+ = 2: tamed must be exclusive with Lambda^- in Z");
    }
  }
  // b+ = 1: not tamed forces Lambda^- cap Z != 0
  {
    const auto& entry = catalog_get<Q>("nil4");
    Rng rng(seed ^ 0xcdefULL);
    for (int t = 0; t < 100; ++t) {
      const auto j = random_acs(4, rng);
      const auto cls = classify(entry.algebra, o, j);
      if (!cls.tamed)
        c.require(
            intersection(cocycles(entry.algebra, 2), lambda_minus_forms(j)).dimension() > 0,
            "b+ = 1: a non-tamed J needs a closed anti-invariant form");
    }
  }
}

// ---- criterion 8: closed/exact dimension arithmetic ----
inline void criterion_dimension_arithmetic(Checker& c, std::uint64_t seed) {
  const auto o = Orientation<Q>::standard(4);
  for (const auto& entry : catalog<Q>()) {
    const auto Z = cocycles(entry.algebra, 2);
    const auto B = coboundaries(entry.algebra, 2);
    const int bp = b_plus(entry.algebra, o);
    c.require(Z.dimension() == bp + 3, "dim Z must be b+ + 3 on " + entry.name);
    c.require(B.dimension() == 3 - bp, "dim B must be 3 - b+ on " + entry.name);
    for (const auto& x : B.basis())
      for (const auto& y : B.basis())
        c.require(phi_zeta(o, x, y) == Q(0), "B must be wedge-isotropic on " + entry.name);
    Rng rng(seed ^ (0x1234ULL + std::hash<std::string>{}(entry.name)));
    for (int t = 0; t < 20; ++t) {
      const auto j = random_acs(4, rng);
      const auto plus = lambda_plus_forms(j);
      const auto minus = lambda_minus_forms(j);
      c.require(intersection(plus, Z).dimension() == bp + 1,
                "dim(Lambda^+ cap Z) must be b+ + 1 on " + entry.name);
      c.require(intersection(plus, B).dimension() <= 1,
                "dim(Lambda^+ cap B) must be <= 1 on " + entry.name);
      c.require(intersection(minus, B).dimension() == 0,
                "B cap Lambda^- must vanish on " + entry.name);
    }
  }
}

// ---- criterion 9: structural identity suites, >= 500 cases each ----
inline void criterion_structural(Checker& c, std::uint64_t seed) {
  const auto o = Orientation<Q>::standard(4);
  const auto h = InnerProduct<Q>::euclidean(4);
  std::vector<LieAlgebra<Q>> algebras;
  for (const auto& e : catalog<Q>()) algebras.push_back(e.algebra);
  Rng rng(seed ^ 0x57ac7ULL);

  for (int t = 0; t < 500; ++t) {
    const auto& g = algebras[t % algebras.size()];
    const int k = t % 3;  // d^2 defined for k <= 2
    const auto alpha = random_form(rng, k);
    c.require(ce_d(g, ce_d(g, alpha)).is_zero(), "d^2 = 0");
    const auto w = random_vector(rng, k + 2);
    c.require(boundary(g, boundary(g, w)).is_zero(), "boundary^2 = 0");
    const auto phi = random_form(rng, k + 1);
    const auto v = random_vector(rng, k + 2);
    Q rhs = evaluate(v, ce_d(g, phi));
    if ((k + 2) % 2 == 0) rhs = -rhs;
    c.require(evaluate(boundary(g, v), phi) == rhs, "adjointness of d and boundary");
  }

  for (int t = 0; t < 500; ++t) {
    const int k = t % 5;
    const auto u = random_vector(rng, k);
    c.require(g_zeta(o, g_eta(o, u)) == u, "G_zeta . G_eta = id");
    const auto a = random_form(rng, 2);
    const auto b = random_form(rng, 2);
    c.require(phi_eta(o, g_zeta(o, a), g_zeta(o, b)) == phi_zeta(o, b, a), "g_zeta intertwines the two wedge pairings");
    c.require(phi_zeta(o, a, b) == phi_zeta(o, hodge_star(h, o, a), hodge_star(h, o, b)),
              "star isometry of the wedge pairing");
    const auto u2 = random_vector(rng, 2);
    const bool simple = wedge(u2, u2).is_zero();
    c.require(is_simple(u2) == simple, "is_simple iff u ^ u = 0");
  }

  // signature of Lambda^2(g*) under random bases
  int done = 0;
  while (done < 500) {
    Mat<Q> p = rng.matrix(6, 6, 2, 1);
    if (rank(p) != 6) continue;
    ++done;
    std::vector<KForm<Q>> gens;
    for (int col = 0; col < 6; ++col) gens.push_back(KForm<Q>::from_coords(4, 2, p.col(col)));
    c.require(signature(o, Subspace<KForm<Q>>::span(4, 2, gens)) == SignatureReport{3, 3, 0},
              "signature of Lambda^2 must be (3,3,0)");
  }

  for (int t = 0; t < 500; ++t) {
    const auto j = random_acs(4, rng);
    c.require(signature(o, lambda_minus_forms(j)) == SignatureReport{2, 0, 0},
              "Lambda^-_J must be positive definite");
    c.require(signature(o, lambda_plus_forms(j)) == SignatureReport{1, 3, 0},
              "Lambda^+_J must have signature (1,3)");
    // anti-invariant forms vanish on positive bivectors
    const auto beta = lambda_minus_forms(j).basis()[t % 2];
    const auto v = random_vector(rng, 1);
    c.require(evaluate(wedge(v, j.apply(v)), beta) == Q(0),
              "anti-invariant forms vanish on v ^ Jv");
    // the chart formula equals the eigenprojector on a valid chart
    bool found = false;
    for (int ci = 1; ci <= 4 && !found; ++ci)
      for (int cj = ci + 1; cj <= 4 && !found; ++cj)
        if (chart_data(j, ci, cj).valid) {
          found = true;
          c.require(lambda_minus_plucker(j, ci, cj) == lambda_minus_forms(j),
                    "chart formula must match the eigenprojector");
        }
    c.require(found, "some chart must cover every J");
  }
}

// ---- criterion 10: Hodge suite ----
inline void criterion_hodge(Checker& c, std::uint64_t seed) {
  const auto o = Orientation<Q>::standard(4);
  const auto h = InnerProduct<Q>::euclidean(4);
  Rng rng(seed ^ 0x40d6eULL);
  for (const auto& entry : catalog<Q>()) {
    const auto& g = entry.algebra;
    for (int p = 0; p <= 4; ++p)
      c.require(harmonic_space(h, o, g, p).dimension() == betti(g, p),
                "dim harmonic = betti on " + entry.name);
    for (int t = 0; t < 50; ++t) {
      const int p = 1 + t % 4;
      const auto alpha = random_form(rng, p - 1);
      const auto beta = random_form(rng, p);
      c.require(form_inner(h, ce_d(g, alpha), beta) ==
                    form_inner(h, alpha, codifferential(h, o, g, beta)),
                "<d a, b> = <a, delta b> on " + entry.name);
    }
    for (int t = 0; t < 25; ++t) {
      const auto alpha = sd_asd_split(h, o, random_form(rng, 2)).first;
      const auto parts = hodge_decompose(h, o, g, alpha);
      const auto dl = sd_asd_split(h, o, parts.exact);
      const auto de = sd_asd_split(h, o, parts.coexact);
      c.require(dl.first == de.first, "(d lambda)+ = (delta mu)+ on " + entry.name);
      c.require(dl.second == -de.second, "(d lambda)- = -(delta mu)- on " + entry.name);
      c.require(alpha - Q(2) * dl.first == parts.harmonic,
                "alpha - 2(d lambda)+ = harmonic on " + entry.name);
      c.require(alpha + Q(2) * dl.second == parts.harmonic + Q(2) * parts.exact,
                "alpha + 2(d lambda)- = harmonic + 2 d lambda on " + entry.name);
    }
  }
}

// ---- criterion 11: negative controls ----
inline void criterion_negative_controls(Checker& c) {
  const auto o = Orientation<Q>::standard(4);
  const auto j = detail::make_j_std<Q>({});
  const auto aff = LieAlgebra<Q>(4, {{1, 2, 2, Q(1)}});
  bool rejected = false;
  try {
    classify(aff, o, j);
  } catch (const NotUnimodularError&) {
    rejected = true;
  }
  c.require(rejected, "classify must reject the non-unimodular algebra");

  bool jacobi_rejected = false;
  try {
    LieAlgebra<Q>(4, {{1, 2, 1, Q(1)}, {1, 3, 2, Q(1)}});
  } catch (const JacobiError&) {
    jacobi_rejected = true;
  }
  c.require(jacobi_rejected, "construction must reject a Jacobi-violating table");

  bool orientation_rejected = false;
  try {
    classify(catalog_get<Q>("nil3xR").algebra, o, detail::make_j_ab<Q>({Q(1), Q(0)}));
  } catch (const OrientationMismatchError&) {
    orientation_rejected = true;
  }
  c.require(orientation_rejected, "classify must reject orientation_sign = -1 inputs");
}

}  // namespace selftest_detail

/// Runs the acceptance criteria; one result per criterion, exact checks only.
inline std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 0x5eedULL) {
  using namespace selftest_detail;
  std::vector<std::pair<std::string, std::function<void(Checker&)>>> suite = {
      {"nil3xR block-rotation fixture: verdict, dimensions, representative spans",
       [](Checker& c) { criterion_fixture(c); }},
      {"compatible-cone grid equals {a > 0, b > 0, ab - c^2 > 0} (2197 points)",
       [](Checker& c) { criterion_cone_grid(c); }},
      {"J_ab family: closed-form Lambda^- span, not tamed, integrable, certified",
       [](Checker& c) { criterion_j_ab(c); }},
      {"J_t family: closed anti-invariant form, b+ = 1, not tamed",
       [](Checker& c) { criterion_j_t(c); }},
      {"decomposition sweep: h+ + h- = b2 and the h- dichotomy, 100 J x 5 algebras",
       [=](Checker& c) { criterion_decomposition_sweep(c, seed); }},
      {"tameness criteria agree (cohomological, linear, oracle) with certificates",
       [=](Checker& c) { criterion_criteria_agreement(c, seed); }},
      {"b+ trichotomy branches for b+ = 3, 2, 1",
       [=](Checker& c) { criterion_bplus_branches(c, seed); }},
      {"dimension arithmetic: dim Z, dim B, isotropy, eigenspace intersections",
       [=](Checker& c) { criterion_dimension_arithmetic(c, seed); }},
      {"structural identity suites (d^2, adjoints, duality, signatures, charts)",
       [=](Checker& c) { criterion_structural(c, seed); }},
      {"Hodge suite: harmonic dimensions, adjointness, self-dual split identities",
       [=](Checker& c) { criterion_hodge(c, seed); }},
      {"negative controls: non-unimodular, Jacobi-violating, reversed orientation",
       [](Checker& c) { criterion_negative_controls(c); }},
  };
  std::vector<CriterionResult> results;
  int number = 1;
  for (auto& [label, run] : suite) {
    Checker checker;
    try {
      run(checker);
    } catch (const std::exception& e) {
      checker.require(false, std::string("unexpected exception: ") + e.what());
    }
    results.push_back({number++, label, checker.ok(), checker.detail()});
  }
  return results;
}

/// Prints one pass/fail line per criterion; returns overall success.
inline bool run_acceptance_verbose(std::ostream& out, std::uint64_t seed = 0x5eedULL) {
  bool all = true;
  for (const auto& r : run_acceptance(seed)) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.number << ": " << r.label;
    if (!r.passed) out << "  -- " << r.detail;
    out << "\n";
    all = all && r.passed;
  }
  out << (all ? "acceptance: all criteria passed\n" : "acceptance: FAILURES present\n");
  return all;
}

}  // namespace ak4
