#pragma once

#include <functional>
#include <map>
#include <string>

#include "ak4/tameness.hpp"

namespace ak4 {

/// One of the five unimodular symplectic 4-dimensional Lie algebras, with its
/// named J families and the invariants frozen as regression expectations.
/// b2 and b_plus for nil3xR and nil4 come from the source tables; the values
/// for sol3xR and r'_{3,0}xR were computed once with this library's own
/// cohomology (first computation is the oracle) and hand-audited against the
/// dimension arithmetic dim Z = b+ + 3.
template <typename S>
struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra<S> algebra;
  int expected_b2 = 0;
  int expected_b_plus = 0;
  bool expected_unimodular = true;
  /// Named J families; constructor validates parameter constraints.
  std::map<std::string, std::function<AlmostComplexStructure<S>(const std::vector<S>&)>> families;
};

namespace detail {

template <typename S>
AlmostComplexStructure<S> make_j_ab(const std::vector<S>& p) {
  if (p.size() != 2) throw DimensionMismatch("J_ab requires parameters (a, b)");
  const S &a = p[0], &b = p[1];
  if (a * a + b * b == S(0)) throw DimensionMismatch("J_ab requires a^2 + b^2 != 0");
  Mat<S> m(4, 4);
  m << S(0), S(0), S(-1), S(0),
       a, S(0), S(0) - b, S(-1),
       S(1), S(0), S(0), S(0),
       S(0) - b, S(1), S(0) - a, S(0);
  return AlmostComplexStructure<S>::from_matrix(m);
}

template <typename S>
AlmostComplexStructure<S> make_j_t(const std::vector<S>& p) {
  if (p.size() != 1) throw DimensionMismatch("J_t requires one parameter t");
  const S& t = p[0];
  if (!(t < S(1) && S(-1) < t)) throw DimensionMismatch("J_t requires |t| < 1");
  const S d = S(1) + t * t;
  Mat<S> m(4, 4);
  m << S(0), (t * t - S(1)) / d, S(2) * t / d, S(0),
      (S(1) - t * t) / d, S(0), S(0), S(-2) * t / d,
      S(-2) * t / d, S(0), S(0), (t * t - S(1)) / d,
      S(0), S(2) * t / d, (S(1) - t * t) / d, S(0);
  return AlmostComplexStructure<S>::from_matrix(m);
}

/// The block rotation: Jf1 = f2, Jf2 = -f1, Jf3 = f4, Jf4 = -f3.
template <typename S>
AlmostComplexStructure<S> make_j_std(const std::vector<S>& p) {
  if (!p.empty()) throw DimensionMismatch("J_std takes no parameters");
  Mat<S> m = Mat<S>::Zero(4, 4);
  m(1, 0) = S(1);
  m(0, 1) = S(-1);
  m(3, 2) = S(1);
  m(2, 3) = S(-1);
  return AlmostComplexStructure<S>::from_matrix(m);
}

}  // namespace detail

template <typename S>
const std::vector<CatalogEntry<S>>& catalog() {
  thread_local const std::vector<CatalogEntry<S>> entries = [] {
    std::vector<CatalogEntry<S>> out;
    out.push_back({"r4", "abelian R^4", LieAlgebra<S>(4, {}), 6, 3, true, {}});
    out.push_back({"nil3xR",
                   "nil^3 x R: [f1,f3] = f2",
                   LieAlgebra<S>(4, {{1, 3, 2, S(1)}}),
                   4,
                   2,
                   true,
                   {{"J_ab", detail::make_j_ab<S>}, {"J_std", detail::make_j_std<S>}}});
    out.push_back({"nil4",
                   "nil^4: [f4,f2] = f1, [f4,f3] = f2",
                   LieAlgebra<S>(4, {{2, 4, 1, S(-1)}, {3, 4, 2, S(-1)}}),
                   2,
                   1,
                   true,
                   {{"J_t", detail::make_j_t<S>}, {"J_std", detail::make_j_std<S>}}});
    out.push_back({"sol3xR",
                   "sol^3 x R: [f4,f1] = f1, [f2,f4] = f2",
                   LieAlgebra<S>(4, {{1, 4, 1, S(-1)}, {2, 4, 2, S(1)}}),
                   2,
                   1,
                   true,
                   {}});
    out.push_back({"r'30xR",
                   "r'_{3,0} x R: [f1,f3] = f2, [f2,f1] = f3",
                   LieAlgebra<S>(4, {{1, 2, 3, S(-1)}, {1, 3, 2, S(1)}}),
                   2,
                   1,
                   true,
                   {}});
    return out;
  }();
  return entries;
}

template <typename S>
std::vector<std::string> catalog_list() {
  std::vector<std::string> names;
  for (const auto& e : catalog<S>()) names.push_back(e.name);
  return names;
}

template <typename S>
const CatalogEntry<S>& catalog_get(const std::string& name) {
  for (const auto& e : catalog<S>())
    if (e.name == name) return e;
  throw std::invalid_argument("catalog: unknown algebra '" + name + "'");
}

/// Instantiates a named J family on a catalog entry.
template <typename S>
AlmostComplexStructure<S> family_j(const CatalogEntry<S>& entry, const std::string& family,
                                   const std::vector<S>& params) {
  auto it = entry.families.find(family);
  if (it == entry.families.end())
    throw std::invalid_argument("catalog: entry '" + entry.name + "' has no family '" + family +
                                "'");
  return it->second(params);
}

}  // namespace ak4
