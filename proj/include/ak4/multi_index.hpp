#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ak4/errors.hpp"

namespace ak4 {

/// Strictly increasing tuple of 1-based basis indices, stored as a bitmask
/// (bit i-1 set iff index i present). The canonical key of every exterior
/// algebra coefficient.
class MultiIndex {
public:
  static constexpr int max_dimension = 62;

  MultiIndex() = default;
  explicit MultiIndex(std::uint64_t mask) : mask_(mask) {}

  static MultiIndex from_indices(std::span<const int> sorted) {
    std::uint64_t mask = 0;
    int prev = 0;
    for (int i : sorted) {
      if (i <= prev || i > max_dimension)
        throw GradeError("MultiIndex: indices must be strictly increasing and in [1, 62]");
      mask |= std::uint64_t(1) << (i - 1);
      prev = i;
    }
    return MultiIndex(mask);
  }
  static MultiIndex from_indices(std::initializer_list<int> sorted) {
    return from_indices(std::span<const int>(sorted.begin(), sorted.size()));
  }

  std::uint64_t mask() const { return mask_; }
  int grade() const { return std::popcount(mask_); }
  bool contains(int index) const { return (mask_ >> (index - 1)) & 1; }
  bool fits_dimension(int n) const { return n >= 0 && (mask_ >> n) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(grade());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1)
      out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  MultiIndex complement(int n) const {
    return MultiIndex(~mask_ & ((std::uint64_t(1) << n) - 1));
  }

  /// Concatenated index string, e.g. "134" for f^{134}; "()" for grade 0.
  std::string str() const {
    if (mask_ == 0) return "()";
    std::string s;
    for (int i : indices()) s += std::to_string(i);
    return s;
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

  friend std::ostream& operator<<(std::ostream& os, const MultiIndex& I) { return os << I.str(); }

private:
  std::uint64_t mask_ = 0;
};

/// Sign of f^A wedge f^B as a reordering of the sorted union: 0 when the index
/// sets overlap, otherwise the parity of inversions between A and B.
inline int wedge_sign(MultiIndex A, MultiIndex B) {
  if (A.mask() & B.mask()) return 0;
  int inversions = 0;
  for (std::uint64_t m = B.mask(); m != 0; m &= m - 1) {
    const int pos = std::countr_zero(m);
    inversions += std::popcount(A.mask() >> (pos + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

inline MultiIndex disjoint_union(MultiIndex A, MultiIndex B) {
  return MultiIndex(A.mask() | B.mask());
}

/// Sorts an arbitrary index tuple; returns the canonical MultiIndex and the
/// permutation sign, or sign 0 on a repeated index.
inline std::pair<MultiIndex, int> sort_indices(std::span<const int> indices) {
  std::uint64_t mask = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > MultiIndex::max_dimension)
      throw GradeError("MultiIndex: index out of range");
    const std::uint64_t bit = std::uint64_t(1) << (i - 1);
    if (mask & bit) return {MultiIndex(), 0};
    // parity of already-placed indices greater than i
    if (std::popcount(mask >> i) & 1) sign = -sign;
    mask |= bit;
  }
  return {MultiIndex(mask), sign};
}

/// All grade-k multi-indices on [1..n] in lexicographic order; cached.
inline const std::vector<MultiIndex>& index_basis(int n, int k) {
  if (n < 0 || n > MultiIndex::max_dimension || k < 0 || k > n)
    throw GradeError("index_basis: need 0 <= k <= n");
  thread_local std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
  auto [it, inserted] = cache.try_emplace({n, k});
  if (inserted) {
    std::vector<int> tuple(k);
    for (int i = 0; i < k; ++i) tuple[i] = i + 1;
    while (true) {
      it->second.push_back(MultiIndex::from_indices(tuple));
      if (k == 0) break;
      int pos = k - 1;
      while (pos >= 0 && tuple[pos] == n - (k - 1 - pos)) --pos;
      if (pos < 0) break;
      ++tuple[pos];
      for (int q = pos + 1; q < k; ++q) tuple[q] = tuple[q - 1] + 1;
    }
  }
  return it->second;
}

/// Position of I in index_basis(n, I.grade()).
inline int index_position(int n, MultiIndex I) {
  const auto& basis = index_basis(n, I.grade());
  for (std::size_t p = 0; p < basis.size(); ++p)
    if (basis[p] == I) return static_cast<int>(p);
  throw GradeError("index_position: index does not fit dimension");
}

}  // namespace ak4
