#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>

#include "petit/ring/concepts.hpp"
#include "petit/util/error.hpp"

namespace petit {

namespace detail {

// Laplace expansion along the first remaining row, memoized on the set of
// remaining columns.
template <CoefficientRing R>
typename R::Element laplace(const R& ring, const Matrix<typename R::Element>& m, std::size_t row,
                            std::uint32_t cols, std::unordered_map<std::uint32_t, typename R::Element>& memo) {
  const std::size_t n = m.size();
  if (row == n) return ring.one();
  if (auto it = memo.find(cols); it != memo.end()) return it->second;
  auto acc = ring.zero();
  bool negative = false;
  for (std::size_t j = 0; j < n; ++j) {
    if (!(cols & (1u << j))) continue;
    if (!ring.is_zero(m[row][j])) {
      auto term = ring.mul(m[row][j], laplace(ring, m, row + 1, cols & ~(1u << j), memo));
      acc = negative ? ring.sub(acc, term) : ring.add(acc, term);
    }
    negative = !negative;
  }
  memo.emplace(cols, acc);
  return acc;
}

}  // namespace detail

/// Determinant over a commutative coefficient ring. Elimination proceeds with
/// unit pivots; once a column has nonzero entries but no unit among them the
/// remaining block is finished by memoized cofactor expansion, so the result
/// is exact over fields, domains and finite rings with zero divisors alike.
template <CoefficientRing R>
typename R::Element det_exact(const R& ring, Matrix<typename R::Element> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ShapeMismatch("determinant of a non-square matrix");
  if (!ring.is_commutative()) throw UnsupportedCoefficientRing("determinant needs a commutative ring");
  auto det = ring.one();
  std::size_t k = 0;
  for (; k < n; ++k) {
    std::size_t piv = n;
    std::optional<typename R::Element> inv;
    bool any_nonzero = false;
    for (std::size_t i = k; i < n && piv == n; ++i) {
      if (ring.is_zero(m[i][k])) continue;
      any_nonzero = true;
      inv = ring.inverse(m[i][k]);
      if (inv) piv = i;
    }
    if (!any_nonzero) return ring.zero();
    if (piv == n) break;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      det = ring.neg(det);
    }
    det = ring.mul(det, m[k][k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (ring.is_zero(m[i][k])) continue;
      auto factor = ring.mul(m[i][k], *inv);
      for (std::size_t j = k; j < n; ++j) m[i][j] = ring.sub(m[i][j], ring.mul(factor, m[k][j]));
    }
  }
  if (k == n) return det;
  if (n - k > 24) throw BudgetExceeded("cofactor expansion on a block larger than 24");
  Matrix<typename R::Element> block(n - k, std::vector<typename R::Element>(n - k, ring.zero()));
  for (std::size_t i = k; i < n; ++i)
    for (std::size_t j = k; j < n; ++j) block[i - k][j - k] = m[i][j];
  std::unordered_map<std::uint32_t, typename R::Element> memo;
  const std::uint32_t all = static_cast<std::uint32_t>((1ull << (n - k)) - 1);
  return ring.mul(det, detail::laplace(ring, block, 0, all, memo));
}

/// Reference determinant by the Leibniz permutation expansion (n <= 8).
template <CoefficientRing R>
typename R::Element det_permutation(const R& ring, const Matrix<typename R::Element>& m) {
  const std::size_t n = m.size();
  if (n > 8) throw BudgetExceeded("permutation expansion limited to 8x8");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  auto acc = ring.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = ring.one();
    for (std::size_t i = 0; i < n; ++i) term = ring.mul(term, m[i][perm[i]]);
    acc = inversions % 2 ? ring.sub(acc, term) : ring.add(acc, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace petit
