#include "petit/exact/linalg.hpp"

#include <utility>

#include "petit/exact/modp_poly.hpp"
#include "petit/util/error.hpp"

namespace petit {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const BigRational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const BigRational k = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

std::optional<QVector> solve(const QMatrix& a, const QVector& b) {
  if (a.size() != b.size()) throw ShapeMismatch("solve: rows of A differ from length of b");
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  QMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == cols) return std::nullopt;
  QVector x(cols, BigRational(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][cols];
  return x;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
  const std::size_t n = a.size();
  QMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw ShapeMismatch("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(BigRational(i == j ? 1 : 0));
  }
  auto piv = rref(aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  QMatrix inv(n, QVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

QMatrix q_identity(std::size_t n) {
  QMatrix m(n, QVector(n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMatrix q_mul(const QMatrix& a, const QMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  QMatrix out(n, QVector(c, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

QVector q_apply(const QMatrix& a, const QVector& v) {
  QVector out(a.size(), BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

namespace {

std::vector<std::size_t> rref_mod_p(ModMatrix& m, std::size_t cols, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = m.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = mod_inverse(m[r][c] % p, p);
    for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] % p * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      const std::uint64_t k = m[i][c] % p;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] % p + p * p - k * m[r][j] % p) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(ModMatrix m, std::uint64_t p) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  return rref_mod_p(m, cols, p).size();
}

std::vector<std::vector<std::uint64_t>> kernel_mod_p(ModMatrix a, std::size_t cols, std::uint64_t p) {
  auto piv = rref_mod_p(a, cols, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = (p - a[r][free] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace petit
