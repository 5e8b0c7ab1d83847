#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "petit/exact/bigint.hpp"

namespace petit {

using QMatrix = std::vector<std::vector<BigRational>>;
using QVector = std::vector<BigRational>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(QMatrix& m);

std::size_t rank(QMatrix m);

/// Some x with A x = b, or nullopt when the system is inconsistent.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<QMatrix> inverse(const QMatrix& a);

QMatrix q_identity(std::size_t n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);
QVector q_apply(const QMatrix& a, const QVector& v);

/// Linear algebra over the prime field F_p on residues in [0, p).
using ModMatrix = std::vector<std::vector<std::uint64_t>>;

std::size_t rank_mod_p(ModMatrix m, std::uint64_t p);

/// Basis of the right kernel {x : A x = 0}.
std::vector<std::vector<std::uint64_t>> kernel_mod_p(ModMatrix a, std::size_t cols, std::uint64_t p);

}  // namespace petit
