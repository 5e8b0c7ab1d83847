#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "petit/exact/bigint.hpp"

namespace petit {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  bool is_diagonal() const;
  /// Determinant by fraction-free elimination; requires a square matrix.
  BigInt determinant() const;

  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  /// row[dst] += k * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  /// col[dst] += k * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k);
  void negate_row(std::size_t i);
  void negate_col(std::size_t i);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct SmithForm {
  IntMatrix U;     ///< unimodular, rows x rows
  IntMatrix D;     ///< diagonal, d_1 | d_2 | ... , all d_i >= 0
  IntMatrix V;     ///< unimodular, cols x cols
  IntMatrix V_inv; ///< inverse of V

  /// Diagonal entries d_1 .. d_min(rows, cols).
  std::vector<BigInt> diagonal() const;
};

/// Smith normal form U * M * V = D with exact pivoting and explicit
/// transformation tracking.
SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace petit
