#include "petit/exact/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "petit/util/error.hpp"

namespace petit {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (r.set_str(text, 10) != 0) throw ConfigError("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw ConfigError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeMismatch("ragged initializer for IntMatrix");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("IntMatrix product dimensions");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && (*this)(i, j) != 0) return false;
  return true;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw ShapeMismatch("determinant of a non-square IntMatrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const BigInt& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

void IntMatrix::negate_col(std::size_t i) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::vector<BigInt> SmithForm::diagonal() const {
  std::vector<BigInt> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

namespace {

// Working state: D is transformed in place; every row operation is mirrored
// on U and every column operation on V (and inversely on V_inv).
struct SmithWork {
  IntMatrix D, U, V, V_inv;

  void swap_rows(std::size_t i, std::size_t j) {
    D.swap_rows(i, j);
    U.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    D.swap_cols(i, j);
    V.swap_cols(i, j);
    V_inv.swap_rows(i, j);
  }
  void add_row(std::size_t dst, std::size_t src, const BigInt& k) {
    D.add_row_multiple(dst, src, k);
    U.add_row_multiple(dst, src, k);
  }
  void add_col(std::size_t dst, std::size_t src, const BigInt& k) {
    D.add_col_multiple(dst, src, k);
    V.add_col_multiple(dst, src, k);
    V_inv.add_row_multiple(src, dst, -k);
  }
  void negate_row(std::size_t i) {
    D.negate_row(i);
    U.negate_row(i);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols), IntMatrix::identity(cols)};

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&](bool whole_block) {
      bool found = false;
      std::size_t bi = t, bj = t;
      BigInt best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (!whole_block && i != t && j != t) continue;
          const BigInt& v = w.D(i, j);
          if (v == 0) continue;
          BigInt a = abs(v);
          if (!found || a < best) {
            found = true;
            best = a;
            bi = i;
            bj = j;
          }
        }
      if (found) {
        w.swap_rows(t, bi);
        w.swap_cols(t, bj);
      }
      return found;
    };
    if (!move_min_to_pivot(true)) break;

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (w.D(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), w.D(i, t).get_mpz_t(), w.D(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (w.D(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (w.D(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), w.D(t, j).get_mpz_t(), w.D(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (w.D(t, j) != 0) clean = false;
      }
      if (!clean) {
        move_min_to_pivot(false);
        continue;
      }
      // Enforce the divisibility chain on the trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j) {
          BigInt r;
          mpz_tdiv_r(r.get_mpz_t(), w.D(i, j).get_mpz_t(), w.D(t, t).get_mpz_t());
          if (r != 0) {
            w.add_row(t, i, 1);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (w.D(t, t) < 0) w.negate_row(t);
  }
  return SmithForm{std::move(w.U), std::move(w.D), std::move(w.V), std::move(w.V_inv)};
}

}  // namespace petit
