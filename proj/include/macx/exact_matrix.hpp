#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace macx {

/// Dense matrix with arbitrary-precision integer entries.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);

  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpz_class& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  IntegerMatrix multiply(const IntegerMatrix& other) const;
  IntegerMatrix transpose() const;
  IntegerMatrix submatrix_cols(const std::vector<std::size_t>& cols) const;

  /// Rank over the rationals, by fraction-free (Bareiss) elimination with
  /// full pivoting on the smallest-magnitude nonzero entry.
  std::size_t rank() const;

  /// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form,
  /// all positive.
  std::vector<mpz_class> smith_normal_form() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Dense matrix with arbitrary-precision rational entries. No floating point
/// anywhere; results are unconditionally exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const mpq_class& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  mpq_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  bool is_zero() const;
  RationalMatrix multiply(const RationalMatrix& other) const;

  /// Rank by clearing denominators row by row and running the fraction-free
  /// integer elimination.
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpq_class> data_;
};

inline std::size_t rank(const IntegerMatrix& M) { return M.rank(); }
inline std::size_t rank(const RationalMatrix& M) { return M.rank(); }

inline std::vector<mpz_class> smith_normal_form(const IntegerMatrix& M) {
  return M.smith_normal_form();
}

}  // namespace macx
