#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace macx {

/// Dense matrix over GF(2) with 64-bit word-packed rows.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::size_t rows, std::size_t cols);

  static Gf2Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return ((data_[r * words_ + (c >> 6)] >> (c & 63)) & 1u) != 0;
  }
  void set(std::size_t r, std::size_t c, bool v);
  void flip(std::size_t r, std::size_t c) {
    data_[r * words_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
  }

  bool is_zero() const;
  Gf2Matrix multiply(const Gf2Matrix& other) const;
  Gf2Matrix transpose() const;
  Gf2Matrix submatrix_cols(const std::vector<std::size_t>& cols) const;

  /// Rank by word-packed Gaussian elimination; the matrix itself is untouched.
  std::size_t rank() const;

 private:
  void xor_row_into(std::vector<std::uint64_t>& work, std::size_t src,
                    std::size_t dst) const;

  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> data_;
};

inline std::size_t rank(const Gf2Matrix& M) { return M.rank(); }

}  // namespace macx
