#include "macx/gf2_matrix.hpp"

#include <algorithm>

namespace macx {

Gf2Matrix::Gf2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (words_ == 0) words_ = 1;
  data_.assign(rows_ * words_, 0);
}

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
  Gf2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void Gf2Matrix::set(std::size_t r, std::size_t c, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  if (v)
    data_[r * words_ + (c >> 6)] |= bit;
  else
    data_[r * words_ + (c >> 6)] &= ~bit;
}

bool Gf2Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix& other) const {
  Gf2Matrix out(rows_, other.cols_);
  // Row of the product = XOR of other's rows selected by this row's bits.
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c))
        for (std::size_t w = 0; w < out.words_; ++w)
          out.data_[r * out.words_ + w] ^= other.data_[c * other.words_ + w];
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) out.set(c, r, true);
  return out;
}

Gf2Matrix Gf2Matrix::submatrix_cols(const std::vector<std::size_t>& cols) const {
  Gf2Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(r, cols[j])) out.set(r, j, true);
  return out;
}

std::size_t Gf2Matrix::rank() const {
  std::vector<std::uint64_t> work = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t wi = c >> 6;
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    std::size_t pivot = rows_;
    for (std::size_t r = rank; r < rows_; ++r)
      if (work[r * words_ + wi] & bit) {
        pivot = r;
        break;
      }
    if (pivot == rows_) continue;
    if (pivot != rank)
      for (std::size_t w = 0; w < words_; ++w)
        std::swap(work[pivot * words_ + w], work[rank * words_ + w]);
    for (std::size_t r = rank + 1; r < rows_; ++r)
      if (work[r * words_ + wi] & bit)
        for (std::size_t w = wi; w < words_; ++w)
          work[r * words_ + w] ^= work[rank * words_ + w];
    ++rank;
  }
  return rank;
}

}  // namespace macx
