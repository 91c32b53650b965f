#include "macx/exact_matrix.hpp"

#include <algorithm>
#include <utility>

namespace macx {

namespace {

// Fraction-free Gaussian elimination (Bareiss). Destroys `a`. Row and column
// swaps pick the smallest-magnitude nonzero pivot, which both limits entry
// growth and keeps the exact divisions valid (the division at step k is by
// the leading k x k minor of the permuted matrix).
std::size_t bareiss_rank(std::vector<mpz_class>& a, std::size_t rows,
                         std::size_t cols) {
  const auto at = [&](std::size_t r, std::size_t c) -> mpz_class& {
    return a[r * cols + c];
  };
  mpz_class prev = 1;
  std::size_t rank = 0;
  const std::size_t steps = std::min(rows, cols);
  mpz_class t1, t2;
  while (rank < steps) {
    // Smallest-magnitude nonzero pivot in the trailing submatrix.
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = rank; r < rows; ++r)
      for (std::size_t c = rank; c < cols; ++c) {
        if (at(r, c) == 0) continue;
        if (pr == rows ||
            mpz_cmpabs(at(r, c).get_mpz_t(), at(pr, pc).get_mpz_t()) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr == rows) break;
    if (pr != rank)
      for (std::size_t c = rank; c < cols; ++c) std::swap(at(rank, c), at(pr, c));
    if (pc != rank)
      for (std::size_t r = rank; r < rows; ++r) std::swap(at(r, rank), at(r, pc));
    const mpz_class& pivot = at(rank, rank);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = rank + 1; c < cols; ++c) {
        t1 = at(r, c) * pivot;
        t2 = at(r, rank) * at(rank, c);
        t1 -= t2;
        mpz_divexact(at(r, c).get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      at(r, rank) = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const mpz_class& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::multiply(const IntegerMatrix& other) const {
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpz_class& v = at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (other.at(k, c) != 0) out.at(r, c) += v * other.at(k, c);
    }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

IntegerMatrix IntegerMatrix::submatrix_cols(
    const std::vector<std::size_t>& cols) const {
  IntegerMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.at(r, j) = at(r, cols[j]);
  return out;
}

std::size_t IntegerMatrix::rank() const {
  std::vector<mpz_class> work = data_;
  return bareiss_rank(work, rows_, cols_);
}

std::vector<mpz_class> IntegerMatrix::smith_normal_form() const {
  std::vector<mpz_class> a = data_;
  const std::size_t rows = rows_, cols = cols_;
  const auto at = [&](std::size_t r, std::size_t c) -> mpz_class& {
    return a[r * cols + c];
  };

  std::vector<mpz_class> factors;
  std::size_t t = 0;
  mpz_class q, tmp;
  while (t < rows && t < cols) {
    // Move the smallest-magnitude nonzero entry of the trailing block to (t,t).
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = t; r < rows; ++r)
      for (std::size_t c = t; c < cols; ++c) {
        if (at(r, c) == 0) continue;
        if (pr == rows ||
            mpz_cmpabs(at(r, c).get_mpz_t(), at(pr, pc).get_mpz_t()) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr == rows) break;
    if (pr != t)
      for (std::size_t c = t; c < cols; ++c) std::swap(at(t, c), at(pr, c));
    if (pc != t)
      for (std::size_t r = t; r < rows; ++r) std::swap(at(r, t), at(r, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      // Kill the rest of column t; imperfect quotients leave remainders that
      // a smaller pivot will absorb on the next pass.
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (at(r, t) == 0) continue;
        q = at(r, t) / at(t, t);
        if (q != 0)
          for (std::size_t c = t; c < cols; ++c) at(r, c) -= q * at(t, c);
        if (at(r, t) != 0) {
          for (std::size_t c = t; c < cols; ++c) std::swap(at(t, c), at(r, c));
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (at(t, c) == 0) continue;
        q = at(t, c) / at(t, t);
        if (q != 0)
          for (std::size_t r = t; r < rows; ++r) at(r, c) -= q * at(r, t);
        if (at(t, c) != 0) {
          for (std::size_t r = t; r < rows; ++r) std::swap(at(r, t), at(r, c));
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: fold any entry the pivot does not divide into row t.
      for (std::size_t r = t + 1; r < rows && clean; ++r)
        for (std::size_t c = t + 1; c < cols && clean; ++c) {
          tmp = at(r, c) % at(t, t);
          if (tmp != 0) {
            for (std::size_t cc = t; cc < cols; ++cc) at(t, cc) += at(r, cc);
            clean = false;
          }
        }
    }
    factors.push_back(abs(at(t, t)));
    ++t;
  }
  return factors;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const mpq_class& v) { return v == 0; });
}

RationalMatrix RationalMatrix::multiply(const RationalMatrix& other) const {
  RationalMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const mpq_class& v = at(r, k);
      if (v == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c)
        if (other.at(k, c) != 0) out.at(r, c) += v * other.at(k, c);
    }
  return out;
}

std::size_t RationalMatrix::rank() const {
  std::vector<mpz_class> work(rows_ * cols_);
  mpz_class scale;
  for (std::size_t r = 0; r < rows_; ++r) {
    scale = 1;
    for (std::size_t c = 0; c < cols_; ++c)
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              data_[r * cols_ + c].get_den_mpz_t());
    for (std::size_t c = 0; c < cols_; ++c) {
      const mpq_class& v = data_[r * cols_ + c];
      work[r * cols_ + c] = v.get_num() * (scale / v.get_den());
    }
  }
  return bareiss_rank(work, rows_, cols_);
}

}  // namespace macx
