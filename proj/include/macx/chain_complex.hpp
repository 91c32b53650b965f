#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "macx/errors.hpp"
#include "macx/exact_matrix.hpp"
#include "macx/gf2_matrix.hpp"

namespace macx {

/// A finite chain complex over a field, stored in boundary direction:
/// boundaries[j] is the matrix of d : C_{bottom_degree+j} -> C_{bottom_degree+j-1},
/// with boundaries[0] the zero map out of the bottom group (0 rows).
/// Over a field the homology and cohomology dimensions of the complex agree,
/// so cochain-complex callers use the same carrier.
template <class Mat>
struct ChainComplex {
  int bottom_degree = 0;
  std::vector<std::size_t> dims;
  std::vector<Mat> boundaries;

  /// Checks shapes and that consecutive boundaries compose to zero.
  void validate() const {
    if (boundaries.size() != dims.size())
      throw MalformedComplexError("boundary count does not match group count");
    for (std::size_t j = 1; j < dims.size(); ++j) {
      if (boundaries[j].rows() != dims[j - 1] || boundaries[j].cols() != dims[j])
        throw MalformedComplexError("boundary " + std::to_string(j) +
                                    " has the wrong shape");
      if (j + 1 < dims.size() &&
          !boundaries[j].multiply(boundaries[j + 1]).is_zero())
        throw MalformedComplexError("d o d != 0 at degree " +
                                    std::to_string(bottom_degree + (int)j + 1));
    }
  }
};

/// dim H_j = dims[j] - rank d_j - rank d_{j+1}, with rank 0 for the missing
/// differentials at both ends. Indexing matches `dims`.
template <class Mat>
std::vector<std::size_t> homology_dims(const ChainComplex<Mat>& C) {
  C.validate();
  const std::size_t n = C.dims.size();
  std::vector<std::size_t> rk(n + 1, 0);
  for (std::size_t j = 1; j < n; ++j) rk[j] = rank(C.boundaries[j]);
  std::vector<std::size_t> h(n);
  for (std::size_t j = 0; j < n; ++j) h[j] = C.dims[j] - rk[j] - rk[j + 1];
  return h;
}

}  // namespace macx
