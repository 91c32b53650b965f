#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "macx/hochster.hpp"

namespace macx {

/// Per-vertex reduced-homology degrees kappa_i of the sphere factors of a
/// generalized moment-angle complex; (1,...,1) gives Z_K, (0,...,0) gives
/// the real variant.
struct DegreeVector {
  std::vector<unsigned> kappa;

  static DegreeVector uniform(int m, unsigned value) {
    return DegreeVector{std::vector<unsigned>(static_cast<std::size_t>(m), value)};
  }
};

/// Degree-indexed dimensions of a graded cohomology module.
class PoincarePolynomial {
 public:
  void add(unsigned degree, std::uint64_t dim);
  std::uint64_t coefficient(unsigned degree) const;
  const std::map<unsigned, std::uint64_t>& coefficients() const { return coeffs_; }

  std::uint64_t total() const;
  /// Alternating coefficient sum (the Euler characteristic over a field).
  std::int64_t euler_characteristic() const;

  std::string to_string() const;  // e.g. "1 + t^5"

  friend bool operator==(const PoincarePolynomial& p, const PoincarePolynomial& q) {
    return p.coeffs_ == q.coeffs_;
  }

 private:
  std::map<unsigned, std::uint64_t> coeffs_;
};

/// dim H^n = sum of beta_{i,a} over entries with -i + sum_{k in a}(kappa_k+1) = n.
PoincarePolynomial poincare_generalized(const BettiTable& table, const DegreeVector& kappa);

/// Moment-angle complex Z_K: the kappa = (1,...,1) specialization.
PoincarePolynomial poincare_zk(const SimplicialComplex& K, FieldTag field);

/// Real moment-angle complex RZ_K: the kappa = (0,...,0) specialization.
PoincarePolynomial poincare_rzk(const SimplicialComplex& K, FieldTag field);

std::uint64_t total_dim(const PoincarePolynomial& p);

}  // namespace macx
