#include "macx/poincare.hpp"

#include <bit>

namespace macx {

void PoincarePolynomial::add(unsigned degree, std::uint64_t dim) {
  if (dim == 0) return;
  coeffs_[degree] += dim;
}

std::uint64_t PoincarePolynomial::coefficient(unsigned degree) const {
  const auto it = coeffs_.find(degree);
  return it == coeffs_.end() ? 0 : it->second;
}

std::uint64_t PoincarePolynomial::total() const {
  std::uint64_t sum = 0;
  for (const auto& [deg, dim] : coeffs_) sum += dim;
  return sum;
}

std::int64_t PoincarePolynomial::euler_characteristic() const {
  std::int64_t chi = 0;
  for (const auto& [deg, dim] : coeffs_)
    chi += (deg % 2 == 0) ? static_cast<std::int64_t>(dim)
                          : -static_cast<std::int64_t>(dim);
  return chi;
}

std::string PoincarePolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s;
  for (const auto& [deg, dim] : coeffs_) {
    if (!s.empty()) s += " + ";
    if (deg == 0) {
      s += std::to_string(dim);
      continue;
    }
    if (dim != 1) s += std::to_string(dim) + "*";
    s += "t";
    if (deg != 1) s += "^" + std::to_string(deg);
  }
  return s;
}

PoincarePolynomial poincare_generalized(const BettiTable& table,
                                        const DegreeVector& kappa) {
  if (static_cast<int>(kappa.kappa.size()) != table.m())
    throw InputError("degree vector has length " +
                     std::to_string(kappa.kappa.size()) + " but the table is over [" +
                     std::to_string(table.m()) + "]");
  PoincarePolynomial p;
  for (const auto& [key, beta] : table.entries()) {
    const auto& [i, a_bits] = key;
    unsigned shift = 0;
    for (std::uint32_t rest = a_bits; rest != 0; rest &= rest - 1)
      shift += kappa.kappa[static_cast<std::size_t>(std::countr_zero(rest))] + 1;
    p.add(shift - static_cast<unsigned>(i), beta);
  }
  return p;
}

PoincarePolynomial poincare_zk(const SimplicialComplex& K, FieldTag field) {
  return poincare_generalized(betti_table(K, field), DegreeVector::uniform(K.m(), 1));
}

PoincarePolynomial poincare_rzk(const SimplicialComplex& K, FieldTag field) {
  return poincare_generalized(betti_table(K, field), DegreeVector::uniform(K.m(), 0));
}

std::uint64_t total_dim(const PoincarePolynomial& p) { return p.total(); }

}  // namespace macx
