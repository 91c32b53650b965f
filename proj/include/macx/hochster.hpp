#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "macx/field.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/// Dimensions of the reduced simplicial cohomology of a complex, computed
/// from the coaugmented cochain complex whose degree -1 term is spanned by
/// the empty face. For K = {empty}, H~^{-1} = 1.
struct ReducedCohomology {
  int top_degree = -1;                  // = dim K
  std::vector<std::size_t> dims;        // dims[j + 1] = dim H~^j, j from -1

  std::size_t at(int j) const {
    const int idx = j + 1;
    if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
    return dims[static_cast<std::size_t>(idx)];
  }
};

ReducedCohomology reduced_cohomology_dims(const SimplicialComplex& K, FieldTag field);

/// Bigraded Betti numbers beta_{i,a} of the Stanley-Reisner ring of a
/// complex, indexed by homological degree i and squarefree degree a.
/// Entries absent from the map are zero.
class BettiTable {
 public:
  using Key = std::pair<int, std::uint32_t>;  // (i, canonical index of a)

  BettiTable(int m, FieldTag field) : m_(m), field_(field) {}

  int m() const { return m_; }
  FieldTag field() const { return field_; }

  std::uint64_t at(int i, const Subset& a) const;
  void add(int i, const Subset& a, std::uint64_t beta);

  const std::map<Key, std::uint64_t>& entries() const { return entries_; }
  std::uint64_t total() const;

 private:
  int m_;
  FieldTag field_;
  std::map<Key, std::uint64_t> entries_;
};

/// Hochster formula: beta_{i,a} = dim H~^{|a|-i-1}(K|_a) for every a in 2^[m]
/// and 0 <= i <= |a|. The 2^m restrictions are independent and are computed
/// in parallel.
BettiTable betti_table(const SimplicialComplex& K, FieldTag field);

std::uint64_t total_betti_sum(const BettiTable& table);

/// Checks the identity M(f) = sum_{i,a} beta_{i,a} delta_a for f the
/// indicator of K: for every a, M(f)(a) must equal the parity of
/// sum_i beta_{i,a}.
struct MobiusBettiIdentityReport {
  bool holds = false;
  std::optional<Subset> witness;        // first subset violating the parity
  bool covers_ground_set = false;       // every element of [m] is a vertex
};

MobiusBettiIdentityReport check_mobius_betti_identity(const SimplicialComplex& K, FieldTag field);

/// Checks |supp(M(f))| <= total Betti sum.
struct MobiusSupportBoundReport {
  std::uint64_t mobius_support_size = 0;
  std::uint64_t betti_total = 0;
  bool holds = false;
};

MobiusSupportBoundReport check_mobius_support_bound(const SimplicialComplex& K, FieldTag field);

}  // namespace macx
