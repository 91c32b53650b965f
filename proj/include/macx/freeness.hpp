#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "macx/exact_matrix.hpp"
#include "macx/field.hpp"
#include "macx/gf2_matrix.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/// Generators of a rank-r subtorus of T^m (integer entries) or of a rank-r
/// subgroup of (Z_2)^m (GF2 entries). Construction checks that the generator
/// matrix really has rank r over the ambient structure.
class SubgroupSpec {
 public:
  enum class Kind { real, torus };

  static SubgroupSpec real(int m, const std::vector<std::vector<int>>& rows);
  static SubgroupSpec torus(int m, const std::vector<std::vector<long>>& rows);

  Kind kind() const { return kind_; }
  int m() const { return m_; }
  std::size_t r() const { return r_; }

  const Gf2Matrix& real_generators() const { return real_gens_; }
  const IntegerMatrix& torus_generators() const { return torus_gens_; }

  std::vector<std::vector<long>> generator_rows() const;

 private:
  SubgroupSpec(Kind kind, int m, std::size_t r)
      : kind_(kind), m_(m), r_(r) {}

  Kind kind_;
  int m_;
  std::size_t r_;
  Gf2Matrix real_gens_;
  IntegerMatrix torus_gens_;
};

/// Freeness of the restricted coordinatewise action on the (real)
/// moment-angle complex of K. Isotropy is largest on the top cells, so only
/// maximal faces need checking: the action is free iff for every maximal
/// face sigma the projection of the subgroup to the coordinates outside
/// sigma is injective. For GF2 subgroups that is full rank of the column
/// submatrix; for subtori it is a split lattice injection, i.e. the Smith
/// normal form of the submatrix has exactly r invariant factors, all 1.
bool is_free(const SubgroupSpec& H, const SimplicialComplex& K);

/// m - dim K - 1, an upper bound for the rank of any freely acting subtorus.
int rank_bound(const SimplicialComplex& K);

/// End-to-end Halperin-Carlsson check: if H acts freely, the total
/// cohomology dimension of Z_K (equivalently RZ_K) must be at least 2^r,
/// and r must respect the rank bound.
struct HalperinCarlssonReport {
  FieldTag field = FieldTag::GF2;
  bool free = false;
  std::size_t r = 0;
  std::uint64_t total_dim_zk = 0;
  std::uint64_t total_dim_rzk = 0;
  std::uint64_t lower_bound = 0;  // 2^r; meaningful only when free
  bool bound_holds = false;       // total >= 2^r
  int rank_bound = 0;
  bool rank_bound_holds = false;  // r <= m - dim K - 1

  bool ok() const { return !free || (bound_holds && rank_bound_holds); }
};

HalperinCarlssonReport hc_verify(const SimplicialComplex& K, const SubgroupSpec& H,
                                 FieldTag field);

/// Exhaustive search over GF2 subspaces (as reduced row-echelon generator
/// matrices) for the largest rank that still acts freely. Capped at m <= 6.
struct MaxFreeRankResult {
  std::size_t r = 0;
  std::optional<SubgroupSpec> witness;  // absent iff r == 0
};

MaxFreeRankResult max_free_rank_real(const SimplicialComplex& K);

/// All GF2 subgroups of (Z_2)^m, one reduced row-echelon basis per subspace,
/// the trivial subgroup included. Exposed for exhaustive soundness sweeps.
std::vector<SubgroupSpec> enumerate_real_subgroups(int m);

}  // namespace macx
