#include "macx/freeness.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "macx/poincare.hpp"

namespace macx {

SubgroupSpec SubgroupSpec::real(int m, const std::vector<std::vector<int>>& rows) {
  check_ground_set_size(m);
  SubgroupSpec spec(Kind::real, m, rows.size());
  spec.real_gens_ = Gf2Matrix(rows.size(), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(m))
      throw InputError("generator row " + std::to_string(i + 1) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(m));
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] % 2 != 0) spec.real_gens_.set(i, j, true);
  }
  if (spec.real_gens_.rank() != rows.size())
    throw InputError("generator matrix has GF2 rank below the claimed rank " +
                     std::to_string(rows.size()));
  return spec;
}

SubgroupSpec SubgroupSpec::torus(int m, const std::vector<std::vector<long>>& rows) {
  check_ground_set_size(m);
  SubgroupSpec spec(Kind::torus, m, rows.size());
  spec.torus_gens_ = IntegerMatrix(rows.size(), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(m))
      throw InputError("generator row " + std::to_string(i + 1) + " has length " +
                       std::to_string(rows[i].size()) + ", expected " +
                       std::to_string(m));
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      spec.torus_gens_.at(i, j) = rows[i][j];
  }
  if (spec.torus_gens_.rank() != rows.size())
    throw InputError("generator matrix has rank below the claimed rank " +
                     std::to_string(rows.size()));
  return spec;
}

std::vector<std::vector<long>> SubgroupSpec::generator_rows() const {
  std::vector<std::vector<long>> rows(r_, std::vector<long>(static_cast<std::size_t>(m_)));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < static_cast<std::size_t>(m_); ++j)
      rows[i][j] = kind_ == Kind::real ? (real_gens_.get(i, j) ? 1 : 0)
                                       : torus_gens_.at(i, j).get_si();
  return rows;
}

namespace {

std::vector<std::size_t> complement_columns(const Subset& sigma) {
  std::vector<std::size_t> cols;
  for (int i = 1; i <= sigma.m(); ++i)
    if (!sigma.contains(i)) cols.push_back(static_cast<std::size_t>(i - 1));
  return cols;
}

bool projection_injective(const SubgroupSpec& H, const Subset& sigma) {
  const std::vector<std::size_t> cols = complement_columns(sigma);
  if (H.kind() == SubgroupSpec::Kind::real)
    return H.real_generators().submatrix_cols(cols).rank() == H.r();
  const auto factors = H.torus_generators().submatrix_cols(cols).smith_normal_form();
  if (factors.size() != H.r()) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [](const mpz_class& d) { return d == 1; });
}

}  // namespace

bool is_free(const SubgroupSpec& H, const SimplicialComplex& K) {
  if (H.m() != K.m())
    throw InputError("subgroup lives in rank " + std::to_string(H.m()) +
                     " but the complex is on [" + std::to_string(K.m()) + "]");
  if (H.r() == 0) return true;
  for (const Subset& sigma : K.maximal_faces())
    if (!projection_injective(H, sigma)) return false;
  return true;
}

int rank_bound(const SimplicialComplex& K) { return K.m() - K.dim() - 1; }

HalperinCarlssonReport hc_verify(const SimplicialComplex& K, const SubgroupSpec& H,
                                 FieldTag field) {
  HalperinCarlssonReport report;
  report.field = field;
  report.r = H.r();
  report.rank_bound = rank_bound(K);
  report.free = is_free(H, K);
  if (!report.free) return report;
  report.total_dim_zk = total_dim(poincare_zk(K, field));
  report.total_dim_rzk = total_dim(poincare_rzk(K, field));
  report.lower_bound = std::uint64_t{1} << H.r();
  report.bound_holds = report.total_dim_zk >= report.lower_bound &&
                       report.total_dim_rzk >= report.lower_bound;
  report.rank_bound_holds =
      static_cast<int>(H.r()) <= report.rank_bound;
  return report;
}

namespace {

// All reduced row-echelon matrices with the given pivot structure, emitted
// as 0/1 rows. Free entries sit right of a row's pivot in non-pivot columns.
void echelon_fill(const std::vector<std::pair<int, int>>& free_cells,
                  std::vector<std::vector<int>>& rows,
                  const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
  const std::size_t cells = free_cells.size();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    for (std::size_t c = 0; c < cells; ++c)
      rows[static_cast<std::size_t>(free_cells[c].first)]
          [static_cast<std::size_t>(free_cells[c].second)] =
              static_cast<int>((bits >> c) & 1u);
    emit(rows);
  }
}

void for_each_pivot_choice(int m, std::size_t r,
                           const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> pivots(r);
  // Lexicographic combinations of r pivot columns out of m.
  for (std::size_t i = 0; i < r; ++i) pivots[i] = static_cast<int>(i);
  for (;;) {
    emit(pivots);
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && pivots[static_cast<std::size_t>(i)] ==
                         m - static_cast<int>(r) + i)
      --i;
    if (i < 0) return;
    ++pivots[static_cast<std::size_t>(i)];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < r; ++j)
      pivots[j] = pivots[j - 1] + 1;
  }
}

void for_each_real_subgroup(int m, std::size_t r,
                            const std::function<void(const SubgroupSpec&)>& emit) {
  for_each_pivot_choice(m, r, [&](const std::vector<int>& pivots) {
    std::vector<std::vector<int>> rows(r, std::vector<int>(static_cast<std::size_t>(m), 0));
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (std::size_t i = 0; i < r; ++i) {
      rows[i][static_cast<std::size_t>(pivots[i])] = 1;
      is_pivot[static_cast<std::size_t>(pivots[i])] = true;
    }
    std::vector<std::pair<int, int>> free_cells;
    for (std::size_t i = 0; i < r; ++i)
      for (int j = pivots[i] + 1; j < m; ++j)
        if (!is_pivot[static_cast<std::size_t>(j)])
          free_cells.emplace_back(static_cast<int>(i), j);
    echelon_fill(free_cells, rows,
                 [&](const std::vector<std::vector<int>>& filled) {
                   emit(SubgroupSpec::real(m, filled));
                 });
  });
}

}  // namespace

MaxFreeRankResult max_free_rank_real(const SimplicialComplex& K) {
  if (K.m() > 6)
    throw SizeError("subgroup search is capped at m <= 6");
  for (std::size_t r = static_cast<std::size_t>(K.m()); r >= 1; --r) {
    MaxFreeRankResult found;
    for_each_real_subgroup(K.m(), r, [&](const SubgroupSpec& H) {
      if (!found.witness && is_free(H, K)) {
        found.r = r;
        found.witness = H;
      }
    });
    if (found.witness) return found;
  }
  return MaxFreeRankResult{};
}

std::vector<SubgroupSpec> enumerate_real_subgroups(int m) {
  if (m > 6) throw SizeError("subgroup enumeration is capped at m <= 6");
  std::vector<SubgroupSpec> out;
  out.push_back(SubgroupSpec::real(m, {}));
  for (std::size_t r = 1; r <= static_cast<std::size_t>(m); ++r)
    for_each_real_subgroup(m, r, [&](const SubgroupSpec& H) { out.push_back(H); });
  return out;
}

}  // namespace macx
