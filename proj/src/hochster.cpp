#include "macx/hochster.hpp"

#include <algorithm>
#include <bit>
#include <type_traits>

#include "macx/chain_complex.hpp"
#include "macx/parallel.hpp"

namespace macx {

namespace {

// Faces of K grouped by cardinality, each group in canonical index order,
// with a lookup from canonical index to position within its group.
struct GradedFaces {
  std::vector<std::vector<std::uint32_t>> by_card;
  std::vector<std::size_t> position;  // indexed by canonical subset index

  explicit GradedFaces(const SimplicialComplex& K)
      : by_card(static_cast<std::size_t>(K.dim() + 2)),
        position(K.indicator().table_size(), 0) {
    for (const Subset& a : K.faces()) {
      auto& group = by_card[static_cast<std::size_t>(a.card())];
      position[a.bits()] = group.size();
      group.push_back(a.bits());
    }
  }
};

// Sign of removing element t from face sigma: parity of the number of
// smaller elements of sigma.
int removal_sign(std::uint32_t sigma, int t_zero_based) {
  const std::uint32_t below = sigma & ((std::uint32_t{1} << t_zero_based) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

// Coaugmented chain complex of K over the chosen field: the group in degree
// j has the (j+1)-faces as basis, bottom degree -1 spanned by the empty face.
template <class Mat>
ChainComplex<Mat> coaugmented_chain_complex(const SimplicialComplex& K) {
  const GradedFaces faces(K);
  ChainComplex<Mat> C;
  C.bottom_degree = -1;
  for (const auto& group : faces.by_card) C.dims.push_back(group.size());
  C.boundaries.emplace_back(0, C.dims[0]);
  for (std::size_t card = 1; card < faces.by_card.size(); ++card) {
    Mat d(C.dims[card - 1], C.dims[card]);
    for (std::size_t col = 0; col < faces.by_card[card].size(); ++col) {
      const std::uint32_t sigma = faces.by_card[card][col];
      for (std::uint32_t rest = sigma; rest != 0; rest &= rest - 1) {
        const std::uint32_t low = rest & -rest;
        const std::uint32_t tau = sigma & ~low;
        const std::size_t row = faces.position[tau];
        if constexpr (std::is_same_v<Mat, Gf2Matrix>) {
          d.flip(row, col);
        } else {
          d.at(row, col) = removal_sign(sigma, std::countr_zero(low));
        }
      }
    }
    C.boundaries.push_back(std::move(d));
  }
  return C;
}

template <class Mat>
ReducedCohomology reduced_cohomology_impl(const SimplicialComplex& K) {
  const auto h = homology_dims(coaugmented_chain_complex<Mat>(K));
  ReducedCohomology out;
  out.top_degree = K.dim();
  out.dims = h;
  return out;
}

}  // namespace

ReducedCohomology reduced_cohomology_dims(const SimplicialComplex& K, FieldTag field) {
  return field == FieldTag::GF2 ? reduced_cohomology_impl<Gf2Matrix>(K)
                                : reduced_cohomology_impl<RationalMatrix>(K);
}

std::uint64_t BettiTable::at(int i, const Subset& a) const {
  const auto it = entries_.find({i, a.bits()});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::add(int i, const Subset& a, std::uint64_t beta) {
  if (beta == 0) return;
  entries_[{i, a.bits()}] += beta;
}

std::uint64_t BettiTable::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, beta] : entries_) sum += beta;
  return sum;
}

BettiTable betti_table(const SimplicialComplex& K, FieldTag field) {
  const int m = K.m();
  const std::size_t n = std::size_t{1} << m;
  // Workers fill disjoint slots; the table is assembled afterwards.
  std::vector<ReducedCohomology> cohomology(n);
  parallel_for(n, [&](std::size_t a_bits) {
    const Subset a = Subset::from_bits(m, static_cast<std::uint32_t>(a_bits));
    cohomology[a_bits] = reduced_cohomology_dims(K.restriction(a), field);
  });
  BettiTable table(m, field);
  for (std::size_t a_bits = 0; a_bits < n; ++a_bits) {
    const Subset a = Subset::from_bits(m, static_cast<std::uint32_t>(a_bits));
    const int card = a.card();
    for (int i = 0; i <= card; ++i)
      table.add(i, a, cohomology[a_bits].at(card - i - 1));
  }
  return table;
}

std::uint64_t total_betti_sum(const BettiTable& table) { return table.total(); }

MobiusBettiIdentityReport check_mobius_betti_identity(const SimplicialComplex& K, FieldTag field) {
  const BettiTable table = betti_table(K, field);
  const SubsetFn g = mobius(K.indicator());
  MobiusBettiIdentityReport report;
  report.covers_ground_set = K.covers_ground_set();
  std::vector<std::uint64_t> column_sum(g.table_size(), 0);
  for (const auto& [key, beta] : table.entries()) column_sum[key.second] += beta;
  for (std::uint32_t a = 0; a < g.table_size(); ++a) {
    if ((column_sum[a] & 1u) != static_cast<std::uint64_t>(g.value_at(a))) {
      report.holds = false;
      report.witness = Subset::from_bits(K.m(), a);
      return report;
    }
  }
  report.holds = true;
  return report;
}

MobiusSupportBoundReport check_mobius_support_bound(const SimplicialComplex& K, FieldTag field) {
  MobiusSupportBoundReport report;
  report.mobius_support_size = mobius(K.indicator()).support_size();
  report.betti_total = betti_table(K, field).total();
  report.holds = report.mobius_support_size <= report.betti_total;
  return report;
}

}  // namespace macx
