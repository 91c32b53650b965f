#pragma once

#include <random>

#include "macx/freeness.hpp"
#include "macx/simplicial_complex.hpp"
#include "macx/subset_fn.hpp"

namespace macx::testing {

// Literal double loop over the defining sum, independent of the butterfly.
inline SubsetFn naive_mobius(const SubsetFn& f) {
  SubsetFn g(f.m());
  for (std::uint32_t a = 0; a < f.table_size(); ++a) {
    bool acc = false;
    for (std::uint32_t b = 0; b < f.table_size(); ++b)
      if ((b & a) == b && f.value_at(b)) acc = !acc;
    g.set_value(a, acc);
  }
  return g;
}

inline SubsetFn random_fn(int m, std::mt19937_64& rng) {
  SubsetFn f(m);
  for (std::uint32_t a = 0; a < f.table_size(); ++a)
    if (rng() & 1u) f.set_value(a, true);
  return f;
}

inline SubsetFn random_nice_fn(int m, std::mt19937_64& rng) {
  return random_complex(m, rng).indicator();
}

// Literal orbit check on the finite cell set of the interval model,
// enumerated from scratch: the cells are the m-tuples over {p-, p+, edge}
// whose set of edge positions is a face. A nonzero group element fixes the
// center of such a cell iff its support lies inside the edge positions.
// Free means no such pair exists.
inline bool literal_orbit_free(const SubgroupSpec& H, const SimplicialComplex& K) {
  std::vector<std::uint32_t> elements;
  for (std::uint64_t combo = 1; combo < (std::uint64_t{1} << H.r()); ++combo) {
    std::uint32_t h = 0;
    for (std::size_t row = 0; row < H.r(); ++row)
      if ((combo >> row) & 1u)
        for (int j = 0; j < H.m(); ++j)
          if (H.real_generators().get(row, static_cast<std::size_t>(j)))
            h ^= std::uint32_t{1} << j;
    elements.push_back(h);
  }
  std::uint32_t total = 1;
  for (int i = 0; i < K.m(); ++i) total *= 3;
  for (std::uint32_t code = 0; code < total; ++code) {
    std::uint32_t edge_positions = 0;
    std::uint32_t rest = code;
    for (int i = 0; i < K.m(); ++i, rest /= 3)
      if (rest % 3 == 2) edge_positions |= std::uint32_t{1} << i;
    if (!K.indicator().value_at(edge_positions)) continue;
    for (std::uint32_t h : elements)
      if ((h & ~edge_positions) == 0) return false;
  }
  return true;
}

// Downward-closed families containing the empty set, found by filtering
// every candidate family; the independent check for enumerate_complexes.
inline std::vector<std::uint64_t> closure_filtered_families(int m) {
  const std::uint32_t subsets = std::uint32_t{1} << m;
  std::vector<std::uint64_t> out;
  for (std::uint64_t family = 0; family < (std::uint64_t{1} << subsets); ++family) {
    if (!(family & 1u)) continue;  // must contain the empty set
    bool closed = true;
    for (std::uint32_t a = 0; a < subsets && closed; ++a) {
      if (!((family >> a) & 1u)) continue;
      for (int i = 0; i < m && closed; ++i)
        if ((a >> i) & 1u)
          closed = ((family >> (a & ~(std::uint32_t{1} << i))) & 1u) != 0;
    }
    if (closed) out.push_back(family);
  }
  return out;
}

}  // namespace macx::testing
