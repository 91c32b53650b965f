#include "macx/simplicial_complex.hpp"

#include <algorithm>

namespace macx {

SimplicialComplex::SimplicialComplex(SubsetFn indicator)
    : indicator_(std::move(indicator)) {
  const int m = indicator_.m();
  for (std::uint32_t a = 0; a < indicator_.table_size(); ++a) {
    if (!indicator_.value_at(a)) continue;
    dim_ = std::max(dim_, std::popcount(a) - 1);
    bool maximal = true;
    for (int i = 0; i < m && maximal; ++i)
      if (!((a >> i) & 1u) && indicator_.value_at(a | (1u << i))) maximal = false;
    if (maximal) maximal_faces_.push_back(Subset::from_bits(m, a));
  }
  std::stable_sort(maximal_faces_.begin(), maximal_faces_.end(), card_index_less);
}

SimplicialComplex SimplicialComplex::from_maximal_faces(
    int m, const std::vector<Subset>& gens) {
  SubsetFn f(m);
  f.set_value(0, true);
  for (const Subset& g : gens) {
    if (g.m() != m)
      throw InputError("generator " + g.to_string() + " is not a subset of [" +
                       std::to_string(m) + "]");
    // All submasks of g, including g itself.
    std::uint32_t sub = g.bits();
    while (true) {
      f.set_value(sub, true);
      if (sub == 0) break;
      sub = (sub - 1) & g.bits();
    }
  }
  return SimplicialComplex(std::move(f));
}

SimplicialComplex SimplicialComplex::from_support(const SubsetFn& f) {
  if (f.is_zero())
    throw NicenessError("support is empty: the zero function is not nice");
  if (auto v = niceness_violation(f))
    throw NicenessError("support is not downward closed: contains " +
                        v->face.to_string() + " but not " + v->missing.to_string());
  return SimplicialComplex(f);
}

Subset SimplicialComplex::vertex_set() const {
  Subset u = Subset::empty(m());
  for (const Subset& a : maximal_faces_) u = u.unite(a);
  return u;
}

SimplicialComplex SimplicialComplex::restriction(const Subset& a) const {
  if (a.m() != m())
    throw InputError("restriction set " + a.to_string() + " is not a subset of [" +
                     std::to_string(m()) + "]");
  SubsetFn f(m());
  std::uint32_t sub = a.bits();
  while (true) {
    if (indicator_.value_at(sub)) f.set_value(sub, true);
    if (sub == 0) break;
    sub = (sub - 1) & a.bits();
  }
  return SimplicialComplex(std::move(f));
}

namespace {

// Backtracking over subsets in (cardinality, index) order: a subset may be
// included only if all its immediate subsets already are. Emits each
// downward-closed family containing the empty set exactly once.
void enumerate_rec(int m, std::size_t pos, const std::vector<std::uint32_t>& order,
                   std::vector<bool>& chosen,
                   std::vector<SimplicialComplex>& out) {
  if (pos == order.size()) {
    SubsetFn f(m);
    for (std::uint32_t a = 0; a < f.table_size(); ++a)
      if (chosen[a]) f.set_value(a, true);
    out.push_back(SimplicialComplex::from_support(f));
    return;
  }
  const std::uint32_t a = order[pos];
  enumerate_rec(m, pos + 1, order, chosen, out);
  bool closed = true;
  for (std::uint32_t rest = a; rest != 0 && closed; rest &= rest - 1)
    if (!chosen[a & ~(rest & -rest)]) closed = false;
  if (closed) {
    chosen[a] = true;
    enumerate_rec(m, pos + 1, order, chosen, out);
    chosen[a] = false;
  }
}

}  // namespace

std::vector<SimplicialComplex> enumerate_complexes(int m) {
  if (m < 1 || m > 4)
    throw SizeError("exhaustive complex enumeration is capped at m <= 4");
  std::vector<std::uint32_t> order;
  for (std::uint32_t a = 1; a < (std::uint32_t{1} << m); ++a) order.push_back(a);
  std::sort(order.begin(), order.end(), [](std::uint32_t x, std::uint32_t y) {
    if (std::popcount(x) != std::popcount(y)) return std::popcount(x) < std::popcount(y);
    return x < y;
  });
  std::vector<bool> chosen(std::size_t{1} << m, false);
  chosen[0] = true;
  std::vector<SimplicialComplex> out;
  enumerate_rec(m, 0, order, chosen, out);
  return out;
}

SimplicialComplex random_complex(int m, std::mt19937_64& rng) {
  check_ground_set_size(m);
  const std::uint32_t mask = (std::uint32_t{1} << m) - 1;
  std::uniform_int_distribution<int> count_dist(1, 2 * m);
  const int gens = count_dist(rng);
  std::vector<Subset> faces;
  faces.reserve(static_cast<std::size_t>(gens));
  for (int i = 0; i < gens; ++i)
    faces.push_back(Subset::from_bits(m, static_cast<std::uint32_t>(rng()) & mask));
  return SimplicialComplex::from_maximal_faces(m, faces);
}

}  // namespace macx
