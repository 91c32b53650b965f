#include "macx/subset_fn.hpp"

#include <algorithm>
#include <bit>

namespace macx {

namespace {

std::size_t word_count(int m) {
  return m >= 6 ? (std::size_t{1} << (m - 6)) : 1;
}

// Positions whose coordinate-i bit is 0, for the six in-word butterfly stages.
constexpr std::uint64_t kStageMask[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

SubsetFn::SubsetFn(int m) : m_(m), words_(0) {
  check_ground_set_size(m);
  words_.assign(word_count(m), 0);
}

SubsetFn SubsetFn::delta(const Subset& a) {
  SubsetFn f(a.m());
  f.set_value(a.bits(), true);
  return f;
}

SubsetFn SubsetFn::mu(const Subset& a) {
  SubsetFn f(a.m());
  const std::uint32_t ab = a.bits();
  for (std::uint32_t b = 0; b < f.table_size(); ++b)
    if ((b & ab) == ab) f.set_value(b, true);
  return f;
}

SubsetFn SubsetFn::coordinate(int m, int i) {
  return mu(Subset::empty(m).with(i));
}

SubsetFn SubsetFn::one(int m) {
  SubsetFn f(m);
  std::fill(f.words_.begin(), f.words_.end(), ~std::uint64_t{0});
  if (m < 6) f.words_[0] = (std::uint64_t{1} << (1u << m)) - 1;
  return f;
}

bool SubsetFn::operator()(const Subset& b) const {
  if (b.m() != m_)
    throw InputError("evaluating a function on 2^[" + std::to_string(m_) +
                     "] at a subset of [" + std::to_string(b.m()) + "]");
  return value_at(b.bits());
}

void SubsetFn::set_value(std::uint32_t index, bool v) {
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  if (v)
    words_[index >> 6] |= bit;
  else
    words_[index >> 6] &= ~bit;
}

SubsetFn SubsetFn::operator+(const SubsetFn& g) const {
  require_same_m(g);
  SubsetFn out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] ^= g.words_[w];
  return out;
}

SubsetFn SubsetFn::operator*(const SubsetFn& g) const {
  require_same_m(g);
  SubsetFn out = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= g.words_[w];
  return out;
}

bool SubsetFn::is_zero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::uint64_t SubsetFn::support_size() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

void SubsetFn::require_same_m(const SubsetFn& g) const {
  if (m_ != g.m_)
    throw InputError("mixing functions on 2^[" + std::to_string(m_) +
                     "] and 2^[" + std::to_string(g.m_) + "]");
}

SubsetFn make_basis(const BasisKind& kind, int m) {
  check_ground_set_size(m);
  switch (kind.tag) {
    case BasisKind::Tag::delta:
      if (!kind.subset || kind.subset->m() != m)
        throw InputError("delta basis needs a subset of [" + std::to_string(m) + "]");
      return SubsetFn::delta(*kind.subset);
    case BasisKind::Tag::mu:
      if (!kind.subset || kind.subset->m() != m)
        throw InputError("mu basis needs a subset of [" + std::to_string(m) + "]");
      return SubsetFn::mu(*kind.subset);
    case BasisKind::Tag::coordinate:
      if (!kind.coord)
        throw InputError("coordinate basis needs an element index");
      return SubsetFn::coordinate(m, *kind.coord);
    case BasisKind::Tag::one:
      return SubsetFn::one(m);
  }
  throw InputError("unknown basis kind");
}

SubsetFn mobius(const SubsetFn& f) {
  SubsetFn g = f;
  auto& w = g.mutable_words();
  const int m = f.m();
  // out(a) ^= out(a \ {i}) for every a containing i; addition and subtraction
  // coincide mod 2, so the same butterfly is its own inverse.
  for (int i = 0; i < m && i < 6; ++i)
    for (auto& word : w) word ^= (word & kStageMask[i]) << (1u << i);
  for (int i = 6; i < m; ++i) {
    const std::size_t stride = std::size_t{1} << (i - 6);
    for (std::size_t base = 0; base < w.size(); base += 2 * stride)
      for (std::size_t j = 0; j < stride; ++j) w[base + stride + j] ^= w[base + j];
  }
  return g;
}

std::vector<Subset> support(const SubsetFn& f) {
  std::vector<Subset> out;
  out.reserve(static_cast<std::size_t>(f.support_size()));
  const auto& words = f.words();
  for (std::size_t wi = 0; wi < words.size(); ++wi)
    for (std::uint64_t w = words[wi]; w != 0; w &= w - 1) {
      const std::uint32_t index =
          static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w));
      out.push_back(Subset::from_bits(f.m(), index));
    }
  std::stable_sort(out.begin(), out.end(), card_index_less);
  return out;
}

std::optional<NicenessViolation> niceness_violation(const SubsetFn& f) {
  const auto& words = f.words();
  for (std::size_t wi = 0; wi < words.size(); ++wi)
    for (std::uint64_t w = words[wi]; w != 0; w &= w - 1) {
      const std::uint32_t a =
          static_cast<std::uint32_t>((wi << 6) + std::countr_zero(w));
      for (std::uint32_t rest = a; rest != 0; rest &= rest - 1) {
        const std::uint32_t b = a & ~(rest & -rest);
        if (!f.value_at(b))
          return NicenessViolation{Subset::from_bits(f.m(), a),
                                   Subset::from_bits(f.m(), b)};
      }
    }
  return std::nullopt;
}

bool is_nice(const SubsetFn& f) {
  return f.value_at(0) && !niceness_violation(f);
}

}  // namespace macx
