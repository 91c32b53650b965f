#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "macx/errors.hpp"

namespace macx {

/// Largest supported ground-set size. Every algorithm in this library walks
/// all 2^m subsets at least once, and a 2^25-bit table is 4 MiB.
inline constexpr int kMaxGroundSet = 25;

inline void check_ground_set_size(int m) {
  if (m < 1 || m > kMaxGroundSet)
    throw SizeError("ground-set size " + std::to_string(m) + " outside [1, " +
                    std::to_string(kMaxGroundSet) + "]");
}

/// A subset of [m] = {1, ..., m}. The canonical index is the integer whose
/// binary digit (i-1) is set iff i is a member; this fixes iteration order
/// everywhere in the library.
class Subset {
 public:
  Subset() = default;

  static Subset empty(int m) { return Subset(m, 0); }

  static Subset full(int m) {
    check_ground_set_size(m);
    return Subset(m, (std::uint32_t{1} << m) - 1);
  }

  static Subset from_bits(int m, std::uint32_t bits) {
    check_ground_set_size(m);
    if (m < 32 && (bits >> m) != 0)
      throw InputError("subset bits contain an element outside [" +
                       std::to_string(m) + "]");
    return Subset(m, bits);
  }

  static Subset of(int m, std::initializer_list<int> elems) {
    return of(m, std::vector<int>(elems));
  }

  static Subset of(int m, const std::vector<int>& elems) {
    check_ground_set_size(m);
    std::uint32_t bits = 0;
    for (int e : elems) {
      if (e < 1 || e > m)
        throw InputError("element " + std::to_string(e) + " outside [" +
                         std::to_string(m) + "]");
      bits |= std::uint32_t{1} << (e - 1);
    }
    return Subset(m, bits);
  }

  int m() const { return m_; }
  std::uint32_t bits() const { return bits_; }

  /// Membership of the 1-based element i.
  bool contains(int i) const { return ((bits_ >> (i - 1)) & 1u) != 0; }

  bool subset_of(const Subset& o) const {
    require_same_m(o);
    return (bits_ & ~o.bits_) == 0;
  }

  Subset unite(const Subset& o) const {
    require_same_m(o);
    return Subset(m_, bits_ | o.bits_);
  }

  Subset intersect(const Subset& o) const {
    require_same_m(o);
    return Subset(m_, bits_ & o.bits_);
  }

  Subset minus(const Subset& o) const {
    require_same_m(o);
    return Subset(m_, bits_ & ~o.bits_);
  }

  Subset with(int i) const {
    require_element(i);
    return Subset(m_, bits_ | (std::uint32_t{1} << (i - 1)));
  }

  Subset without(int i) const {
    require_element(i);
    return Subset(m_, bits_ & ~(std::uint32_t{1} << (i - 1)));
  }

  Subset complement() const {
    return Subset(m_, ~bits_ & ((std::uint32_t{1} << m_) - 1));
  }

  int card() const { return std::popcount(bits_); }

  bool is_empty() const { return bits_ == 0; }

  /// Members in increasing order, 1-based.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(card()));
    for (std::uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) s += ",";
      s += std::to_string(e);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const Subset& a, const Subset& b) {
    return a.m_ == b.m_ && a.bits_ == b.bits_;
  }

 private:
  Subset(int m, std::uint32_t bits) : m_(m), bits_(bits) {}

  void require_same_m(const Subset& o) const {
    if (m_ != o.m_)
      throw InputError("mixing subsets of [" + std::to_string(m_) + "] and [" +
                       std::to_string(o.m_) + "]");
  }

  void require_element(int i) const {
    if (i < 1 || i > m_)
      throw InputError("element " + std::to_string(i) + " outside [" +
                       std::to_string(m_) + "]");
  }

  int m_ = 0;
  std::uint32_t bits_ = 0;
};

/// Order by cardinality first, then by canonical index; the sort key used for
/// every user-visible list of subsets.
inline bool card_index_less(const Subset& a, const Subset& b) {
  if (a.card() != b.card()) return a.card() < b.card();
  return a.bits() < b.bits();
}

}  // namespace macx
