#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "macx/subset.hpp"

namespace macx {

/// A Z/2Z-valued function on the power set of [m], stored as a table of 2^m
/// bits indexed by the canonical subset index. Values are immutable once the
/// function is built; all operations return new functions, so instances can
/// be shared across threads freely.
class SubsetFn {
 public:
  /// The zero function on 2^[m].
  explicit SubsetFn(int m);

  /// delta_a: 1 exactly at a.
  static SubsetFn delta(const Subset& a);
  /// mu_a: 1 exactly on the supersets of a (the constant 1 when a is empty).
  static SubsetFn mu(const Subset& a);
  /// x_i: 1 exactly on the subsets containing i.
  static SubsetFn coordinate(int m, int i);
  /// The constant function 1.
  static SubsetFn one(int m);

  int m() const { return m_; }
  std::uint64_t table_size() const { return std::uint64_t{1} << m_; }

  bool operator()(const Subset& b) const;
  bool value_at(std::uint32_t index) const {
    return ((words_[index >> 6] >> (index & 63)) & 1u) != 0;
  }
  void set_value(std::uint32_t index, bool v);

  /// Pointwise sum mod 2.
  SubsetFn operator+(const SubsetFn& g) const;
  /// Pointwise product.
  SubsetFn operator*(const SubsetFn& g) const;

  bool is_zero() const;
  std::uint64_t support_size() const;

  friend bool operator==(const SubsetFn& f, const SubsetFn& g) {
    return f.m_ == g.m_ && f.words_ == g.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& mutable_words() { return words_; }

 private:
  void require_same_m(const SubsetFn& g) const;

  int m_;
  std::vector<std::uint64_t> words_;
};

/// Tagged description of the standard basis-like functions of 2^[m]*.
struct BasisKind {
  enum class Tag { delta, mu, coordinate, one };

  Tag tag = Tag::one;
  std::optional<Subset> subset;  // present iff tag in {delta, mu}
  std::optional<int> coord;      // present iff tag == coordinate

  static BasisKind delta(const Subset& a) { return {Tag::delta, a, {}}; }
  static BasisKind mu(const Subset& a) { return {Tag::mu, a, {}}; }
  static BasisKind coordinate(int i) { return {Tag::coordinate, {}, i}; }
  static BasisKind one() { return {Tag::one, {}, {}}; }
};

SubsetFn make_basis(const BasisKind& kind, int m);

/// The Z/2Z-valued Moebius transform g(a) = sum_{b subseteq a} f(b) mod 2,
/// computed by the in-place coordinate-by-coordinate butterfly in O(m 2^m)
/// word operations. Self-inverse.
SubsetFn mobius(const SubsetFn& f);

/// Subsets where f = 1, sorted by cardinality then canonical index.
std::vector<Subset> support(const SubsetFn& f);

/// A witness that supp(f) is not downward closed: a face in the support with
/// an immediate subset outside it.
struct NicenessViolation {
  Subset face;
  Subset missing;
};

/// First violation in canonical index order, if any. The zero function has no
/// violating pair but is still not nice; callers must treat empty support
/// separately (is_nice does).
std::optional<NicenessViolation> niceness_violation(const SubsetFn& f);

/// True iff supp(f) is an abstract simplicial complex. The zero function is
/// not nice: a complex always contains the empty face, so a nice f has
/// f(empty) = 1.
bool is_nice(const SubsetFn& f);

}  // namespace macx
