#pragma once

#include <random>
#include <vector>

#include "macx/subset_fn.hpp"

namespace macx {

/// An abstract simplicial complex on [m]: a downward-closed family of
/// subsets (faces) that always contains the empty face. The void complex is
/// not representable; the minimal complex is {empty}. Ghost vertices
/// (elements of [m] in no face) are allowed.
///
/// Internally the face family is held as its indicator SubsetFn together
/// with the inclusion-maximal faces. Immutable after construction.
class SimplicialComplex {
 public:
  /// Downward closure of the generators plus the empty face. Non-maximal and
  /// duplicate generators are dropped.
  static SimplicialComplex from_maximal_faces(int m, const std::vector<Subset>& gens);

  /// Inverse of indicator(); requires is_nice(f), otherwise throws a
  /// NicenessError naming a violating pair.
  static SimplicialComplex from_support(const SubsetFn& f);

  int m() const { return indicator_.m(); }
  const SubsetFn& indicator() const { return indicator_; }
  const std::vector<Subset>& maximal_faces() const { return maximal_faces_; }

  /// All faces, sorted by cardinality then canonical index.
  std::vector<Subset> faces() const { return support(indicator_); }
  std::uint64_t face_count() const { return indicator_.support_size(); }

  bool contains(const Subset& a) const { return indicator_(a); }

  /// max |a| - 1 over faces; -1 for the complex {empty}.
  int dim() const { return dim_; }

  /// Union of all faces.
  Subset vertex_set() const;
  /// Whether every element of [m] is a vertex. The verification reports note
  /// when this fails; it is never enforced.
  bool covers_ground_set() const { return vertex_set() == Subset::full(m()); }

  /// K|_a: the faces contained in a, as a complex on the same ground set.
  SimplicialComplex restriction(const Subset& a) const;

  friend bool operator==(const SimplicialComplex& x, const SimplicialComplex& y) {
    return x.indicator_ == y.indicator_;
  }

 private:
  explicit SimplicialComplex(SubsetFn indicator);

  SubsetFn indicator_;
  std::vector<Subset> maximal_faces_;
  int dim_ = -1;
};

/// Every simplicial complex on [m], each exactly once, ordered by canonical
/// indicator table. Capped at m <= 4 (167 complexes); larger m throws a
/// SizeError.
std::vector<SimplicialComplex> enumerate_complexes(int m);

/// Deterministic pseudo-random complex: the closure of a handful of random
/// generator faces.
SimplicialComplex random_complex(int m, std::mt19937_64& rng);

}  // namespace macx
