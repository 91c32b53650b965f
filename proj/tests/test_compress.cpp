#include "doctest.h"

#include <random>
#include <set>

#include "macx/compress.hpp"
#include "macx/simplicial_complex.hpp"
#include "test_util.hpp"

using namespace macx;
using macx::testing::random_fn;
using macx::testing::random_nice_fn;

namespace {

SubsetFn boundary_triangle_fn() {
  return SimplicialComplex::from_maximal_faces(
             3, {Subset::of(3, {1, 2}), Subset::of(3, {2, 3}), Subset::of(3, {1, 3})})
      .indicator();
}

// All final faces reachable by varying the order of compression steps.
void reachable_final_faces(const SubsetFn& f, std::set<std::uint32_t>& out) {
  bool extendable = false;
  for (int k = 1; k <= f.m(); ++k) {
    if (!(f.value_at(std::uint32_t{1} << (k - 1)))) continue;
    bool hits = false;
    const SubsetFn mob = mobius(f);
    for (std::uint32_t a = 0; a < f.table_size() && !hits; ++a)
      if (((a >> (k - 1)) & 1u) && mob.value_at(a)) hits = true;
    if (!hits) continue;
    extendable = true;
    reachable_final_faces(compress_op(f, k), out);
  }
  if (!extendable) {
    std::uint32_t a0 = 0;
    for (std::uint32_t a = 0; a < f.table_size(); ++a)
      if (f.value_at(a)) a0 |= a;
    out.insert(a0);
  }
}

}  // namespace

TEST_CASE("epsilon adjoins an element") {
  CHECK(epsilon_k(Subset::of(3, {1}), 2) == Subset::of(3, {1, 2}));
  CHECK(epsilon_k(Subset::of(3, {2}), 2) == Subset::of(3, {2}));
  CHECK(epsilon_k(Subset::empty(3), 1) == Subset::of(3, {1}));
}

TEST_CASE("compression operator on the mu basis") {
  for (int m = 1; m <= 5; ++m)
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits)
      for (int k = 1; k <= m; ++k) {
        const Subset a = Subset::from_bits(m, bits);
        CHECK(compress_op(SubsetFn::mu(a), k) == SubsetFn::mu(a.without(k)));
      }
}

TEST_CASE("compressing the point indicator kills it") {
  for (int k = 1; k <= 3; ++k)
    CHECK(compress_op(SubsetFn::delta(Subset::empty(3)), k).is_zero());
}

TEST_CASE("compression preserves niceness and shrinks support") {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    const SubsetFn f = random_nice_fn(5, rng);
    for (int k = 1; k <= 5; ++k) {
      if (!f(Subset::empty(5).with(k))) continue;
      const SubsetFn g = compress_op(f, k);
      CHECK(is_nice(g));
      CHECK(g.support_size() <= f.support_size());
      for (std::uint32_t a = 0; a < f.table_size(); ++a)
        if (g.value_at(a)) CHECK(f.value_at(a));
    }
  }
}

TEST_CASE("dual operator moves deltas and annihilates the coordinate") {
  std::mt19937_64 rng(67);
  for (int m = 2; m <= 5; ++m)
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits)
      for (int k = 1; k <= m; ++k) {
        const Subset a = Subset::from_bits(m, bits);
        CHECK(dual_compress_op(SubsetFn::delta(a), k) ==
              SubsetFn::delta(a.without(k)));
      }
  for (int t = 0; t < 50; ++t) {
    const SubsetFn g = random_fn(5, rng);
    const int k = 1 + static_cast<int>(rng() % 5);
    CHECK((dual_compress_op(g, k) * SubsetFn::coordinate(5, k)).is_zero());
    CHECK(dual_compress_op(g, k).support_size() <= g.support_size());
    // conjugation identities
    CHECK(dual_compress_op(g, k) == mobius(compress_op(mobius(g), k)));
    CHECK(mobius(compress_op(g, k)) == dual_compress_op(mobius(g), k));
  }
}

TEST_CASE("extendability") {
  const SubsetFn f = boundary_triangle_fn();
  for (int k = 1; k <= 3; ++k) CHECK(is_extendable(f, k));

  for (int m = 2; m <= 5; ++m)
    for (int k = 1; k <= m; ++k) {
      CHECK_FALSE(is_extendable(SubsetFn::one(m), k));
      CHECK_FALSE(is_extendable(SubsetFn::delta(Subset::empty(m)), k));
    }

  CHECK_THROWS_AS(is_extendable(SubsetFn(3), 1), NicenessError);
  CHECK_THROWS_AS(is_extendable(boundary_triangle_fn(), 4), InputError);
}

TEST_CASE("unequal after compression when the transform hits the coordinate") {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 60; ++t) {
    const SubsetFn f = random_nice_fn(5, rng);
    const SubsetFn mob = mobius(f);
    for (int k = 1; k <= 5; ++k) {
      if ((mob * SubsetFn::coordinate(5, k)).is_zero()) continue;
      CHECK_FALSE(compress_op(f, k) == f);
    }
  }
}

TEST_CASE("certificates of the named examples") {
  SUBCASE("boundary triangle") {
    for (auto policy : {CompressionPolicy::smallest_k, CompressionPolicy::greedy_support}) {
      const auto cert = compress(boundary_triangle_fn(), policy);
      CHECK(cert.final_face.card() == 2);
      CHECK(boundary_triangle_fn()(cert.final_face));
      CHECK(cert.bound == 2);
      CHECK(cert.mobius_support_size == 2);
      CHECK(cert.holds());
      CHECK_FALSE(cert.steps.empty());
    }
  }
  SUBCASE("constant one needs no steps") {
    for (int m = 1; m <= 5; ++m) {
      const auto cert = compress(SubsetFn::one(m));
      CHECK(cert.steps.empty());
      CHECK(cert.final_face == Subset::full(m));
      CHECK(cert.bound == 1);
      CHECK(cert.mobius_support_size == 1);
    }
  }
  SUBCASE("point complex is already terminal with full bound") {
    for (int m = 1; m <= 5; ++m) {
      const auto cert = compress(SubsetFn::delta(Subset::empty(m)));
      CHECK(cert.steps.empty());
      CHECK(cert.final_face == Subset::empty(m));
      CHECK(cert.bound == (std::uint64_t{1} << m));
      CHECK(cert.mobius_support_size == (std::uint64_t{1} << m));
    }
  }
  SUBCASE("rejects non-nice input") {
    CHECK_THROWS_AS(compress(SubsetFn::delta(Subset::of(2, {1, 2}))), NicenessError);
  }
}

TEST_CASE("certificate soundness on random functions") {
  std::mt19937_64 rng(73);
  for (int m = 2; m <= 8; ++m)
    for (int t = 0; t < 25; ++t) {
      const SubsetFn f = random_nice_fn(m, rng);
      for (auto policy :
           {CompressionPolicy::smallest_k, CompressionPolicy::greedy_support}) {
        const auto cert = compress(f, policy);
        CHECK(cert.holds());
        CHECK(f(cert.final_face));  // a_0 is a face of the original complex
        CHECK(cert.bound ==
              (std::uint64_t{1} << (m - cert.final_face.card())));
      }
    }
}

TEST_CASE("support of f and of its transform are dual power sets") {
  for (int m = 1; m <= 5; ++m)
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << m); ++bits) {
      const Subset a = Subset::from_bits(m, bits);
      // supp(f) = 2^a  =>  supp(M(f)) = 2^{complement}
      SubsetFn f(m);
      for (std::uint32_t b = 0; b < f.table_size(); ++b)
        if ((b & ~bits) == 0) f.set_value(b, true);
      const SubsetFn g = mobius(f);
      const std::uint32_t comp = a.complement().bits();
      for (std::uint32_t b = 0; b < g.table_size(); ++b)
        CHECK(g.value_at(b) == ((b & ~comp) == 0));
      CHECK(g.support_size() == (std::uint64_t{1} << (m - a.card())));
    }
}

TEST_CASE("non-extendable characterization, both directions") {
  std::mt19937_64 rng(79);
  for (int m = 1; m <= 4; ++m)
    for (const auto& K : enumerate_complexes(m))
      CHECK(check_non_extendable_characterization(K.indicator()));
  for (int t = 0; t < 50; ++t)
    CHECK(check_non_extendable_characterization(random_nice_fn(6, rng)));
}

TEST_CASE("reachable final faces are exactly the maximal faces") {
  // Stated without proof in the source material; verified exhaustively here.
  for (int m = 1; m <= 4; ++m)
    for (const auto& K : enumerate_complexes(m)) {
      std::set<std::uint32_t> reachable;
      reachable_final_faces(K.indicator(), reachable);
      std::set<std::uint32_t> maximal;
      for (const Subset& a : K.maximal_faces()) maximal.insert(a.bits());
      CHECK(reachable == maximal);
    }
}

TEST_CASE("monotone decrease along the compression run") {
  std::mt19937_64 rng(83);
  for (int t = 0; t < 30; ++t) {
    SubsetFn f = random_nice_fn(6, rng);
    std::uint64_t supp = f.support_size();
    std::uint64_t msupp = mobius(f).support_size();
    for (;;) {
      int k = 0;
      for (int c = 1; c <= 6 && k == 0; ++c) {
        if (!f.value_at(std::uint32_t{1} << (c - 1))) continue;
        if (!(mobius(f) * SubsetFn::coordinate(6, c)).is_zero()) k = c;
      }
      if (k == 0) break;
      f = compress_op(f, k);
      CHECK(f.support_size() < supp);
      CHECK(mobius(f).support_size() <= msupp);
      supp = f.support_size();
      msupp = mobius(f).support_size();
    }
  }
}
