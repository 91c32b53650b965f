#include "doctest.h"

#include "macx/gf2_matrix.hpp"
#include "macx/subset_fn.hpp"
#include "test_util.hpp"

using namespace macx;
using macx::testing::naive_mobius;
using macx::testing::random_fn;

TEST_CASE("basis functions match their definitions") {
  SUBCASE("delta is 1 exactly at its subset") {
    const auto f = SubsetFn::delta(Subset::of(2, {1}));
    for (std::uint32_t b = 0; b < 4; ++b) CHECK(f.value_at(b) == (b == 1u));
  }
  SUBCASE("mu of the empty set is the constant one") {
    CHECK(SubsetFn::mu(Subset::empty(3)) == SubsetFn::one(3));
  }
  SUBCASE("mu is the superset indicator") {
    const auto f = SubsetFn::mu(Subset::of(2, {1}));
    CHECK(f(Subset::of(2, {1})));
    CHECK(f(Subset::of(2, {1, 2})));
    CHECK_FALSE(f(Subset::empty(2)));
    CHECK_FALSE(f(Subset::of(2, {2})));
  }
  SUBCASE("coordinate function is membership") {
    const auto x2 = SubsetFn::coordinate(3, 2);
    for (std::uint32_t b = 0; b < 8; ++b) CHECK(x2.value_at(b) == ((b >> 1) & 1u));
  }
  SUBCASE("make_basis dispatches and validates") {
    CHECK(make_basis(BasisKind::delta(Subset::of(2, {1})), 2) ==
          SubsetFn::delta(Subset::of(2, {1})));
    CHECK(make_basis(BasisKind::one(), 3) == SubsetFn::one(3));
    CHECK_THROWS_AS(make_basis(BasisKind::delta(Subset::of(2, {1})), 3), InputError);
    CHECK_THROWS_AS(SubsetFn(0), SizeError);
    CHECK_THROWS_AS(SubsetFn(26), SizeError);
  }
}

TEST_CASE("mobius exchanges the delta and mu bases") {
  for (int m = 1; m <= 6; ++m)
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << m); ++a) {
      const Subset s = Subset::from_bits(m, a);
      CHECK(mobius(SubsetFn::delta(s)) == SubsetFn::mu(s));
      CHECK(mobius(SubsetFn::mu(s)) == SubsetFn::delta(s));
    }
}

TEST_CASE("mobius of the zero function is zero") {
  CHECK(mobius(SubsetFn(5)).is_zero());
}

TEST_CASE("butterfly transform equals the naive definition") {
  std::mt19937_64 rng(7);
  for (int m = 1; m <= 6; ++m) {
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << m); ++a) {
      const Subset s = Subset::from_bits(m, a);
      CHECK(mobius(SubsetFn::delta(s)) == naive_mobius(SubsetFn::delta(s)));
      CHECK(mobius(SubsetFn::mu(s)) == naive_mobius(SubsetFn::mu(s)));
    }
    for (int t = 0; t < 50; ++t) {
      const SubsetFn f = random_fn(m, rng);
      CHECK(mobius(f) == naive_mobius(f));
    }
  }
}

TEST_CASE("mobius is an involution and linear") {
  std::mt19937_64 rng(11);
  for (int m = 1; m <= 4; ++m)
    for (std::uint64_t table = 0; table < (std::uint64_t{1} << (1u << m)); ++table) {
      if (m > 2 && (table % 37 != 0)) continue;  // thin out the larger sweeps
      SubsetFn f(m);
      for (std::uint32_t a = 0; a < f.table_size(); ++a)
        if ((table >> a) & 1u) f.set_value(a, true);
      CHECK(mobius(mobius(f)) == f);
    }
  for (int m = 1; m <= 12; ++m)
    for (int t = 0; t < 30; ++t) {
      const SubsetFn f = random_fn(m, rng), g = random_fn(m, rng);
      CHECK(mobius(mobius(f)) == f);
      CHECK(mobius(f + g) == mobius(f) + mobius(g));
      if (f.value_at(0)) CHECK(mobius(f).value_at(0));
    }
}

TEST_CASE("exhaustive involution at m <= 4") {
  for (int m = 1; m <= 4; ++m) {
    const std::uint32_t n = std::uint32_t{1} << m;
    // all functions for m <= 3, every 11th table for m = 4
    const std::uint64_t step = (m == 4) ? 11 : 1;
    for (std::uint64_t table = 0; table < (std::uint64_t{1} << n); table += step) {
      SubsetFn f(m);
      for (std::uint32_t a = 0; a < n; ++a)
        if ((table >> a) & 1u) f.set_value(a, true);
      REQUIRE(mobius(mobius(f)) == f);
    }
  }
}

TEST_CASE("delta/mu change of basis matrix is a GF2 involution") {
  for (int m = 1; m <= 4; ++m) {
    const std::size_t n = std::size_t{1} << m;
    Gf2Matrix Z(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if ((b & a) == b) Z.set(a, b, true);  // mu_b evaluated at a
    Gf2Matrix I = Gf2Matrix::identity(n);
    const Gf2Matrix Z2 = Z.multiply(Z);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        CHECK(Z2.get(r, c) == I.get(r, c));
  }
}

TEST_CASE("support is sorted by cardinality then index") {
  const auto f = SubsetFn::mu(Subset::of(3, {1, 2}));
  const auto supp = support(f);
  REQUIRE(supp.size() == 2);
  CHECK(supp[0] == Subset::of(3, {1, 2}));
  CHECK(supp[1] == Subset::of(3, {1, 2, 3}));

  CHECK(support(SubsetFn::delta(Subset::of(2, {2}))) ==
        std::vector<Subset>{Subset::of(2, {2})});
  CHECK(support(SubsetFn::one(3)).size() == 8);
}

TEST_CASE("niceness") {
  SubsetFn f(2);
  f.set_value(0, true);
  f.set_value(1, true);
  f.set_value(2, true);
  CHECK(is_nice(f));

  CHECK_FALSE(is_nice(SubsetFn::delta(Subset::of(2, {1, 2}))));
  CHECK(is_nice(SubsetFn::one(3)));
  CHECK_FALSE(is_nice(SubsetFn(3)));  // zero function

  const auto v = niceness_violation(SubsetFn::delta(Subset::of(2, {1, 2})));
  REQUIRE(v.has_value());
  CHECK(v->face == Subset::of(2, {1, 2}));
  CHECK(v->missing.card() == 1);
}

TEST_CASE("subset primitives") {
  const Subset a = Subset::of(5, {1, 3, 4});
  CHECK(a.card() == 3);
  CHECK(a.contains(3));
  CHECK_FALSE(a.contains(2));
  CHECK(a.with(2) == Subset::of(5, {1, 2, 3, 4}));
  CHECK(a.with(3) == a);
  CHECK(a.without(3) == Subset::of(5, {1, 4}));
  CHECK(a.complement() == Subset::of(5, {2, 5}));
  CHECK(a.minus(Subset::of(5, {3, 5})) == Subset::of(5, {1, 4}));
  CHECK(Subset::of(5, {1, 4}).subset_of(a));
  CHECK_FALSE(a.subset_of(Subset::of(5, {1, 4})));
  CHECK(a.elements() == std::vector<int>{1, 3, 4});
  CHECK(a.to_string() == "{1,3,4}");
  CHECK_THROWS_AS(Subset::of(3, {4}), InputError);
  CHECK_THROWS_AS(a.unite(Subset::of(4, {1})), InputError);
}
