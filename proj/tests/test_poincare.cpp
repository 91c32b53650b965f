#include "doctest.h"

#include <random>

#include "macx/poincare.hpp"
#include "test_util.hpp"

using namespace macx;

namespace {

const std::vector<FieldTag> kBothFields = {FieldTag::GF2, FieldTag::Rational};

SimplicialComplex boundary_simplex(int m) {
  std::vector<Subset> gens;
  for (int i = 1; i <= m; ++i) gens.push_back(Subset::full(m).without(i));
  return SimplicialComplex::from_maximal_faces(m, gens);
}

PoincarePolynomial sphere(unsigned top) {
  PoincarePolynomial p;
  p.add(0, 1);
  p.add(top, 1);
  return p;
}

}  // namespace

TEST_CASE("spheres from the boundary of a simplex") {
  for (FieldTag field : kBothFields)
    for (int m = 2; m <= 6; ++m) {
      const auto K = boundary_simplex(m);
      CHECK(poincare_zk(K, field) == sphere(static_cast<unsigned>(2 * m - 1)));
      CHECK(poincare_rzk(K, field) == sphere(static_cast<unsigned>(m - 1)));
      CHECK(total_dim(poincare_zk(K, field)) == 2);
    }
}

TEST_CASE("contractible cases give the constant polynomial") {
  for (FieldTag field : kBothFields)
    for (int m = 1; m <= 5; ++m) {
      const auto K = SimplicialComplex::from_maximal_faces(m, {Subset::full(m)});
      PoincarePolynomial expected;
      expected.add(0, 1);
      CHECK(poincare_zk(K, field) == expected);
      CHECK(poincare_rzk(K, field) == expected);
      CHECK(total_dim(poincare_zk(K, field)) == 1);
    }
}

TEST_CASE("discrete complex gives tori and point clouds") {
  for (FieldTag field : kBothFields)
    for (int m = 1; m <= 5; ++m) {
      const auto K = SimplicialComplex::from_maximal_faces(m, {});
      // kappa = 0: (S^0)^m, 2^m points in degree 0
      const auto real = poincare_rzk(K, field);
      CHECK(real.coefficient(0) == (std::uint64_t{1} << m));
      CHECK(total_dim(real) == (std::uint64_t{1} << m));
      // kappa = 1: the torus (S^1)^m, binomial coefficients
      const auto torus = poincare_zk(K, field);
      std::uint64_t binom = 1;
      for (int j = 0; j <= m; ++j) {
        CHECK(torus.coefficient(static_cast<unsigned>(j)) == binom);
        binom = binom * static_cast<std::uint64_t>(m - j) /
                static_cast<std::uint64_t>(j + 1);
      }
    }
}

TEST_CASE("heterogeneous degree vectors shift the grading") {
  // boundary of the triangle with kappa = (1,2,3): only beta_{0,empty} and
  // beta_{1,[3]} contribute, the top class lands in degree -1 + (2+3+4).
  const auto K = boundary_simplex(3);
  for (FieldTag field : kBothFields) {
    const auto T = betti_table(K, field);
    const auto p = poincare_generalized(T, DegreeVector{{1, 2, 3}});
    CHECK(p == sphere(8));
    CHECK(total_dim(p) == total_betti_sum(T));
  }
  CHECK_THROWS_AS(
      poincare_generalized(betti_table(K, FieldTag::GF2), DegreeVector{{1, 1}}),
      InputError);
}

TEST_CASE("total dimension equals the betti total for random complexes") {
  std::mt19937_64 rng(91);
  for (int t = 0; t < 12; ++t) {
    const auto K = random_complex(5, rng);
    for (FieldTag field : kBothFields) {
      const auto T = betti_table(K, field);
      const auto zk = poincare_generalized(T, DegreeVector::uniform(5, 1));
      const auto rzk = poincare_generalized(T, DegreeVector::uniform(5, 0));
      CHECK(total_dim(zk) == total_betti_sum(T));
      CHECK(total_dim(rzk) == total_betti_sum(T));
      CHECK(total_dim(zk) == total_dim(rzk));
      CHECK(zk.coefficient(0) == 1);
      CHECK(rzk.coefficient(0) >= 1);
    }
  }
}

TEST_CASE("degree bounds for the moment-angle grading") {
  std::mt19937_64 rng(97);
  for (int t = 0; t < 12; ++t) {
    const auto K = random_complex(4, rng);
    const auto p = poincare_zk(K, FieldTag::GF2);
    for (const auto& [deg, dim] : p.coefficients()) {
      CHECK(deg <= 2 * 4);
      if (K.face_count() < 16) CHECK(deg <= 2 * 4 - 1);
    }
  }
}

TEST_CASE("polynomial formatting") {
  PoincarePolynomial p;
  CHECK(p.to_string() == "0");
  p.add(0, 1);
  CHECK(p.to_string() == "1");
  p.add(5, 1);
  CHECK(p.to_string() == "1 + t^5");
  p.add(1, 3);
  CHECK(p.to_string() == "1 + 3*t + t^5");
  CHECK(p.total() == 5);
  CHECK(p.euler_characteristic() == 1 - 3 - 1);
}
