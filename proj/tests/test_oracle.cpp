#include "doctest.h"

#include <random>

#include "macx/cell_oracle.hpp"
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

TEST_CASE("cell counts") {
  const auto K = boundary_simplex(3);
  CHECK(oracle_cell_count(K, CellModel::interval) == 26);
  CHECK(oracle_cell_count(K, CellModel::disk2) == 26);

  const auto full = SimplicialComplex::from_maximal_faces(3, {Subset::full(3)});
  CHECK(oracle_cell_count(full, CellModel::disk2) == 27);

  const auto points = SimplicialComplex::from_maximal_faces(2, {});
  CHECK(oracle_cell_count(points, CellModel::interval) == 4);

  CHECK_THROWS_AS(
      oracle_cell_count(SimplicialComplex::from_maximal_faces(8, {}), CellModel::disk2),
      SizeError);
}

TEST_CASE("boundary squares to zero in both models and fields") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 10; ++t) {
    const auto K = random_complex(4, rng);
    for (auto model : {CellModel::disk2, CellModel::interval}) {
      CHECK_NOTHROW(build_complex_gf2(K, model).validate());
      CHECK_NOTHROW(build_complex_rational(K, model).validate());
    }
  }
}

TEST_CASE("sphere reproductions from the literal cell complexes") {
  for (FieldTag field : kBothFields)
    for (int m = 2; m <= 5; ++m) {
      const auto K = boundary_simplex(m);
      CHECK(oracle_poincare(K, CellModel::disk2, field) ==
            sphere(static_cast<unsigned>(2 * m - 1)));
      CHECK(oracle_poincare(K, CellModel::interval, field) ==
            sphere(static_cast<unsigned>(m - 1)));
    }
  // boundary of the edge: S^3 and S^1
  const auto K = SimplicialComplex::from_maximal_faces(
      2, {Subset::of(2, {1}), Subset::of(2, {2})});
  CHECK(oracle_poincare(K, CellModel::disk2, FieldTag::GF2) == sphere(3));
  CHECK(oracle_poincare(K, CellModel::interval, FieldTag::GF2) == sphere(1));
}

TEST_CASE("contractible models") {
  for (FieldTag field : kBothFields)
    for (int m = 1; m <= 4; ++m) {
      const auto full = SimplicialComplex::from_maximal_faces(m, {Subset::full(m)});
      PoincarePolynomial expected;
      expected.add(0, 1);
      CHECK(oracle_poincare(full, CellModel::disk2, field) == expected);
      CHECK(oracle_poincare(full, CellModel::interval, field) == expected);
    }
}

TEST_CASE("euler characteristic matches the cell counts") {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 10; ++t) {
    const auto K = random_complex(4, rng);
    for (auto model : {CellModel::disk2, CellModel::interval}) {
      const auto C = build_complex_gf2(K, model);
      long chi_cells = 0;
      for (std::size_t j = 0; j < C.dims.size(); ++j)
        chi_cells += (j % 2 == 0) ? static_cast<long>(C.dims[j])
                                  : -static_cast<long>(C.dims[j]);
      for (FieldTag field : kBothFields)
        CHECK(oracle_poincare(K, model, field).euler_characteristic() == chi_cells);
    }
  }
}

TEST_CASE("oracle agrees with the algebraic pipeline") {
  std::mt19937_64 rng(107);
  SUBCASE("exhaustive at m <= 3") {
    for (int m = 1; m <= 3; ++m)
      for (const auto& K : enumerate_complexes(m))
        for (FieldTag field : kBothFields) {
          const auto report = cross_validate(K, field);
          CHECK(report.ok());
        }
  }
  SUBCASE("random at m = 5") {
    for (int t = 0; t < 5; ++t) {
      const auto K = random_complex(5, rng);
      for (FieldTag field : kBothFields) {
        const auto report = cross_validate(K, field);
        CHECK(report.disk2.match);
        CHECK(report.interval.match);
        CHECK(report.total_dims_equal);
      }
    }
  }
}
