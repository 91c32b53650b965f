#pragma once

#include "macx/chain_complex.hpp"
#include "macx/field.hpp"
#include "macx/poincare.hpp"
#include "macx/simplicial_complex.hpp"

namespace macx {

/// Per-factor CW model of the pair (X, W):
///   disk2    -- D^2 with one 0-cell, one 1-cell, one 2-cell; W = S^1 is the
///               subcomplex of non-top cells; boundary of the 2-cell is the
///               1-cell.
///   interval -- D^1 with two 0-cells and one 1-cell; W = S^0; boundary of
///               the 1-cell is p_plus - p_minus.
enum class CellModel { disk2, interval };

std::string to_string(CellModel model);

/// Cellular chain complex of the union of product blocks B_sigma over the
/// faces of K inside X^m: the product cells whose set of top-cell factors is
/// a face of K, with the Koszul-signed tensor boundary (signs dropped over
/// GF2). Cells are enumerated in product-lexicographic order. Capped at
/// m <= 7 (at most 3^7 cells); d o d = 0 is verified on the built complex.
ChainComplex<Gf2Matrix> build_complex_gf2(const SimplicialComplex& K, CellModel model);
ChainComplex<RationalMatrix> build_complex_rational(const SimplicialComplex& K,
                                                    CellModel model);

/// Number of product cells of the model (independent of the field).
std::size_t oracle_cell_count(const SimplicialComplex& K, CellModel model);

/// Cohomology dimensions of the model, computed directly from the cellular
/// chain complex (over a field these equal the homology dimensions). This
/// path shares nothing with the Hochster pipeline except exact rank
/// computation, so agreement between the two is meaningful evidence.
PoincarePolynomial oracle_poincare(const SimplicialComplex& K, CellModel model,
                                   FieldTag field);

/// Degree-by-degree comparison of the oracle polynomials against the
/// Hochster-derived ones for both models.
struct ModelComparison {
  PoincarePolynomial oracle_poly;
  PoincarePolynomial hochster_poly;
  bool match = false;
};

struct CrossValidationReport {
  FieldTag field = FieldTag::GF2;
  ModelComparison disk2;     // against poincare_zk
  ModelComparison interval;  // against poincare_rzk
  bool total_dims_equal = false;

  bool ok() const { return disk2.match && interval.match && total_dims_equal; }
};

CrossValidationReport cross_validate(const SimplicialComplex& K, FieldTag field);

}  // namespace macx
