#include "macx/cell_oracle.hpp"

#include <array>
#include <cstdint>
#include <type_traits>

namespace macx {

namespace {

constexpr int kOracleMaxGroundSet = 7;  // 3^7 = 2187 product cells

struct FactorCell {
  int dim;
  bool top;
  // Boundary as (coefficient, target cell code) pairs within the factor.
  std::vector<std::pair<int, int>> boundary;
};

// Cell codes are per-factor indices 0..2; a product cell is the m-digit
// base-3 number with factor 1 as the least significant digit.
std::vector<FactorCell> factor_cells(CellModel model) {
  if (model == CellModel::disk2) {
    // 0: point, 1: edge of the circle, 2: top cell of the disk.
    return {{0, false, {}}, {1, false, {}}, {2, true, {{1, 1}}}};
  }
  // 0: p_minus, 1: p_plus, 2: the interval, oriented from p_minus to p_plus.
  return {{0, false, {}}, {0, false, {}}, {1, true, {{1, 1}, {-1, 0}}}};
}

struct ProductComplex {
  int m = 0;
  std::vector<FactorCell> factor;
  std::vector<std::uint32_t> cells;      // codes of cells present, by dimension
  std::vector<std::size_t> dim_offset;   // cells[dim_offset[d] .. dim_offset[d+1])
  std::vector<std::size_t> position;     // code -> index within its dimension
  int top_dim = 0;

  int cell_dim(std::uint32_t code) const {
    int d = 0;
    for (int i = 0; i < m; ++i, code /= 3) d += factor[code % 3].dim;
    return d;
  }

  std::uint32_t top_set_bits(std::uint32_t code) const {
    std::uint32_t bits = 0;
    for (int i = 0; i < m; ++i, code /= 3)
      if (factor[code % 3].top) bits |= std::uint32_t{1} << i;
    return bits;
  }
};

ProductComplex enumerate_cells(const SimplicialComplex& K, CellModel model) {
  if (K.m() > kOracleMaxGroundSet)
    throw SizeError("the cell oracle is capped at m <= " +
                    std::to_string(kOracleMaxGroundSet));
  ProductComplex pc;
  pc.m = K.m();
  pc.factor = factor_cells(model);
  pc.top_dim = pc.factor[2].dim * pc.m;

  std::uint32_t total = 1;
  for (int i = 0; i < pc.m; ++i) total *= 3;

  std::vector<std::vector<std::uint32_t>> by_dim(
      static_cast<std::size_t>(pc.top_dim) + 1);
  for (std::uint32_t code = 0; code < total; ++code) {
    const std::uint32_t top = pc.top_set_bits(code);
    if (!K.indicator().value_at(top)) continue;
    by_dim[static_cast<std::size_t>(pc.cell_dim(code))].push_back(code);
  }

  pc.position.assign(total, 0);
  pc.dim_offset.assign(by_dim.size() + 1, 0);
  for (std::size_t d = 0; d < by_dim.size(); ++d) {
    pc.dim_offset[d + 1] = pc.dim_offset[d] + by_dim[d].size();
    for (std::size_t j = 0; j < by_dim[d].size(); ++j) {
      pc.position[by_dim[d][j]] = j;
      pc.cells.push_back(by_dim[d][j]);
    }
  }
  return pc;
}

// Koszul rule: d(c_1 x ... x c_m) = sum_i (-1)^{dim c_1 + ... + dim c_{i-1}}
// c_1 x ... x d(c_i) x ... x c_m. Every boundary cell has a smaller top set,
// so it stays inside the complex.
template <class Mat>
ChainComplex<Mat> build_complex_impl(const SimplicialComplex& K, CellModel model) {
  const ProductComplex pc = enumerate_cells(K, model);

  ChainComplex<Mat> C;
  C.bottom_degree = 0;
  for (std::size_t d = 0; d + 1 < pc.dim_offset.size(); ++d)
    C.dims.push_back(pc.dim_offset[d + 1] - pc.dim_offset[d]);
  C.boundaries.emplace_back(0, C.dims[0]);

  for (std::size_t d = 1; d < C.dims.size(); ++d) {
    Mat mat(C.dims[d - 1], C.dims[d]);
    for (std::size_t col = 0; col < C.dims[d]; ++col) {
      const std::uint32_t code = pc.cells[pc.dim_offset[d] + col];
      int sign = 1;
      std::uint32_t power = 1;
      for (int i = 0; i < pc.m; ++i, power *= 3) {
        const int ci = static_cast<int>((code / power) % 3);
        for (const auto& [coef, target] : pc.factor[ci].boundary) {
          const std::uint32_t tcode =
              code - power * static_cast<std::uint32_t>(ci - target);
          const std::size_t row = pc.position[tcode];
          if constexpr (std::is_same_v<Mat, Gf2Matrix>) {
            if (coef % 2 != 0) mat.flip(row, col);
          } else {
            mat.at(row, col) += sign * coef;
          }
        }
        sign = (pc.factor[ci].dim % 2 == 0) ? sign : -sign;
      }
    }
    C.boundaries.push_back(std::move(mat));
  }
  C.validate();
  return C;
}

template <class Mat>
PoincarePolynomial oracle_poincare_impl(const SimplicialComplex& K, CellModel model) {
  const auto h = homology_dims(build_complex_impl<Mat>(K, model));
  PoincarePolynomial p;
  for (std::size_t d = 0; d < h.size(); ++d)
    p.add(static_cast<unsigned>(d), h[d]);
  return p;
}

}  // namespace

std::string to_string(CellModel model) {
  return model == CellModel::disk2 ? "disk2" : "interval";
}

ChainComplex<Gf2Matrix> build_complex_gf2(const SimplicialComplex& K, CellModel model) {
  return build_complex_impl<Gf2Matrix>(K, model);
}

ChainComplex<RationalMatrix> build_complex_rational(const SimplicialComplex& K,
                                                    CellModel model) {
  return build_complex_impl<RationalMatrix>(K, model);
}

std::size_t oracle_cell_count(const SimplicialComplex& K, CellModel model) {
  return enumerate_cells(K, model).cells.size();
}

PoincarePolynomial oracle_poincare(const SimplicialComplex& K, CellModel model,
                                   FieldTag field) {
  return field == FieldTag::GF2 ? oracle_poincare_impl<Gf2Matrix>(K, model)
                                : oracle_poincare_impl<RationalMatrix>(K, model);
}

CrossValidationReport cross_validate(const SimplicialComplex& K, FieldTag field) {
  CrossValidationReport report;
  report.field = field;
  report.disk2.oracle_poly = oracle_poincare(K, CellModel::disk2, field);
  report.disk2.hochster_poly = poincare_zk(K, field);
  report.disk2.match = report.disk2.oracle_poly == report.disk2.hochster_poly;
  report.interval.oracle_poly = oracle_poincare(K, CellModel::interval, field);
  report.interval.hochster_poly = poincare_rzk(K, field);
  report.interval.match = report.interval.oracle_poly == report.interval.hochster_poly;
  report.total_dims_equal =
      total_dim(report.disk2.hochster_poly) == total_dim(report.interval.hochster_poly);
  return report;
}

}  // namespace macx
