#pragma once

#include <string>
#include <vector>

#include "macx/cell_oracle.hpp"
#include "macx/compress.hpp"
#include "macx/freeness.hpp"
#include "macx/hochster.hpp"
#include "macx/poincare.hpp"
#include "macx/simplicial_complex.hpp"

#include "json.hpp"

namespace macx {

/// Parses the complex input format:
///
///   m = 3
///   maximal_faces = [[1,2],[2,3],[1,3]]
///
/// Blank lines and '#' comments are ignored. Parse failures throw InputError
/// with a line:column diagnostic.
SimplicialComplex parse_complex(const std::string& text,
                                const std::string& source_name = "<input>");
SimplicialComplex load_complex(const std::string& path);

/// Parses the subgroup input format:
///
///   kind = real            # or torus
///   generators = [[1,1,1]]
SubgroupSpec parse_subgroup(const std::string& text,
                            const std::string& source_name = "<input>");
SubgroupSpec load_subgroup(const std::string& path);

std::string format_complex_file(const SimplicialComplex& K);

nlohmann::json subset_to_json(const Subset& a);
nlohmann::json betti_to_json(const BettiTable& table);
nlohmann::json poincare_to_json(const PoincarePolynomial& p);
nlohmann::json certificate_to_json(const CompressionCertificate& cert);
nlohmann::json cross_validation_to_json(const CrossValidationReport& report);
nlohmann::json hc_report_to_json(const HalperinCarlssonReport& report);

}  // namespace macx
