#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "liecurv/lie_algebra.hpp"

namespace liecurv {

// JSON input format (indices 1-based, rationals as "p/q" strings):
//
//   {
//     "dimension": 4,
//     "brackets": [ {"i": 1, "j": 2, "coeffs": {"2": "1"}}, ... ],   // i < j only
//     "metric": [["1","0",...], ...],                                 // optional, default identity
//     "complex_structures": [J1, J2, J3]                              // optional n x n matrices
//   }
//
// Unknown keys, i >= j, repeated pairs and out-of-range indices are parse
// errors. Antisymmetric completion of the bracket table is automatic.

/// A syntactically valid document whose mathematics is not yet checked.
struct LieDocument {
  LieAlgebra algebra;
  Matrix metric;
  std::vector<Matrix> complex_structures;
};

/// Throws ParseError on malformed JSON or schema violations.
LieDocument parse_document(std::string_view text);

/// Parses and validates; throws ParseError or ValidationError (the message
/// carries the validation report or the metric problem).
MetricLieAlgebra load_metric_lie_algebra(std::string_view text);

/// Inverse of parse_document: only nonzero i < j brackets are written and
/// the metric is always explicit. Output is pretty-printed with indent 2.
std::string emit_document(const MetricLieAlgebra& m, std::span<const Matrix> complex_structures = {});

}  // namespace liecurv
