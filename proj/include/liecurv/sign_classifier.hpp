#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "liecurv/curvature.hpp"

namespace liecurv {

enum class SignTag { Flat, NonNegative, NonPositive, Mixed, Indeterminate };

std::string_view to_string(SignTag tag);

/// A plane span{u, v} together with its exact sectional curvature.
struct PlaneWitness {
  Vector u;
  Vector v;
  Rational k;
};

struct SignClass {
  SignTag tag = SignTag::Indeterminate;
  /// Set only for Mixed: (positive plane, negative plane).
  std::optional<std::pair<PlaneWitness, PlaneWitness>> witnesses;
};

enum class Semidefinite { Positive, Negative };

/// Exact test via the characteristic polynomial p(t) = sum a_k t^k:
/// PSD iff (-1)^(N-k) a_k >= 0 for all k. The negative case tests -m.
/// Throws ShapeError on non-symmetric input.
bool is_semidefinite(const Matrix& m, Semidefinite sign);

struct ClassifyOptions {
  /// Upper bound on non-basis candidate planes examined by the witness
  /// search. Basis pairs are always examined.
  std::size_t max_candidates = 100000;
};

/// Flat if R = 0; otherwise NonNegative / NonPositive when the curvature
/// operator is semidefinite on all bivectors; otherwise searches planes
/// spanned by {-1,0,1}-coefficient vectors for opposite-sign witnesses.
SignClass classify(const CurvatureTensor& r, const InnerProduct& g, const ClassifyOptions& options = {});
SignClass classify(const MetricLieAlgebra& m, const ClassifyOptions& options = {});

}  // namespace liecurv
