#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liecurv/lie_algebra.hpp"

namespace liecurv {

/// Endomorphism J of the Lie algebra, acting on coordinate vectors as a
/// matrix (column c is J e_c). J^2 = -Id is not assumed; see square_check.
class AlmostComplexStructure {
 public:
  /// Throws ShapeError if j is not square.
  explicit AlmostComplexStructure(Matrix j);

  [[nodiscard]] std::size_t dim() const { return j_.rows(); }
  [[nodiscard]] const Matrix& matrix() const { return j_; }
  [[nodiscard]] Vector apply(std::span<const Rational> x) const { return j_ * x; }

  friend bool operator==(const AlmostComplexStructure&, const AlmostComplexStructure&) = default;

 private:
  Matrix j_;
};

struct HypercomplexTriple {
  AlmostComplexStructure j1;
  AlmostComplexStructure j2;
  AlmostComplexStructure j3;

  friend bool operator==(const HypercomplexTriple&, const HypercomplexTriple&) = default;
};

/// J^2 = -Id exactly. Always false for odd dimension.
bool square_check(const AlmostComplexStructure& j);

/// J1 J2 = J3, J2 J1 = -J3 and each J_i^2 = -Id.
bool quaternion_check(const HypercomplexTriple& t);

/// N(x, y) = [Jx, Jy] - [x, y] - J([x, Jy] + [Jx, y]).
Vector nijenhuis(const LieAlgebra& alg, const AlmostComplexStructure& j, std::span<const Rational> x,
                 std::span<const Rational> y);

/// Nijenhuis tensor vanishes on every basis pair (hence everywhere).
bool is_integrable(const LieAlgebra& alg, const AlmostComplexStructure& j);

/// J_i^T g J_i = g for i = 1, 2, 3.
bool is_hyper_hermitian(const InnerProduct& g, const HypercomplexTriple& t);

struct AxiomResult {
  std::string axiom;
  bool passed = false;
  /// Empty when passed; otherwise the first failing entry or basis pair.
  std::string counterexample;
};

struct HypercomplexReport {
  std::vector<AxiomResult> axioms;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const AxiomResult* first_failure() const;
};

/// Axioms in order: "J^2 = -Id [Ji]" (i = 1..3), "J1 J2 = J3", "J2 J1 = -J3",
/// "N = 0 [Ji]", "hyper-Hermitian [Ji]".
HypercomplexReport full_report(const MetricLieAlgebra& m, const HypercomplexTriple& t);

/// Signed permutation matrices J with J^2 = -Id, in a fixed order.
std::vector<Matrix> signed_permutation_complex_structures(std::size_t n);

/// Triples (J1, J2, J1 J2) of signed permutation matrices passing every
/// axiom of full_report on m. Deterministic order; limit = 0 means no limit.
std::vector<HypercomplexTriple> search_signed_permutation_triples(const MetricLieAlgebra& m, std::size_t limit = 0);

}  // namespace liecurv
