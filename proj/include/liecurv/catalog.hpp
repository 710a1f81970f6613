#pragma once

#include <array>
#include <string>
#include <string_view>

#include "liecurv/lie_algebra.hpp"

namespace liecurv {

// The 4-dimensional Lie algebras carrying an invariant hypercomplex
// structure, each with the metric that makes {X, Y, Z, W} orthonormal.
// Basis order is fixed everywhere: (X, Y, Z, W) = (e1, e2, e3, e4).
//
//   abelian  all brackets zero
//   case1    [Y,Z] = W, [Z,W] = Y, [W,Y] = Z, X central          (R + su(2))
//   case2    [X,Z] = X, [Y,Z] = Y, [X,W] = Y, [Y,W] = -X
//   case3    [X,Y] = Y, [X,Z] = Z, [X,W] = W                     (real hyperbolic)
//   case4    [X,Y] = Y, [X,Z] = 1/2 Z, [X,W] = 1/2 W, [Z,W] = 1/2 Y   (complex hyperbolic)

enum class CaseId { Abelian, Case1, Case2, Case3, Case4 };

inline constexpr std::array<CaseId, 5> kAllCases = {CaseId::Abelian, CaseId::Case1, CaseId::Case2, CaseId::Case3,
                                                    CaseId::Case4};
inline constexpr std::array<std::string_view, 4> kBasisLabels = {"X", "Y", "Z", "W"};

struct CatalogEntry {
  CaseId id;
  MetricLieAlgebra data;
  std::string description;
};

std::string_view case_name(CaseId id);
/// Throws NotFoundError for names outside {abelian, case1, ..., case4}.
CaseId parse_case_id(std::string_view name);
bool is_case_name(std::string_view name);

CatalogEntry catalog(CaseId id);
CatalogEntry catalog(std::string_view name);

}  // namespace liecurv
