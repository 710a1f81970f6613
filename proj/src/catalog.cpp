#include "liecurv/catalog.hpp"

#include <initializer_list>
#include <string>
#include <utility>

#include "liecurv/errors.hpp"

namespace liecurv {

namespace {

constexpr std::size_t X = 0, Y = 1, Z = 2, W = 3;

struct BracketSpec {
  std::size_t i, j;
  std::initializer_list<std::pair<std::size_t, Rational>> terms;
};

LieAlgebra build(std::initializer_list<BracketSpec> brackets) {
  LieAlgebra alg(4);
  for (const auto& b : brackets) {
    Vector value(4);
    for (const auto& [k, coeff] : b.terms) value[k] += coeff;
    alg.set_bracket(b.i, b.j, value);
  }
  return alg;
}

}  // namespace

std::string_view case_name(CaseId id) {
  switch (id) {
    case CaseId::Abelian: return "abelian";
    case CaseId::Case1: return "case1";
    case CaseId::Case2: return "case2";
    case CaseId::Case3: return "case3";
    case CaseId::Case4: return "case4";
  }
  return "unknown";
}

bool is_case_name(std::string_view name) {
  for (CaseId id : kAllCases) {
    if (case_name(id) == name) return true;
  }
  return false;
}

CaseId parse_case_id(std::string_view name) {
  for (CaseId id : kAllCases) {
    if (case_name(id) == name) return id;
  }
  throw NotFoundError("unknown catalog id '" + std::string(name) + "'");
}

CatalogEntry catalog(CaseId id) {
  switch (id) {
    case CaseId::Abelian:
      return {id, {LieAlgebra(4), InnerProduct::identity(4)}, "abelian R^4"};
    case CaseId::Case1:
      return {id,
              {build({{Y, Z, {{W, 1}}}, {Z, W, {{Y, 1}}}, {W, Y, {{Z, 1}}}}), InnerProduct::identity(4)},
              "[Y,Z]=W, [Z,W]=Y, [W,Y]=Z, X central"};
    case CaseId::Case2:
      return {id,
              {build({{X, Z, {{X, 1}}}, {Y, Z, {{Y, 1}}}, {X, W, {{Y, 1}}}, {Y, W, {{X, -1}}}}),
               InnerProduct::identity(4)},
              "[X,Z]=X, [Y,Z]=Y, [X,W]=Y, [Y,W]=-X"};
    case CaseId::Case3:
      return {id,
              {build({{X, Y, {{Y, 1}}}, {X, Z, {{Z, 1}}}, {X, W, {{W, 1}}}}), InnerProduct::identity(4)},
              "[X,Y]=Y, [X,Z]=Z, [X,W]=W"};
    case CaseId::Case4:
      return {id,
              {build({{X, Y, {{Y, 1}}},
                      {X, Z, {{Z, Rational(1, 2)}}},
                      {X, W, {{W, Rational(1, 2)}}},
                      {Z, W, {{Y, Rational(1, 2)}}}}),
               InnerProduct::identity(4)},
              "[X,Y]=Y, [X,Z]=1/2 Z, [X,W]=1/2 W, [Z,W]=1/2 Y"};
  }
  throw NotFoundError("unknown catalog id");
}

CatalogEntry catalog(std::string_view name) { return catalog(parse_case_id(name)); }

}  // namespace liecurv
