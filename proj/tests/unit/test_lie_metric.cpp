#include <gtest/gtest.h>

#include "liecurv/catalog.hpp"
#include "liecurv/document.hpp"
#include "liecurv/errors.hpp"
#include "support/generators.hpp"

namespace liecurv {
namespace {

using testing::RandomSource;

const Vector kX = basis_vector(4, 0), kY = basis_vector(4, 1), kZ = basis_vector(4, 2), kW = basis_vector(4, 3);

TEST(ValidateLieAlgebra, Case1IsValid) {
  EXPECT_TRUE(validate_lie_algebra(catalog(CaseId::Case1).data.algebra).ok());
}

TEST(ValidateLieAlgebra, AbelianIsValid) { EXPECT_TRUE(validate_lie_algebra(LieAlgebra(4)).ok()); }

TEST(ValidateLieAlgebra, JacobiViolationPinpointed) {
  // [e1,e2] = e3, [e2,e3] = e1, [e3,e1] = -e1: the cyclic sum for (1,2,3) is -e3.
  LieAlgebra alg(3);
  alg.set_bracket(0, 1, basis_vector(3, 2));
  alg.set_bracket(1, 2, basis_vector(3, 0));
  alg.set_bracket(2, 0, Rational(-1) * basis_vector(3, 0));
  const auto report = validate_lie_algebra(alg);
  ASSERT_FALSE(report.ok());
  const Violation& first = report.violations.front();
  EXPECT_EQ(first.kind, Violation::Kind::Jacobi);
  EXPECT_EQ(first.index, (std::array<std::size_t, 4>{1, 2, 3, 3}));
  EXPECT_EQ(first.value, Rational(-1));
  EXPECT_NE(report.describe().find("Jacobi identity violated at (1,2,3)"), std::string::npos);
}

TEST(ValidateLieAlgebra, AntisymmetryViolation) {
  std::vector<Rational> c(8);
  c[(0 * 2 + 1) * 2 + 0] = 1;  // [e1,e2] = e1 but [e2,e1] = 0
  const auto report = validate_lie_algebra(LieAlgebra::from_constants(2, c));
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().kind, Violation::Kind::Antisymmetry);
  EXPECT_EQ(report.violations.front().index, (std::array<std::size_t, 4>{1, 2, 1, 0}));
}

TEST(Bracket, Case2XZ) { EXPECT_EQ(bracket(catalog(CaseId::Case2).data.algebra, kX, kZ), kX); }

TEST(Bracket, Case4ZW) {
  EXPECT_EQ(bracket(catalog(CaseId::Case4).data.algebra, kZ, kW), Rational(1, 2) * kY);
}

TEST(Bracket, SelfBracketVanishes) {
  RandomSource rng(1);
  for (CaseId id : kAllCases) {
    const Vector u = rng.vector(4);
    EXPECT_TRUE(is_zero(bracket(catalog(id).data.algebra, u, u)));
  }
}

TEST(Bracket, LengthMismatch) { EXPECT_THROW(bracket(LieAlgebra(4), kX, Vector(3)), ShapeError); }

TEST(Bracket, AntisymmetryProperty) {
  RandomSource rng(2);
  for (CaseId id : kAllCases) {
    const LieAlgebra alg = catalog(id).data.algebra;
    for (int trial = 0; trial < 100; ++trial) {
      const Vector u = rng.vector(4), v = rng.vector(4);
      EXPECT_EQ(bracket(alg, u, v), Rational(-1) * bracket(alg, v, u));
    }
  }
}

TEST(Catalog, Case3Brackets) {
  const LieAlgebra alg = catalog("case3").data.algebra;
  EXPECT_EQ(alg.bracket_basis(0, 1), kY);
  EXPECT_EQ(alg.bracket_basis(0, 2), kZ);
  EXPECT_EQ(alg.bracket_basis(0, 3), kW);
  EXPECT_TRUE(is_zero(alg.bracket_basis(1, 2)));
  EXPECT_TRUE(is_zero(alg.bracket_basis(1, 3)));
  EXPECT_TRUE(is_zero(alg.bracket_basis(2, 3)));
}

TEST(Catalog, AbelianIsZero) { EXPECT_TRUE(catalog("abelian").data.algebra.is_abelian()); }

TEST(Catalog, Case4Brackets) {
  const LieAlgebra alg = catalog(CaseId::Case4).data.algebra;
  EXPECT_EQ(alg.bracket_basis(0, 1), kY);
  EXPECT_EQ(alg.bracket_basis(0, 2), Rational(1, 2) * kZ);
  EXPECT_EQ(alg.bracket_basis(0, 3), Rational(1, 2) * kW);
  EXPECT_EQ(alg.bracket_basis(2, 3), Rational(1, 2) * kY);
  EXPECT_TRUE(is_zero(alg.bracket_basis(1, 2)));
  EXPECT_TRUE(is_zero(alg.bracket_basis(1, 3)));
}

TEST(Catalog, Case1AndCase2Brackets) {
  const LieAlgebra c1 = catalog(CaseId::Case1).data.algebra;
  EXPECT_EQ(bracket(c1, kY, kZ), kW);
  EXPECT_EQ(bracket(c1, kZ, kW), kY);
  EXPECT_EQ(bracket(c1, kW, kY), kZ);
  for (const auto& e : {kY, kZ, kW}) EXPECT_TRUE(is_zero(bracket(c1, kX, e)));
  const LieAlgebra c2 = catalog(CaseId::Case2).data.algebra;
  EXPECT_EQ(bracket(c2, kY, kZ), kY);
  EXPECT_EQ(bracket(c2, kX, kW), kY);
  EXPECT_EQ(bracket(c2, kY, kW), Rational(-1) * kX);
  EXPECT_TRUE(is_zero(bracket(c2, kX, kY)));
  EXPECT_TRUE(is_zero(bracket(c2, kZ, kW)));
}

TEST(Catalog, EveryEntryValidWithIdentityMetric) {
  for (CaseId id : kAllCases) {
    const CatalogEntry entry = catalog(id);
    EXPECT_EQ(entry.id, id);
    EXPECT_TRUE(validate_lie_algebra(entry.data.algebra).ok()) << case_name(id);
    EXPECT_TRUE(entry.data.metric.is_identity());
  }
}

TEST(Catalog, UnknownId) {
  EXPECT_THROW(catalog("case5"), NotFoundError);
  EXPECT_FALSE(is_case_name("Case1"));
}

TEST(InnerProduct, RejectsIndefiniteAndAsymmetric) {
  EXPECT_THROW(InnerProduct(Matrix{{1, 0}, {0, -1}}), ValidationError);
  EXPECT_THROW(InnerProduct(Matrix{{1, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(InnerProduct(Matrix{{1, 1}, {1, 1}}), ValidationError);
  const InnerProduct g(Matrix{{2, 1}, {1, 1}});
  EXPECT_EQ(g(Vector{1, 0}, Vector{0, 1}), Rational(1));
  EXPECT_EQ(g.matrix() * g.inverse_matrix(), Matrix::identity(2));
}

TEST(InnerProduct, DimensionMismatch) {
  EXPECT_THROW(MetricLieAlgebra(LieAlgebra(3), InnerProduct::identity(4)), ShapeError);
}

TEST(Document, Case1MatchesCatalog) {
  const std::string doc = R"({
    "dimension": 4,
    "brackets": [
      {"i": 2, "j": 3, "coeffs": {"4": "1"}},
      {"i": 3, "j": 4, "coeffs": {"2": "1"}},
      {"i": 2, "j": 4, "coeffs": {"3": "-1"}}
    ]
  })";
  EXPECT_EQ(load_metric_lie_algebra(doc), catalog(CaseId::Case1).data);
}

TEST(Document, IndefiniteMetric) {
  const std::string doc = R"({"dimension": 2, "brackets": [], "metric": [["1","0"],["0","-1"]]})";
  try {
    load_metric_lie_algebra(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("positive definite"), std::string::npos);
  }
}

TEST(Document, RationalCoefficientStoredExactly) {
  const std::string doc = R"({"dimension": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"2": "7/16"}}]})";
  const MetricLieAlgebra m = load_metric_lie_algebra(doc);
  EXPECT_EQ(m.algebra.c(0, 1, 1), Rational(7, 16));
  EXPECT_EQ(m.algebra.c(1, 0, 1), Rational(-7, 16));
}

TEST(Document, JacobiFailureIsValidationError) {
  const std::string doc = R"({"dimension": 3, "brackets": [
      {"i": 1, "j": 2, "coeffs": {"3": "1"}},
      {"i": 2, "j": 3, "coeffs": {"1": "1"}},
      {"i": 1, "j": 3, "coeffs": {"1": "1"}}]})";
  EXPECT_THROW(load_metric_lie_algebra(doc), ValidationError);
}

TEST(Document, SchemaErrors) {
  for (const char* bad : {
           "not json",
           "[]",
           R"({"brackets": []})",
           R"({"dimension": 0})",
           R"({"dimension": 2, "extra": 1})",
           R"({"dimension": 2, "brackets": [{"i": 2, "j": 1, "coeffs": {}}]})",
           R"({"dimension": 2, "brackets": [{"i": 1, "j": 1, "coeffs": {}}]})",
           R"({"dimension": 2, "brackets": [{"i": 1, "j": 3, "coeffs": {}}]})",
           R"({"dimension": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": 1}}]})",
           R"({"dimension": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"x": "1"}}]})",
           R"({"dimension": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {"1": "1/0"}}]})",
           R"({"dimension": 2, "brackets": [{"i": 1, "j": 2, "coeffs": {}}, {"i": 1, "j": 2, "coeffs": {}}]})",
           R"({"dimension": 2, "metric": [["1","0"]]})",
           R"({"dimension": 2, "complex_structures": [[["0","-1"],["1","0"]]]})",
       }) {
    EXPECT_THROW(parse_document(bad), ParseError) << bad;
  }
}

TEST(Document, ComplexStructuresParsed) {
  const std::string doc = R"({"dimension": 2, "complex_structures": [
      [["0","-1"],["1","0"]], [["0","-1"],["1","0"]], [["1","0"],["0","1"]]]})";
  const LieDocument parsed = parse_document(doc);
  ASSERT_EQ(parsed.complex_structures.size(), 3u);
  EXPECT_EQ(parsed.complex_structures[0], (Matrix{{0, -1}, {1, 0}}));
  EXPECT_EQ(parsed.metric, Matrix::identity(2));
}

TEST(Document, EmitLoadRoundTripCatalog) {
  for (CaseId id : kAllCases) {
    const MetricLieAlgebra m = catalog(id).data;
    const std::string text = emit_document(m);
    EXPECT_EQ(load_metric_lie_algebra(text), m) << case_name(id);
    EXPECT_EQ(emit_document(load_metric_lie_algebra(text)), text);
  }
}

TEST(Document, EmitLoadRoundTripRandom) {
  RandomSource rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const MetricLieAlgebra m = rng.metric_lie_algebra(static_cast<std::size_t>(rng.integer(3, 4)));
    EXPECT_EQ(load_metric_lie_algebra(emit_document(m)), m);
  }
}

}  // namespace
}  // namespace liecurv
