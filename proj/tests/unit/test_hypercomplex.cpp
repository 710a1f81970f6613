#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "liecurv/catalog.hpp"
#include "liecurv/errors.hpp"
#include "liecurv/hypercomplex.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace liecurv {
namespace {

using namespace liecurv::testing;

const Vector kX = basis_vector(4, 0), kY = basis_vector(4, 1), kZ = basis_vector(4, 2), kW = basis_vector(4, 3);

// X -> Y, Y -> -X, Z -> W, W -> -Z
Matrix case3_j1() { return signed_permutation({1, 0, 3, 2}, {1, -1, 1, -1}); }

HypercomplexTriple quaternion_triple() {
  return {AlmostComplexStructure(quaternion_left_multiplication(1)),
          AlmostComplexStructure(quaternion_left_multiplication(2)),
          AlmostComplexStructure(quaternion_left_multiplication(3))};
}

// Direct transcription of N(x,y) = [Jx,Jy] - [x,y] - J([x,Jy] + [Jx,y]).
Vector nijenhuis_oracle(const LieAlgebra& alg, const Matrix& j, const Vector& x, const Vector& y) {
  const Vector jx = j * x, jy = j * y;
  return bracket(alg, jx, jy) - bracket(alg, x, y) - j * (bracket(alg, x, jy) + bracket(alg, jx, y));
}

bool integrable_oracle(const LieAlgebra& alg, const Matrix& j) {
  for (std::size_t a = 0; a < alg.dim(); ++a)
    for (std::size_t b = 0; b < alg.dim(); ++b)
      if (!is_zero(nijenhuis_oracle(alg, j, basis_vector(alg.dim(), a), basis_vector(alg.dim(), b)))) return false;
  return true;
}

TEST(SquareCheck, Examples) {
  const Matrix rot{{0, -1}, {1, 0}};
  Matrix block(4, 4);
  block(0, 1) = -1, block(1, 0) = 1, block(2, 3) = -1, block(3, 2) = 1;
  EXPECT_TRUE(square_check(AlmostComplexStructure(block)));
  EXPECT_TRUE(square_check(AlmostComplexStructure(rot)));
  EXPECT_FALSE(square_check(AlmostComplexStructure(Matrix::identity(4))));
  EXPECT_TRUE(square_check(AlmostComplexStructure(case3_j1())));
  EXPECT_FALSE(square_check(AlmostComplexStructure(Matrix::zero(3, 3))));
  EXPECT_THROW(AlmostComplexStructure(Matrix(2, 3)), ShapeError);
}

TEST(SquareCheck, Case3CandidateMapsBasisAsStated) {
  const AlmostComplexStructure j(case3_j1());
  EXPECT_EQ(j.apply(kX), kY);
  EXPECT_EQ(j.apply(kY), Rational(-1) * kX);
  EXPECT_EQ(j.apply(kZ), kW);
  EXPECT_EQ(j.apply(kW), Rational(-1) * kZ);
}

TEST(QuaternionCheck, StandardTriple) { EXPECT_TRUE(quaternion_check(quaternion_triple())); }

TEST(QuaternionCheck, RepeatedStructureFails) {
  const AlmostComplexStructure j(case3_j1());
  EXPECT_FALSE(quaternion_check({j, j, j}));
}

TEST(QuaternionCheck, Case3SearchedTriple) {
  const auto m = catalog(CaseId::Case3).data;
  const auto found = search_signed_permutation_triples(m, 1);
  ASSERT_EQ(found.size(), 1u);
  const HypercomplexTriple& t = found.front();
  // Independent re-check: anticommutation and J3 = J1 J2 by direct products.
  EXPECT_EQ(t.j1.matrix() * t.j2.matrix() + t.j2.matrix() * t.j1.matrix(), Matrix::zero(4, 4));
  EXPECT_EQ(t.j3.matrix(), t.j1.matrix() * t.j2.matrix());
  EXPECT_TRUE(quaternion_check(t));
  for (const auto* j : {&t.j1, &t.j2, &t.j3}) EXPECT_TRUE(integrable_oracle(m.algebra, j->matrix()));
}

TEST(QuaternionCheck, InvariantUnderConjugationOnAbelian) {
  RandomSource rng(19);
  const HypercomplexTriple base = quaternion_triple();
  for (int trial = 0; trial < 50; ++trial) {
    const Matrix p = rng.invertible(4);
    const Matrix p_inv = inverse(p);
    auto conj = [&](const AlmostComplexStructure& j) { return AlmostComplexStructure(p_inv * j.matrix() * p); };
    const HypercomplexTriple moved{conj(base.j1), conj(base.j2), conj(base.j3)};
    EXPECT_TRUE(quaternion_check(moved));
    const LieAlgebra abelian = RandomSource::change_basis(LieAlgebra(4), p);
    EXPECT_TRUE(abelian.is_abelian());
    for (const auto* j : {&moved.j1, &moved.j2, &moved.j3}) EXPECT_TRUE(is_integrable(abelian, *j));
    // A broken triple stays broken.
    const HypercomplexTriple broken{conj(base.j1), conj(base.j3), conj(base.j2)};
    EXPECT_FALSE(quaternion_check(broken));
  }
}

TEST(Nijenhuis, AbelianVanishes) {
  RandomSource rng(23);
  const LieAlgebra abelian(4);
  for (int trial = 0; trial < 50; ++trial) {
    const AlmostComplexStructure j(rng.matrix(4, 4));
    EXPECT_TRUE(is_zero(nijenhuis(abelian, j, rng.vector(4), rng.vector(4))));
  }
}

TEST(Nijenhuis, Case3HandExpansion) {
  // N(X,Z) = [Y,W] - Z - J1([X,W] + [Y,Z]) = -Z - J1(W) = -Z + Z = 0, and
  // likewise for the remaining basis pairs.
  const LieAlgebra alg = catalog(CaseId::Case3).data.algebra;
  const AlmostComplexStructure j(case3_j1());
  EXPECT_EQ(bracket(alg, kY, kW), Vector(4));
  EXPECT_EQ(j.apply(kW), Rational(-1) * kZ);
  EXPECT_TRUE(is_zero(nijenhuis(alg, j, kX, kZ)));
  const std::array<std::pair<Vector, Vector>, 6> pairs = {
      {{kX, kY}, {kX, kZ}, {kX, kW}, {kY, kZ}, {kY, kW}, {kZ, kW}}};
  for (const auto& [x, y] : pairs) {
    EXPECT_TRUE(is_zero(nijenhuis(alg, j, x, y)));
    EXPECT_EQ(nijenhuis(alg, j, x, y), nijenhuis_oracle(alg, j.matrix(), x, y));
  }
}

TEST(Nijenhuis, DiagonalVanishes) {
  RandomSource rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const LieAlgebra alg = rng.lie_algebra(4);
    const AlmostComplexStructure j(rng.matrix(4, 4));
    const Vector x = rng.vector(4);
    EXPECT_TRUE(is_zero(nijenhuis(alg, j, x, x)));
  }
}

TEST(Nijenhuis, BilinearAndAntisymmetric) {
  RandomSource rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const LieAlgebra alg = rng.lie_algebra(4);
    const AlmostComplexStructure j(rng.matrix(4, 4));
    const Vector x = rng.vector(4), y = rng.vector(4), z = rng.vector(4);
    const Rational a = rng.rational(), b = rng.rational();
    EXPECT_EQ(nijenhuis(alg, j, x, y), Rational(-1) * nijenhuis(alg, j, y, x));
    EXPECT_EQ(nijenhuis(alg, j, a * x + b * z, y), a * nijenhuis(alg, j, x, y) + b * nijenhuis(alg, j, z, y));
  }
}

TEST(Nijenhuis, ShapeMismatch) {
  EXPECT_THROW(nijenhuis(LieAlgebra(4), AlmostComplexStructure(Matrix::identity(2)), kX, kY), ShapeError);
}

TEST(IsIntegrable, Examples) {
  const LieAlgebra case3 = catalog(CaseId::Case3).data.algebra;
  EXPECT_TRUE(is_integrable(LieAlgebra(4), AlmostComplexStructure(case3_j1())));
  EXPECT_TRUE(is_integrable(case3, AlmostComplexStructure(case3_j1())));
  // X -> Z, Z -> -X, Y -> W, W -> -Y; the hand expansion over all six basis
  // pairs gives zero, e.g. N(X,Y) = [Z,W] - Y - J([X,W] + [Z,Y]) = -Y - J(W) = 0.
  const Matrix other = signed_permutation({2, 3, 0, 1}, {1, 1, -1, -1});
  EXPECT_TRUE(integrable_oracle(case3, other));
  EXPECT_TRUE(is_integrable(case3, AlmostComplexStructure(other)));
}

TEST(IsIntegrable, ImpliesVanishingOnRandomVectors) {
  RandomSource rng(43);
  for (CaseId id : kAllCases) {
    const LieAlgebra alg = catalog(id).data.algebra;
    for (const auto& candidate : signed_permutation_complex_structures(4)) {
      const AlmostComplexStructure j(candidate);
      EXPECT_EQ(is_integrable(alg, j), integrable_oracle(alg, candidate));
      if (!is_integrable(alg, j)) continue;
      for (int trial = 0; trial < 5; ++trial) EXPECT_TRUE(is_zero(nijenhuis(alg, j, rng.vector(4), rng.vector(4))));
    }
  }
}

TEST(IsHyperHermitian, Examples) {
  const auto triples = search_signed_permutation_triples(catalog(CaseId::Case3).data, 1);
  ASSERT_FALSE(triples.empty());
  EXPECT_TRUE(is_hyper_hermitian(InnerProduct::identity(4), triples.front()));
  const HypercomplexTriple with_j1{AlmostComplexStructure(case3_j1()), triples.front().j2, triples.front().j3};
  const std::vector<Rational> d{1, 2, 1, 1};
  EXPECT_FALSE(is_hyper_hermitian(InnerProduct(Matrix::diagonal(d)), with_j1));
  EXPECT_TRUE(is_hyper_hermitian(InnerProduct::identity(4), quaternion_triple()));
}

TEST(FullReport, Case3DerivedTriplePasses) {
  const auto m = catalog(CaseId::Case3).data;
  const auto triples = search_signed_permutation_triples(m, 1);
  ASSERT_FALSE(triples.empty());
  const HypercomplexReport report = full_report(m, triples.front());
  EXPECT_TRUE(report.all_passed());
  EXPECT_EQ(report.axioms.size(), 11u);
  EXPECT_EQ(report.first_failure(), nullptr);
}

TEST(FullReport, Case1MisorderedQuaternionTriple) {
  // (L_i, L_k, L_j): L_i L_k = -L_j, so the product axiom is the first to fail.
  const HypercomplexTriple q = quaternion_triple();
  const HypercomplexReport report = full_report(catalog(CaseId::Case1).data, {q.j1, q.j3, q.j2});
  ASSERT_FALSE(report.all_passed());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_EQ(report.first_failure()->axiom, "J1 J2 = J3");
  EXPECT_FALSE(report.first_failure()->counterexample.empty());
}

TEST(FullReport, Case2QuaternionTripleIsNotIntegrable) {
  const HypercomplexReport report = full_report(catalog(CaseId::Case2).data, quaternion_triple());
  ASSERT_NE(report.first_failure(), nullptr);
  EXPECT_EQ(report.first_failure()->axiom, "N = 0 [J2]");
  EXPECT_EQ(report.first_failure()->counterexample, "N(e1, e2) = (0, 0, 0, -2)");
  // Cross-check the counterexample through the oracle.
  EXPECT_EQ(nijenhuis_oracle(catalog(CaseId::Case2).data.algebra, quaternion_left_multiplication(2), kX, kY),
            (Vector{0, 0, 0, -2}));
}

TEST(FullReport, AbelianQuaternionTriplePasses) {
  EXPECT_TRUE(full_report(catalog(CaseId::Abelian).data, quaternion_triple()).all_passed());
}

TEST(Search, CandidatesAreAllSignedPermutationsSquaringToMinusOne) {
  // Independent enumeration: every 4x4 signed permutation matrix.
  std::vector<Matrix> expected;
  std::array<std::size_t, 4> perm{0, 1, 2, 3};
  do {
    for (int signs = 0; signs < 16; ++signs) {
      std::array<int, 4> s{};
      for (int c = 0; c < 4; ++c) s[c] = (signs >> c) & 1 ? -1 : 1;
      const Matrix j = signed_permutation(perm, s);
      if (j * j == -Matrix::identity(4)) expected.push_back(j);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const auto got = signed_permutation_complex_structures(4);
  EXPECT_EQ(got.size(), expected.size());
  for (const auto& j : expected) EXPECT_NE(std::find(got.begin(), got.end(), j), got.end());
  EXPECT_TRUE(signed_permutation_complex_structures(3).empty());
}

TEST(Search, CountsMatchBruteForcePairs) {
  const auto candidates = signed_permutation_complex_structures(4);
  for (CaseId id : kAllCases) {
    const auto m = catalog(id).data;
    std::size_t expected = 0;
    for (const auto& j1 : candidates)
      for (const auto& j2 : candidates) {
        const Matrix j3 = j1 * j2;
        if (j2 * j1 != -j3 || j3 * j3 != -Matrix::identity(4)) continue;
        if (integrable_oracle(m.algebra, j1) && integrable_oracle(m.algebra, j2) && integrable_oracle(m.algebra, j3))
          ++expected;
      }
    const auto found = search_signed_permutation_triples(m);
    EXPECT_EQ(found.size(), expected) << case_name(id);
    EXPECT_GE(found.size(), 1u) << case_name(id);
    for (const auto& t : found) EXPECT_TRUE(full_report(m, t).all_passed());
  }
}

}  // namespace
}  // namespace liecurv
