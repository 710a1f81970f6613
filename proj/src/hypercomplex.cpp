#include "liecurv/hypercomplex.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>
#include <utility>

#include "liecurv/errors.hpp"

namespace liecurv {

namespace {

std::string matrix_mismatch(const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t r = 0; r < lhs.rows(); ++r)
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs(r, c) != rhs(r, c)) {
        std::ostringstream os;
        os << "entry (" << r + 1 << "," << c + 1 << "): " << lhs(r, c) << " != " << rhs(r, c);
        return os.str();
      }
  return {};
}

AxiomResult matrix_axiom(std::string name, const Matrix& lhs, const Matrix& rhs) {
  std::string where = matrix_mismatch(lhs, rhs);
  const bool ok = where.empty();
  return {std::move(name), ok, std::move(where)};
}

AxiomResult integrability_axiom(std::string name, const LieAlgebra& alg, const AlmostComplexStructure& j) {
  const std::size_t n = alg.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Vector value = nijenhuis(alg, j, basis_vector(n, a), basis_vector(n, b));
      if (!is_zero(value)) {
        std::ostringstream os;
        os << "N(e" << a + 1 << ", e" << b + 1 << ") = (";
        for (std::size_t k = 0; k < n; ++k) os << (k ? ", " : "") << value[k];
        os << ")";
        return {std::move(name), false, os.str()};
      }
    }
  return {std::move(name), true, {}};
}

AxiomResult hermitian_axiom(std::string name, const InnerProduct& g, const AlmostComplexStructure& j) {
  const Matrix& gm = g.matrix();
  const Matrix pulled = j.matrix().transpose() * gm * j.matrix();
  for (std::size_t a = 0; a < gm.rows(); ++a)
    for (std::size_t b = a; b < gm.cols(); ++b)
      if (pulled(a, b) != gm(a, b)) {
        std::ostringstream os;
        os << "g(J e" << a + 1 << ", J e" << b + 1 << ") = " << pulled(a, b) << " but g(e" << a + 1 << ", e"
           << b + 1 << ") = " << gm(a, b);
        return {std::move(name), false, os.str()};
      }
  return {std::move(name), true, {}};
}

void require_same_dim(const HypercomplexTriple& t) {
  if (t.j1.dim() != t.j2.dim() || t.j1.dim() != t.j3.dim()) {
    throw ShapeError("hypercomplex triple: structures have different dimensions");
  }
}

}  // namespace

AlmostComplexStructure::AlmostComplexStructure(Matrix j) : j_(std::move(j)) {
  if (!j_.is_square()) throw ShapeError("AlmostComplexStructure: matrix must be square");
}

bool square_check(const AlmostComplexStructure& j) {
  if (j.dim() % 2 != 0) return false;
  return j.matrix() * j.matrix() == -Matrix::identity(j.dim());
}

bool quaternion_check(const HypercomplexTriple& t) {
  require_same_dim(t);
  return square_check(t.j1) && square_check(t.j2) && square_check(t.j3) &&
         t.j1.matrix() * t.j2.matrix() == t.j3.matrix() && t.j2.matrix() * t.j1.matrix() == -t.j3.matrix();
}

Vector nijenhuis(const LieAlgebra& alg, const AlmostComplexStructure& j, std::span<const Rational> x,
                 std::span<const Rational> y) {
  if (j.dim() != alg.dim()) throw ShapeError("nijenhuis: structure and algebra dimensions differ");
  const Vector jx = j.apply(x);
  const Vector jy = j.apply(y);
  return bracket(alg, jx, jy) - bracket(alg, x, y) - j.apply(bracket(alg, x, jy) + bracket(alg, jx, y));
}

bool is_integrable(const LieAlgebra& alg, const AlmostComplexStructure& j) {
  return integrability_axiom("N = 0", alg, j).passed;
}

bool is_hyper_hermitian(const InnerProduct& g, const HypercomplexTriple& t) {
  require_same_dim(t);
  if (g.dim() != t.j1.dim()) throw ShapeError("is_hyper_hermitian: metric and structure dimensions differ");
  return hermitian_axiom("", g, t.j1).passed && hermitian_axiom("", g, t.j2).passed &&
         hermitian_axiom("", g, t.j3).passed;
}

bool HypercomplexReport::all_passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed; });
}

const AxiomResult* HypercomplexReport::first_failure() const {
  for (const auto& a : axioms) {
    if (!a.passed) return &a;
  }
  return nullptr;
}

HypercomplexReport full_report(const MetricLieAlgebra& m, const HypercomplexTriple& t) {
  require_same_dim(t);
  if (t.j1.dim() != m.dim()) throw ShapeError("full_report: structure and algebra dimensions differ");
  const std::size_t n = m.dim();
  const Matrix minus_id = -Matrix::identity(n);
  const std::array<const AlmostComplexStructure*, 3> js = {&t.j1, &t.j2, &t.j3};

  HypercomplexReport report;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string tag = " [J" + std::to_string(i + 1) + "]";
    if (n % 2 != 0) {
      report.axioms.push_back({"J^2 = -Id" + tag, false, "odd dimension " + std::to_string(n)});
    } else {
      report.axioms.push_back(matrix_axiom("J^2 = -Id" + tag, js[i]->matrix() * js[i]->matrix(), minus_id));
    }
  }
  report.axioms.push_back(matrix_axiom("J1 J2 = J3", t.j1.matrix() * t.j2.matrix(), t.j3.matrix()));
  report.axioms.push_back(matrix_axiom("J2 J1 = -J3", t.j2.matrix() * t.j1.matrix(), -t.j3.matrix()));
  for (std::size_t i = 0; i < 3; ++i) {
    report.axioms.push_back(integrability_axiom("N = 0 [J" + std::to_string(i + 1) + "]", m.algebra, *js[i]));
  }
  for (std::size_t i = 0; i < 3; ++i) {
    report.axioms.push_back(hermitian_axiom("hyper-Hermitian [J" + std::to_string(i + 1) + "]", m.metric, *js[i]));
  }
  return report;
}

std::vector<Matrix> signed_permutation_complex_structures(std::size_t n) {
  std::vector<Matrix> out;
  if (n % 2 != 0) return out;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const Matrix minus_id = -Matrix::identity(n);
  do {
    // J^2 = -Id forces the permutation to be a fixed-point-free involution.
    bool involution = true;
    for (std::size_t c = 0; c < n && involution; ++c) involution = perm[perm[c]] == c && perm[c] != c;
    if (!involution) continue;
    for (std::size_t signs = 0; signs < (std::size_t{1} << n); ++signs) {
      Matrix j(n, n);
      for (std::size_t c = 0; c < n; ++c) j(perm[c], c) = (signs >> c) & 1U ? -1 : 1;
      if (j * j == minus_id) out.push_back(std::move(j));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<HypercomplexTriple> search_signed_permutation_triples(const MetricLieAlgebra& m, std::size_t limit) {
  const auto candidates = signed_permutation_complex_structures(m.dim());
  std::vector<bool> usable(candidates.size());
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    const AlmostComplexStructure j(candidates[a]);
    usable[a] = is_integrable(m.algebra, j) &&
                hermitian_axiom("", m.metric, j).passed;
  }
  std::vector<HypercomplexTriple> found;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (!usable[a]) continue;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (!usable[b] || a == b) continue;
      const Matrix j3 = candidates[a] * candidates[b];
      if (candidates[b] * candidates[a] != -j3) continue;
      HypercomplexTriple t{AlmostComplexStructure(candidates[a]), AlmostComplexStructure(candidates[b]),
                           AlmostComplexStructure(j3)};
      if (!full_report(m, t).all_passed()) continue;
      found.push_back(std::move(t));
      if (limit != 0 && found.size() >= limit) return found;
    }
  }
  return found;
}

}  // namespace liecurv
