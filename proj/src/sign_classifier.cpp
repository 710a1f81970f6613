#include "liecurv/sign_classifier.hpp"

#include <vector>

#include "liecurv/errors.hpp"

namespace liecurv {

namespace {

// All nonzero vectors with entries in {-1, 0, 1}, first nonzero entry
// positive (a plane does not care about the sign of a spanning vector),
// in lexicographic order over (-1 < 0 < 1).
std::vector<Vector> unit_coefficient_vectors(std::size_t n) {
  std::vector<Vector> out;
  std::vector<int> digits(n, -1);
  while (true) {
    std::size_t first = 0;
    while (first < n && digits[first] == 0) ++first;
    if (first < n && digits[first] > 0) {
      Vector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = digits[i];
      out.push_back(std::move(v));
    }
    std::size_t pos = n;
    while (pos > 0 && digits[pos - 1] == 1) digits[--pos] = -1;
    if (pos == 0) break;
    ++digits[pos - 1];
  }
  return out;
}

struct WitnessSearch {
  const CurvatureTensor& r;
  const InnerProduct& g;
  std::optional<PlaneWitness> positive;
  std::optional<PlaneWitness> negative;

  bool done() const { return positive && negative; }

  void consider(const Vector& u, const Vector& v) {
    if (gram_determinant(g, u, v).is_zero()) return;
    Rational k = sectional(r, g, u, v);
    if (k.sign() > 0 && !positive) positive = PlaneWitness{u, v, std::move(k)};
    else if (k.sign() < 0 && !negative) negative = PlaneWitness{u, v, std::move(k)};
  }
};

}  // namespace

std::string_view to_string(SignTag tag) {
  switch (tag) {
    case SignTag::Flat: return "Flat";
    case SignTag::NonNegative: return "NonNegative";
    case SignTag::NonPositive: return "NonPositive";
    case SignTag::Mixed: return "Mixed";
    case SignTag::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

bool is_semidefinite(const Matrix& m, Semidefinite sign) {
  if (!m.is_symmetric()) throw ShapeError("is_semidefinite: matrix must be square and symmetric");
  const Matrix a = sign == Semidefinite::Positive ? m : -m;
  const auto coeffs = char_poly(a);
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k <= n; ++k) {
    const int s = coeffs[k].sign();
    const bool odd_gap = (n - k) % 2 == 1;
    if ((odd_gap ? -s : s) < 0) return false;
  }
  return true;
}

SignClass classify(const CurvatureTensor& r, const InnerProduct& g, const ClassifyOptions& options) {
  if (r.is_zero()) return {SignTag::Flat, std::nullopt};
  const CurvatureOperator op = curvature_operator(r, g);
  if (is_semidefinite(op.m, Semidefinite::Positive)) return {SignTag::NonNegative, std::nullopt};
  if (is_semidefinite(op.m, Semidefinite::Negative)) return {SignTag::NonPositive, std::nullopt};

  const std::size_t n = r.dim();
  WitnessSearch search{r, g, std::nullopt, std::nullopt};
  for (const auto& [i, j] : plucker_basis(n)) {
    search.consider(basis_vector(n, i), basis_vector(n, j));
    if (search.done()) break;
  }
  if (!search.done()) {
    const auto candidates = unit_coefficient_vectors(n);
    std::size_t examined = 0;
    for (std::size_t a = 0; a < candidates.size() && !search.done(); ++a) {
      for (std::size_t b = a + 1; b < candidates.size() && !search.done(); ++b) {
        if (examined++ >= options.max_candidates) break;
        search.consider(candidates[a], candidates[b]);
      }
      if (examined >= options.max_candidates) break;
    }
  }
  if (search.done()) {
    return {SignTag::Mixed, std::make_pair(std::move(*search.positive), std::move(*search.negative))};
  }
  return {SignTag::Indeterminate, std::nullopt};
}

SignClass classify(const MetricLieAlgebra& m, const ClassifyOptions& options) {
  const CurvatureTensor r = riemann(levi_civita(m), m.algebra);
  return classify(r, m.metric, options);
}

}  // namespace liecurv
