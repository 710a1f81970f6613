#include "liecurv/lie_algebra.hpp"

#include <sstream>
#include <utility>

#include "liecurv/errors.hpp"

namespace liecurv {

LieAlgebra::LieAlgebra(std::size_t dim) : dim_(dim), constants_(dim * dim * dim) {
  if (dim == 0) throw ShapeError("LieAlgebra: dimension must be positive");
}

LieAlgebra LieAlgebra::from_constants(std::size_t dim, std::vector<Rational> constants) {
  LieAlgebra alg(dim);
  if (constants.size() != dim * dim * dim) throw ShapeError("LieAlgebra: constant table must have n^3 entries");
  alg.constants_ = std::move(constants);
  return alg;
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value) {
  if (i >= dim_ || j >= dim_) throw ShapeError("set_bracket: index out of range");
  if (i == j) throw ShapeError("set_bracket: [e_i, e_i] is always zero");
  if (value.size() != dim_) throw ShapeError("set_bracket: value has wrong length");
  for (std::size_t k = 0; k < dim_; ++k) {
    constants_[(i * dim_ + j) * dim_ + k] = value[k];
    constants_[(j * dim_ + i) * dim_ + k] = -value[k];
  }
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const auto first = constants_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector bracket(const LieAlgebra& alg, std::span<const Rational> u, std::span<const Rational> v) {
  const std::size_t n = alg.dim();
  if (u.size() != n || v.size() != n) throw ShapeError("bracket: vector length does not match dimension");
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!alg.c(i, j, k).is_zero()) out[k] += uv * alg.c(i, j, k);
      }
    }
  }
  return out;
}

std::string Violation::describe() const {
  std::ostringstream os;
  if (kind == Kind::Antisymmetry) {
    os << "antisymmetry violated at (" << index[0] << "," << index[1] << "," << index[2]
       << "): c^" << index[2] << "_{" << index[0] << index[1] << "} + c^" << index[2] << "_{" << index[1]
       << index[0] << "} = " << value;
  } else {
    os << "Jacobi identity violated at (" << index[0] << "," << index[1] << "," << index[2]
       << "): component e" << index[3] << " of the cyclic sum is " << value;
  }
  return os.str();
}

std::string ValidationReport::describe() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.front().describe();
  if (violations.size() > 1) os << " (and " << violations.size() - 1 << " more)";
  return os.str();
}

ValidationReport validate_lie_algebra(const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  ValidationReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = alg.c(i, j, k) + alg.c(j, i, k);
        if (!s.is_zero()) {
          report.violations.push_back({Violation::Kind::Antisymmetry, {i + 1, j + 1, k + 1, 0}, std::move(s)});
        }
      }
  // Jacobi is only meaningful once the table is antisymmetric.
  if (!report.ok()) return report;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational s;
          for (std::size_t m = 0; m < n; ++m) {
            s += alg.c(i, j, m) * alg.c(m, k, l) + alg.c(j, k, m) * alg.c(m, i, l) + alg.c(k, i, m) * alg.c(m, j, l);
          }
          if (!s.is_zero()) {
            report.violations.push_back({Violation::Kind::Jacobi, {i + 1, j + 1, k + 1, l + 1}, std::move(s)});
          }
        }
  return report;
}

std::string inner_product_problem(const Matrix& g) {
  if (!g.is_square() || g.rows() == 0) return "metric must be a non-empty square matrix";
  if (!g.is_symmetric()) return "metric is not symmetric";
  const auto minors = leading_principal_minors(g);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    if (minors[k].sign() <= 0) {
      return "metric is not positive definite: leading principal minor of order " + std::to_string(k + 1) +
             " is " + minors[k].to_string();
    }
  }
  return {};
}

InnerProduct::InnerProduct(Matrix g) : g_(std::move(g)) {
  if (auto problem = inner_product_problem(g_); !problem.empty()) throw ValidationError(problem);
  g_inv_ = inverse(g_);
}

Rational InnerProduct::operator()(std::span<const Rational> u, std::span<const Rational> v) const {
  return dot(u, g_ * v);
}

MetricLieAlgebra::MetricLieAlgebra(LieAlgebra alg, InnerProduct g) : algebra(std::move(alg)), metric(std::move(g)) {
  if (algebra.dim() != metric.dim()) throw ShapeError("MetricLieAlgebra: algebra and metric dimensions differ");
}

}  // namespace liecurv
