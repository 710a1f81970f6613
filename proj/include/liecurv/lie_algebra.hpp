#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "liecurv/matrix.hpp"

namespace liecurv {

/// Finite-dimensional real Lie algebra given by structure constants in a
/// fixed basis e_1..e_n: [e_i, e_j] = sum_k c(i, j, k) e_k.
/// Indices in this API are 0-based; files and reports use 1-based indices.
class LieAlgebra {
 public:
  /// The abelian algebra of the given dimension.
  explicit LieAlgebra(std::size_t dim);

  /// Takes a raw constant table indexed [i][j][k] with no completion or
  /// checking beyond its size. Intended for validation input.
  static LieAlgebra from_constants(std::size_t dim, std::vector<Rational> constants);

  /// Sets [e_i, e_j] = value and [e_j, e_i] = -value. Requires i != j.
  void set_bracket(std::size_t i, std::size_t j, std::span<const Rational> value);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Rational& c(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  /// [e_i, e_j] as a coordinate vector.
  [[nodiscard]] Vector bracket_basis(std::size_t i, std::size_t j) const;
  [[nodiscard]] bool is_abelian() const { return is_zero(constants_); }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> constants_;
};

/// Bilinear extension of the bracket; throws ShapeError on length mismatch.
Vector bracket(const LieAlgebra& alg, std::span<const Rational> u, std::span<const Rational> v);

struct Violation {
  enum class Kind { Antisymmetry, Jacobi };
  Kind kind;
  /// 1-based. Antisymmetry: (i, j, k, 0) with c(i,j,k) + c(j,i,k) != 0.
  /// Jacobi: (i, j, k, l) where the e_l component of the cyclic sum
  /// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] is nonzero.
  std::array<std::size_t, 4> index;
  Rational value;

  [[nodiscard]] std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;  // in lexicographic index order

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] std::string describe() const;
};

ValidationReport validate_lie_algebra(const LieAlgebra& alg);

/// Positive definite symmetric bilinear form, checked exactly on construction.
class InnerProduct {
 public:
  /// Throws ValidationError unless g is symmetric positive definite.
  explicit InnerProduct(Matrix g);
  static InnerProduct identity(std::size_t n) { return InnerProduct(Matrix::identity(n)); }

  [[nodiscard]] std::size_t dim() const { return g_.rows(); }
  [[nodiscard]] const Matrix& matrix() const { return g_; }
  [[nodiscard]] const Matrix& inverse_matrix() const { return g_inv_; }
  [[nodiscard]] bool is_identity() const { return g_ == Matrix::identity(g_.rows()); }
  [[nodiscard]] Rational operator()(std::span<const Rational> u, std::span<const Rational> v) const;

  friend bool operator==(const InnerProduct& a, const InnerProduct& b) { return a.g_ == b.g_; }

 private:
  Matrix g_;
  Matrix g_inv_;
};

/// Empty when g is a valid inner product, otherwise the reason it is not.
std::string inner_product_problem(const Matrix& g);

struct MetricLieAlgebra {
  /// Throws ShapeError when the dimensions differ.
  MetricLieAlgebra(LieAlgebra algebra, InnerProduct metric);

  LieAlgebra algebra;
  InnerProduct metric;

  [[nodiscard]] std::size_t dim() const { return algebra.dim(); }
  friend bool operator==(const MetricLieAlgebra&, const MetricLieAlgebra&) = default;
};

}  // namespace liecurv
