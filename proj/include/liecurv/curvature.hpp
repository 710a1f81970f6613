#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "liecurv/lie_algebra.hpp"

namespace liecurv {

/// Levi-Civita connection on left-invariant fields:
/// nabla_{e_i} e_j = sum_k gamma(i, j, k) e_k.
class Connection {
 public:
  Connection(std::size_t dim, std::vector<Rational> gamma);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Rational& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_[(i * dim_ + j) * dim_ + k];
  }
  /// nabla_{e_i} e_j
  [[nodiscard]] Vector covariant_basis(std::size_t i, std::size_t j) const;
  /// nabla_u v for constant-coefficient (left-invariant) u, v.
  [[nodiscard]] Vector covariant(std::span<const Rational> u, std::span<const Rational> v) const;
  [[nodiscard]] bool is_zero() const { return liecurv::is_zero(gamma_); }

 private:
  std::size_t dim_;
  std::vector<Rational> gamma_;
};

/// Solves the Koszul formula
///   2 g(nabla_U V, W) = g([U,V],W) - g([V,W],U) + g([W,U],V)
/// on basis triples and raises the last index with g^{-1}.
Connection levi_civita(const MetricLieAlgebra& m);

/// Riemann tensor R(e_i, e_j) e_k = sum_l r(i, j, k, l) e_l with
///   R(U,V)W = nabla_U nabla_V W - nabla_V nabla_U W - nabla_{[U,V]} W.
class CurvatureTensor {
 public:
  CurvatureTensor(std::size_t dim, std::vector<Rational> components);

  [[nodiscard]] std::size_t dim() const { return dim_; }
  [[nodiscard]] const Rational& r(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
    return r_[((i * dim_ + j) * dim_ + k) * dim_ + l];
  }
  /// R(e_i, e_j) e_k
  [[nodiscard]] Vector apply_basis(std::size_t i, std::size_t j, std::size_t k) const;
  /// R(u, v) w, trilinear.
  [[nodiscard]] Vector apply(std::span<const Rational> u, std::span<const Rational> v,
                             std::span<const Rational> w) const;
  [[nodiscard]] bool is_zero() const { return liecurv::is_zero(r_); }

  friend bool operator==(const CurvatureTensor&, const CurvatureTensor&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> r_;
};

CurvatureTensor riemann(const Connection& conn, const LieAlgebra& alg);

/// g(R(e_i, e_j) e_k, e_l)
Rational lowered(const CurvatureTensor& r, const InnerProduct& g, std::size_t i, std::size_t j, std::size_t k,
                 std::size_t l);

/// R(v, u) u
Vector r_v_u_u(const CurvatureTensor& r, std::span<const Rational> u, std::span<const Rational> v);

/// g(u,u) g(v,v) - g(u,v)^2
Rational gram_determinant(const InnerProduct& g, std::span<const Rational> u, std::span<const Rational> v);

/// K(u, v) = g(R(v,u)u, v) / (g(u,u) g(v,v) - g(u,v)^2).
/// Throws DegeneratePlaneError when u and v are linearly dependent.
Rational sectional(const CurvatureTensor& r, const InnerProduct& g, std::span<const Rational> u,
                   std::span<const Rational> v);

/// K(e_i, e_j) for all i != j; zero diagonal.
Matrix sectional_matrix(const CurvatureTensor& r, const InnerProduct& g);

/// Ric(e_j, e_k) = trace of x -> R(x, e_j) e_k.
Matrix ricci(const CurvatureTensor& r, const InnerProduct& g);

/// g-trace of the Ricci tensor. With an orthonormal basis this is
/// 2 * sum_{i<j} K(e_i, e_j).
Rational scalar(const CurvatureTensor& r, const InnerProduct& g);

/// Index pairs (i, j), i < j, in lexicographic order: (0,1), (0,2), ..., (n-2,n-1).
std::vector<std::pair<std::size_t, std::size_t>> plucker_basis(std::size_t n);

/// Coordinates u_i v_j - u_j v_i of u ^ v over plucker_basis(n).
Vector plucker(std::span<const Rational> u, std::span<const Rational> v);

/// Symmetric form on bivectors with p^T M p = g(R(v,u)u, v) where p = plucker(u, v).
struct CurvatureOperator {
  Matrix m;
  std::vector<std::pair<std::size_t, std::size_t>> basis;
};

CurvatureOperator curvature_operator(const CurvatureTensor& r, const InnerProduct& g);

/// Everything derived from a metric Lie algebra in one pass.
struct CurvatureData {
  Connection connection;
  CurvatureTensor tensor;
  CurvatureOperator op;
  Matrix sectional;
  Matrix ricci;
  Rational scalar;
};

CurvatureData compute_curvature(const MetricLieAlgebra& m);

}  // namespace liecurv
