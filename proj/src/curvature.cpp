#include "liecurv/curvature.hpp"

#include <utility>

#include "liecurv/errors.hpp"

namespace liecurv {

Connection::Connection(std::size_t dim, std::vector<Rational> gamma) : dim_(dim), gamma_(std::move(gamma)) {
  if (gamma_.size() != dim_ * dim_ * dim_) throw ShapeError("Connection: expected n^3 coefficients");
}

Vector Connection::covariant_basis(std::size_t i, std::size_t j) const {
  const auto first = gamma_.begin() + static_cast<std::ptrdiff_t>((i * dim_ + j) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector Connection::covariant(std::span<const Rational> u, std::span<const Rational> v) const {
  if (u.size() != dim_ || v.size() != dim_) throw ShapeError("covariant: vector length does not match dimension");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!gamma(i, j, k).is_zero()) out[k] += uv * gamma(i, j, k);
      }
    }
  }
  return out;
}

Connection levi_civita(const MetricLieAlgebra& m) {
  const std::size_t n = m.dim();
  const LieAlgebra& alg = m.algebra;
  const Matrix& g = m.metric.matrix();

  // lowered(i,j,k) = g(nabla_i e_j, e_k); with a_{ijk} := g([e_i,e_j], e_k),
  // 2 lowered(i,j,k) = a_{ijk} - a_{jki} + a_{kij}.
  std::vector<Rational> a(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Rational s;
        for (std::size_t l = 0; l < n; ++l) {
          if (!alg.c(i, j, l).is_zero()) s += alg.c(i, j, l) * g(l, k);
        }
        a[(i * n + j) * n + k] = std::move(s);
      }
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return a[(i * n + j) * n + k]; };

  const Rational half(1, 2);
  const Matrix& g_inv = m.metric.inverse_matrix();
  const bool orthonormal = m.metric.is_identity();
  std::vector<Rational> gamma(n * n * n);
  Vector low(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) low[k] = half * (at(i, j, k) - at(j, k, i) + at(k, i, j));
      for (std::size_t l = 0; l < n; ++l) {
        Rational& out = gamma[(i * n + j) * n + l];
        if (orthonormal) {
          out = low[l];
          continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (!low[k].is_zero()) out += g_inv(l, k) * low[k];
        }
      }
    }
  return Connection(n, std::move(gamma));
}

CurvatureTensor::CurvatureTensor(std::size_t dim, std::vector<Rational> components)
    : dim_(dim), r_(std::move(components)) {
  if (r_.size() != dim_ * dim_ * dim_ * dim_) throw ShapeError("CurvatureTensor: expected n^4 components");
}

Vector CurvatureTensor::apply_basis(std::size_t i, std::size_t j, std::size_t k) const {
  const auto first = r_.begin() + static_cast<std::ptrdiff_t>(((i * dim_ + j) * dim_ + k) * dim_);
  return Vector(first, first + static_cast<std::ptrdiff_t>(dim_));
}

Vector CurvatureTensor::apply(std::span<const Rational> u, std::span<const Rational> v,
                              std::span<const Rational> w) const {
  if (u.size() != dim_ || v.size() != dim_ || w.size() != dim_) {
    throw ShapeError("CurvatureTensor::apply: vector length does not match dimension");
  }
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i == j || v[j].is_zero()) continue;
      const Rational uv = u[i] * v[j];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (w[k].is_zero()) continue;
        const Rational uvw = uv * w[k];
        for (std::size_t l = 0; l < dim_; ++l) {
          if (!r(i, j, k, l).is_zero()) out[l] += uvw * r(i, j, k, l);
        }
      }
    }
  }
  return out;
}

CurvatureTensor riemann(const Connection& conn, const LieAlgebra& alg) {
  const std::size_t n = alg.dim();
  if (conn.dim() != n) throw ShapeError("riemann: connection and algebra dimensions differ");
  // R^l_{ijk} = sum_m ( G^m_{jk} G^l_{im} - G^m_{ik} G^l_{jm} - c^m_{ij} G^l_{mk} )
  std::vector<Rational> comps(n * n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          Rational s;
          for (std::size_t m = 0; m < n; ++m) {
            if (!conn.gamma(j, k, m).is_zero() && !conn.gamma(i, m, l).is_zero())
              s += conn.gamma(j, k, m) * conn.gamma(i, m, l);
            if (!conn.gamma(i, k, m).is_zero() && !conn.gamma(j, m, l).is_zero())
              s -= conn.gamma(i, k, m) * conn.gamma(j, m, l);
            if (!alg.c(i, j, m).is_zero() && !conn.gamma(m, k, l).is_zero())
              s -= alg.c(i, j, m) * conn.gamma(m, k, l);
          }
          comps[((i * n + j) * n + k) * n + l] = std::move(s);
        }
    }
  return CurvatureTensor(n, std::move(comps));
}

Rational lowered(const CurvatureTensor& r, const InnerProduct& g, std::size_t i, std::size_t j, std::size_t k,
                 std::size_t l) {
  const std::size_t n = r.dim();
  Rational s;
  for (std::size_t m = 0; m < n; ++m) {
    if (!r.r(i, j, k, m).is_zero()) s += r.r(i, j, k, m) * g.matrix()(m, l);
  }
  return s;
}

Vector r_v_u_u(const CurvatureTensor& r, std::span<const Rational> u, std::span<const Rational> v) {
  return r.apply(v, u, u);
}

Rational gram_determinant(const InnerProduct& g, std::span<const Rational> u, std::span<const Rational> v) {
  const Rational uv = g(u, v);
  return g(u, u) * g(v, v) - uv * uv;
}

Rational sectional(const CurvatureTensor& r, const InnerProduct& g, std::span<const Rational> u,
                   std::span<const Rational> v) {
  if (u.size() != r.dim() || v.size() != r.dim() || g.dim() != r.dim()) {
    throw ShapeError("sectional: dimension mismatch");
  }
  const Rational gram = gram_determinant(g, u, v);
  if (gram.is_zero()) throw DegeneratePlaneError("sectional: u and v do not span a plane");
  return g(r_v_u_u(r, u, v), v) / gram;
}

Matrix sectional_matrix(const CurvatureTensor& r, const InnerProduct& g) {
  const std::size_t n = r.dim();
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      k(i, j) = sectional(r, g, basis_vector(n, i), basis_vector(n, j));
      k(j, i) = k(i, j);
    }
  return k;
}

Matrix ricci(const CurvatureTensor& r, const InnerProduct& g) {
  const std::size_t n = r.dim();
  if (g.dim() != n) throw ShapeError("ricci: dimension mismatch");
  Matrix ric(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      Rational s;
      for (std::size_t i = 0; i < n; ++i) s += r.r(i, j, k, i);
      ric(j, k) = std::move(s);
    }
  return ric;
}

Rational scalar(const CurvatureTensor& r, const InnerProduct& g) {
  const Matrix ric = ricci(r, g);
  const Matrix& g_inv = g.inverse_matrix();
  Rational s;
  for (std::size_t j = 0; j < ric.rows(); ++j)
    for (std::size_t k = 0; k < ric.cols(); ++k) {
      if (!ric(j, k).is_zero()) s += g_inv(j, k) * ric(j, k);
    }
  return s;
}

std::vector<std::pair<std::size_t, std::size_t>> plucker_basis(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) basis.emplace_back(i, j);
  return basis;
}

Vector plucker(std::span<const Rational> u, std::span<const Rational> v) {
  if (u.size() != v.size()) throw ShapeError("plucker: length mismatch");
  Vector p;
  for (const auto& [i, j] : plucker_basis(u.size())) p.push_back(u[i] * v[j] - u[j] * v[i]);
  return p;
}

CurvatureOperator curvature_operator(const CurvatureTensor& r, const InnerProduct& g) {
  // g(R(v,u)u, v) = sum v_i u_j u_k v_l R_{ijkl}; grouping the antisymmetric
  // pairs gives -sum_{i<j, k<l} p_{ij} p_{kl} R_{ijkl}.
  CurvatureOperator op{Matrix(), plucker_basis(r.dim())};
  const std::size_t count = op.basis.size();
  op.m = Matrix(count, count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const auto [i, j] = op.basis[a];
      const auto [k, l] = op.basis[b];
      op.m(a, b) = -lowered(r, g, i, j, k, l);
    }
  return op;
}

CurvatureData compute_curvature(const MetricLieAlgebra& m) {
  Connection conn = levi_civita(m);
  CurvatureTensor r = riemann(conn, m.algebra);
  CurvatureOperator op = curvature_operator(r, m.metric);
  Matrix k = sectional_matrix(r, m.metric);
  Matrix ric = ricci(r, m.metric);
  Rational s = scalar(r, m.metric);
  return {std::move(conn), std::move(r), std::move(op), std::move(k), std::move(ric), std::move(s)};
}

}  // namespace liecurv
