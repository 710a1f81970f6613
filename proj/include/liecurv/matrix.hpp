#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "liecurv/rational.hpp"

namespace liecurv {

using Vector = std::vector<Rational>;

/// Zero vector of length n.
Vector zero_vector(std::size_t n);
/// The i-th standard basis vector (0-based) of length n.
Vector basis_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Vector& axpy(Vector& y, const Rational& a, std::span<const Rational> x);  // y += a x
Rational dot(std::span<const Rational> a, std::span<const Rational> b);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Row-wise literal; all rows must have the same length.
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix diagonal(std::span<const Rational> diag);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Vector column(std::size_t c) const;
  [[nodiscard]] Rational trace() const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact product; throws ShapeError when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Rational> v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Rational& s, const Matrix& a);

/// Determinant by fraction-exact Gaussian elimination.
Rational determinant(const Matrix& a);
/// Inverse by Gauss-Jordan elimination; throws std::domain_error if singular.
Matrix inverse(const Matrix& a);
/// Determinants of the k x k upper-left blocks, k = 1..n.
std::vector<Rational> leading_principal_minors(const Matrix& a);

/// Coefficients of det(lambda I - A), lowest degree first; the last entry
/// is the leading coefficient 1. Computed with the Faddeev-LeVerrier
/// recurrence, which stays exact over the rationals.
std::vector<Rational> char_poly(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace liecurv
