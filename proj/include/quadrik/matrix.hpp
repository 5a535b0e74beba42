#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadrik/rational.hpp"

namespace quadrik {

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  explicit Matrix(std::vector<std::vector<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const std::vector<Rational>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  Matrix transpose() const;
  Matrix scaled(const Rational& s) const;

  /// Gaussian elimination with first-nonzero pivoting.
  Rational determinant() const;
  /// Throws Error(SingularMatrix).
  Matrix inverse() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// lambda * a + mu * b.
Matrix combine(const Rational& lambda, const Matrix& a, const Rational& mu, const Matrix& b);

/// A square matrix with a(i, j) == a(j, i), checked at construction.
class SymmetricMatrix {
 public:
  /// Throws Error(NonSymmetricMatrix) naming the first offending (i, j), i < j.
  explicit SymmetricMatrix(Matrix m);

  std::size_t size() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// S^T M S, which is again symmetric.
  SymmetricMatrix congruent(const Matrix& s) const;

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  Matrix m_;
};

}  // namespace quadrik
