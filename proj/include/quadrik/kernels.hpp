#pragma once

// Evaluation kernels shared by the pencil and batch layers. Each kernel has a
// serial reference and an OpenMP version; the two must agree exactly.

#include <span>
#include <vector>

#include "quadrik/matrix.hpp"
#include "quadrik/polynomial.hpp"

namespace quadrik::kernels {

enum class Execution { Serial, Parallel };

/// Worker count for parallel regions: QUADRIK_THREADS if set and positive,
/// otherwise the OpenMP default.
int thread_limit();

/// det(t * a + b) at every node.
std::vector<Rational> determinant_values_serial(const Matrix& a, const Matrix& b,
                                                std::span<const Rational> nodes);
std::vector<Rational> determinant_values_parallel(const Matrix& a, const Matrix& b,
                                                  std::span<const Rational> nodes);
std::vector<Rational> determinant_values(const Matrix& a, const Matrix& b,
                                         std::span<const Rational> nodes, Execution exec);

/// det(t * a + b) as a polynomial in t, by evaluation at size+1 nodes
/// 0, 1, -1, 2, ... and exact interpolation.
Polynomial determinant_polynomial(const Matrix& a, const Matrix& b,
                                  Execution exec = Execution::Parallel);

/// det(t I - m).
Polynomial characteristic_polynomial(const Matrix& m, Execution exec = Execution::Parallel);

/// p(m) by Horner's rule.
Matrix evaluate_at_matrix(const Polynomial& p, const Matrix& m);

}  // namespace quadrik::kernels
