#include "quadrik/kernels.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "quadrik/error.hpp"

namespace quadrik::kernels {

int thread_limit() {
  if (const char* env = std::getenv("QUADRIK_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Rational> determinant_values_serial(const Matrix& a, const Matrix& b,
                                                std::span<const Rational> nodes) {
  std::vector<Rational> out;
  out.reserve(nodes.size());
  for (const auto& t : nodes) out.push_back(combine(t, a, Rational(1), b).determinant());
  return out;
}

std::vector<Rational> determinant_values_parallel(const Matrix& a, const Matrix& b,
                                                  std::span<const Rational> nodes) {
  std::vector<Rational> out(nodes.size());
  const long count = static_cast<long>(nodes.size());
#pragma omp parallel for schedule(dynamic) num_threads(thread_limit())
  for (long k = 0; k < count; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    out[idx] = combine(nodes[idx], a, Rational(1), b).determinant();
  }
  return out;
}

std::vector<Rational> determinant_values(const Matrix& a, const Matrix& b,
                                         std::span<const Rational> nodes, Execution exec) {
  return exec == Execution::Parallel ? determinant_values_parallel(a, b, nodes)
                                     : determinant_values_serial(a, b, nodes);
}

Polynomial determinant_polynomial(const Matrix& a, const Matrix& b, Execution exec) {
  if (!a.is_square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::SizeMismatch, "pencil matrices must be square of equal size");
  }
  const auto nodes = interpolation_nodes(a.rows() + 1);
  const auto values = determinant_values(a, b, nodes, exec);
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) points.emplace_back(nodes[k], values[k]);
  return interpolate(points);
}

Polynomial characteristic_polynomial(const Matrix& m, Execution exec) {
  return determinant_polynomial(Matrix::identity(m.rows()), m.scaled(Rational(-1)), exec);
}

Matrix evaluate_at_matrix(const Polynomial& p, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(n, n);
  const Matrix id = Matrix::identity(n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m + id.scaled(p.coefficient(i));
  }
  return acc;
}

}  // namespace quadrik::kernels
