#include "quadrik/pencil.hpp"

#include <algorithm>
#include <functional>

#include "quadrik/error.hpp"

namespace quadrik {

namespace {

bool linearly_dependent(const Matrix& a, const Matrix& b) {
  if (a.is_zero() || b.is_zero()) return true;
  // Dependent iff every 2x2 minor of the 2 x N^2 coefficient matrix vanishes.
  std::size_t pivot_i = 0;
  std::size_t pivot_j = 0;
  bool found = false;
  for (std::size_t i = 0; i < a.rows() && !found; ++i) {
    for (std::size_t j = 0; j < a.cols() && !found; ++j) {
      if (!a(i, j).is_zero()) {
        pivot_i = i;
        pivot_j = j;
        found = true;
      }
    }
  }
  const Rational& ap = a(pivot_i, pivot_j);
  const Rational& bp = b(pivot_i, pivot_j);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (ap * b(i, j) != bp * a(i, j)) return false;
    }
  }
  return true;
}

}  // namespace

QuadricPencil::QuadricPencil(int n, SymmetricMatrix a, SymmetricMatrix b)
    : n_(n), a_(std::move(a)), b_(std::move(b)) {
  if (n < 2) throw Error(ErrorCode::WrongDimension, "dimension n must be at least 2");
  const auto expected = static_cast<std::size_t>(n) + 3;
  if (a_.size() != expected || b_.size() != expected) {
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(expected) + "x" +
                                             std::to_string(expected) + " matrices for n=" + std::to_string(n));
  }
  if (linearly_dependent(a_.matrix(), b_.matrix())) {
    throw Error(ErrorCode::LinearlyDependentPencil, "quadrics are linearly dependent");
  }
}

Matrix QuadricPencil::member(const Rational& lambda, const Rational& mu) const {
  return combine(lambda, a_.matrix(), mu, b_.matrix());
}

QuadricPencil QuadricPencil::congruent(const Matrix& s) const {
  return QuadricPencil(n_, a_.congruent(s), b_.congruent(s));
}

QuadricPencil QuadricPencil::rebased(const Rational& p, const Rational& q, const Rational& r,
                                     const Rational& s) const {
  if ((p * s - q * r).is_zero()) throw Error(ErrorCode::InvalidArgument, "pencil change must be invertible");
  return QuadricPencil(n_, SymmetricMatrix(member(p, q)), SymmetricMatrix(member(r, s)));
}

std::vector<int> DiscriminantProfile::multiplicities() const {
  std::vector<int> out;
  for (const auto& [m, count] : multiplicity_counts) out.insert(out.end(), static_cast<std::size_t>(count), m);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int DiscriminantProfile::max_multiplicity() const {
  return multiplicity_counts.empty() ? 0 : multiplicity_counts.rbegin()->first;
}

DiscriminantProfile discriminant_profile(const QuadricPencil& pencil, kernels::Execution exec) {
  const int size = static_cast<int>(pencil.size());
  const Polynomial det = kernels::determinant_polynomial(pencil.a().matrix(), pencil.b().matrix(), exec);
  if (det.is_zero()) {
    throw Error(ErrorCode::NonRegularPencil, "det(lambda A + mu B) vanishes identically");
  }
  DiscriminantProfile profile{BinaryForm::homogenize(det, size), squarefree_decomposition(det),
                              size - det.degree(), {}};
  for (const auto& part : profile.finite_part.parts) {
    profile.multiplicity_counts[part.multiplicity] += part.factor.degree();
  }
  if (profile.infinity_multiplicity > 0) profile.multiplicity_counts[profile.infinity_multiplicity] += 1;
  return profile;
}

std::vector<PencilPoint> member_candidates(std::size_t count) {
  std::vector<PencilPoint> out;
  out.reserve(count);
  out.push_back({Rational(1), Rational(0)});
  if (count > 1) out.push_back({Rational(0), Rational(1)});
  for (long k = 1; out.size() < count; ++k) {
    out.push_back({Rational(1), Rational(k)});
    if (out.size() < count) out.push_back({Rational(1), Rational(-k)});
  }
  out.resize(count);
  return out;
}

DiagonalizationResult diagonalizability_test(const QuadricPencil& pencil) {
  return diagonalizability_test(pencil, discriminant_profile(pencil));
}

DiagonalizationResult diagonalizability_test(const QuadricPencil& pencil, const DiscriminantProfile& profile,
                                             kernels::Execution exec) {
  // The form has at most N projective roots, so one of N+1 distinct candidates is a non-root.
  const auto candidates = member_candidates(pencil.size() + 1);
  const auto it = std::find_if(candidates.begin(), candidates.end(), [&](const PencilPoint& c) {
    return !profile.form.evaluate(c.lambda, c.mu).is_zero();
  });
  if (it == candidates.end()) {
    throw Error(ErrorCode::NonRegularPencil, "no nonsingular pencil member among candidates");
  }
  const PencilPoint w = *it;

  // M = (l A + m B)^-1 (m A - l B). For a regular symmetric pencil, congruence
  // diagonalizability over C is equivalent to M being diagonalizable, i.e. to the
  // radical of its characteristic polynomial annihilating M.
  const Matrix m0 = pencil.member(w.lambda, w.mu);
  const Matrix m1 = pencil.member(w.mu, -w.lambda);
  const Matrix m = m0.inverse() * m1;
  const Polynomial charpoly = kernels::characteristic_polynomial(m, exec);
  const Polynomial radical = squarefree_decomposition(charpoly).squarefree_part();

  DiagonalizationResult result;
  result.witness = w;
  result.witness_description = "nonsingular member " + w.lambda.str() + "*A + " + w.mu.str() + "*B";
  result.diagonalizable = kernels::evaluate_at_matrix(radical, m).is_zero();
  if (result.diagonalizable) result.eigenvalue_multiplicities = profile.multiplicities();
  return result;
}

}  // namespace quadrik
