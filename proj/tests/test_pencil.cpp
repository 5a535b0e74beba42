#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "quadrik/error.hpp"
#include "quadrik/kernels.hpp"
#include "quadrik/pencil.hpp"

using namespace quadrik;

namespace {

std::vector<Rational> form_of(const BinaryForm& f) { return {f.coefficients().begin(), f.coefficients().end()}; }

}  // namespace

TEST_CASE("toric discriminant") {
  const auto p = discriminant_profile(fixtures::toric());
  // -(1/64) lambda^2 (mu - lambda)^2 mu^2
  const oracle::Form expected = oracle::form_mul(
      oracle::form_mul({Rational(-1, 64), 0, 0}, {Rational(1), Rational(-2), Rational(1)}), {0, 0, Rational(1)});
  CHECK(form_of(p.form) == expected);
  CHECK(p.multiplicity_counts == MultiplicityCounts{{2, 3}});
  CHECK(p.infinity_multiplicity == 2);  // the mu^2 factor
  CHECK(p.multiplicities() == std::vector<int>{2, 2, 2});
}

TEST_CASE("root at infinity is counted") {
  // A vanishes on two coordinates, so mu^2 divides det(lambda A + mu B)
  const auto pencil = fixtures::diagonal(3, {0, 0, 1, 1, 1, 1}, {1, 1, 1, 2, 3, 4});
  const auto p = discriminant_profile(pencil);
  CHECK(p.infinity_multiplicity == 2);
  CHECK(p.multiplicity_counts == MultiplicityCounts{{1, 4}, {2, 1}});
}

TEST_CASE("discriminant agrees with cofactor expansion") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 30; ++k) {
    const std::size_t size = 5 + rng() % 3;
    const Matrix a = oracle::random_symmetric(rng, size, 4, 2);
    const Matrix b = oracle::random_symmetric(rng, size, 4);
    const QuadricPencil pencil(static_cast<int>(size) - 3, SymmetricMatrix(a), SymmetricMatrix(b));
    CHECK(form_of(discriminant_profile(pencil, kernels::Execution::Serial).form) ==
          oracle::cofactor_determinant(a, b));
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 10; ++k) {
    const Matrix a = oracle::random_symmetric(rng, 7, 5, 3);
    const Matrix b = oracle::random_symmetric(rng, 7, 5);
    const auto nodes = interpolation_nodes(8);
    CHECK(kernels::determinant_values_serial(a, b, nodes) == kernels::determinant_values_parallel(a, b, nodes));
    CHECK(kernels::determinant_polynomial(a, b, kernels::Execution::Serial) ==
          kernels::determinant_polynomial(a, b, kernels::Execution::Parallel));
  }
}

TEST_CASE("characteristic polynomial") {
  const Matrix m(std::vector<std::vector<Rational>>{{2, 1}, {0, 3}});
  const Polynomial chi = kernels::characteristic_polynomial(m);
  CHECK(chi == Polynomial{6, -5, 1});
  CHECK(kernels::evaluate_at_matrix(chi, m).is_zero());
}

TEST_CASE("construction errors") {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code_of([] { fixtures::diagonal(3, {1, 1, 1, 1, 1}, {1, 2, 3, 4, 5}); }) == ErrorCode::SizeMismatch);
  CHECK(code_of([] { fixtures::diagonal(1, {1, 1, 1, 1}, {1, 2, 3, 4}); }) == ErrorCode::WrongDimension);
  CHECK(code_of([] { fixtures::diagonal(2, {1, 1, 1, 1, 1}, {2, 2, 2, 2, 2}); }) ==
        ErrorCode::LinearlyDependentPencil);
  CHECK(code_of([] { fixtures::diagonal(2, {0, 0, 0, 0, 0}, {1, 2, 3, 4, 5}); }) ==
        ErrorCode::LinearlyDependentPencil);
  // both quadrics miss the last coordinate
  CHECK(code_of([] { discriminant_profile(fixtures::diagonal(2, {1, 1, 1, 1, 0}, {1, 2, 3, 4, 0})); }) ==
        ErrorCode::NonRegularPencil);
}

TEST_CASE("diagonalizability") {
  CHECK(diagonalizability_test(fixtures::smooth3()).diagonalizable);
  CHECK(diagonalizability_test(fixtures::toric()).diagonalizable);
  CHECK(diagonalizability_test(fixtures::cp3_z2()).diagonalizable);
  const auto j = diagonalizability_test(fixtures::jordan3());
  CHECK_FALSE(j.diagonalizable);
  // the nilpotent block is a double root that is not semisimple
  CHECK(discriminant_profile(fixtures::jordan3()).multiplicity_counts == MultiplicityCounts{{1, 4}, {2, 1}});

  // A singular: the witness must be some other member
  const auto r = diagonalizability_test(fixtures::diagonal(3, {0, 1, 1, 1, 1, 1}, {1, 0, 1, 2, 3, 4}));
  CHECK(r.diagonalizable);
  CHECK_FALSE(r.witness == PencilPoint{Rational(1), Rational(0)});
  CHECK(r.eigenvalue_multiplicities == std::vector<int>{1, 1, 1, 1, 1, 1});
}

TEST_CASE("congruence preserves the discriminant up to det(S)^2") {
  std::mt19937_64 rng(23);
  const auto base = fixtures::toric();
  const auto f = discriminant_profile(base).form;
  for (int k = 0; k < 10; ++k) {
    const Matrix s = oracle::random_invertible(rng, 6, 2);
    const auto g = discriminant_profile(base.congruent(s)).form;
    const Rational d = s.determinant();
    for (int i = 0; i <= 6; ++i) CHECK(g.coefficient(i) == f.coefficient(i) * d * d);
  }
}
