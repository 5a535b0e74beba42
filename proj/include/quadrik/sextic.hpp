#pragma once

#include <array>

#include "quadrik/binary_form.hpp"
#include "quadrik/pencil.hpp"

namespace quadrik {

/// Igusa-Clebsch invariants of a binary sextic f = a0 prod (t - r_i):
///   I2  = a0^2  sum_15 (12)^2(34)^2(56)^2
///   I4  = a0^4  sum_10 (12)^2(23)^2(31)^2(45)^2(56)^2(64)^2
///   I6  = a0^6  sum_60 (12)^2(23)^2(31)^2(45)^2(56)^2(64)^2(14)^2(25)^2(36)^2
///   I10 = a0^10 prod_{i<j} (ij)^2  (the discriminant)
/// evaluated through their coefficient polynomials, so roots at infinity are fine.
/// Under f -> f o g they scale by det(g)^(6k) for I_{2k}.
struct SexticInvariants {
  Rational i2;
  Rational i4;
  Rational i6;
  Rational i10;

  std::array<Rational, 4> as_array() const { return {i2, i4, i6, i10}; }
  friend bool operator==(const SexticInvariants&, const SexticInvariants&) = default;
};

/// Throws Error(WrongDegree) unless f has degree 6.
SexticInvariants sextic_invariants(const BinaryForm& f);

inline constexpr std::array<int, 4> kModuliWeights = {1, 2, 3, 5};

/// A point of the weighted projective space P(1,2,3,5) with coordinates
/// (I2, I4, I6, I10). The boundary divisor is the weight-5 coordinate's zero set.
struct ModuliPoint {
  std::array<Rational, 4> coordinates;
  bool boundary = false;
};

/// Coordinates from the content-normalized discriminant sextic. Throws
/// Error(AllInvariantsZero) if every invariant vanishes.
ModuliPoint moduli_point(const BinaryForm& discriminant);

/// Throws Error(WrongDimension) unless n = 3, Error(NotKEInput) when the
/// intersection admits no KE metric.
ModuliPoint moduli_point(const QuadricPencil& pencil);

/// Equality in P(1,2,3,5) over C: some t != 0 with q_w = t^w p_w for all weights.
/// Throws Error(InvalidArgument) if either point is all zero.
bool weighted_equal(const ModuliPoint& p, const ModuliPoint& q);

}  // namespace quadrik
