#pragma once

#include <vector>

#include "quadrik/pencil.hpp"

namespace fixtures {

using quadrik::Matrix;
using quadrik::QuadricPencil;
using quadrik::Rational;
using quadrik::SymmetricMatrix;

inline Matrix diag(const std::vector<int>& d) {
  std::vector<Rational> r(d.begin(), d.end());
  return Matrix::diagonal(r);
}

inline QuadricPencil diagonal(int n, const std::vector<int>& a, const std::vector<int>& b) {
  return QuadricPencil(n, SymmetricMatrix(diag(a)), SymmetricMatrix(diag(b)));
}

// Q1 = xy - zt, Q2 = zt - uv on P^5.
inline QuadricPencil toric() {
  Matrix a(6, 6), b(6, 6);
  a(0, 1) = a(1, 0) = Rational(1, 2);
  a(2, 3) = a(3, 2) = Rational(-1, 2);
  b(2, 3) = b(3, 2) = Rational(1, 2);
  b(4, 5) = b(5, 4) = Rational(-1, 2);
  return QuadricPencil(3, SymmetricMatrix(a), SymmetricMatrix(b));
}

// A = I, B = diag(0,0,0,1,1,1).
inline QuadricPencil cp3_z2() { return diagonal(3, {1, 1, 1, 1, 1, 1}, {0, 0, 0, 1, 1, 1}); }

inline QuadricPencil smooth3() { return diagonal(3, {1, 1, 1, 1, 1, 1}, {0, 1, 2, 3, 4, 5}); }

// First two coordinates carry A = [[0,1],[1,0]], B = [[1,0],[0,0]], so A^-1 B
// has a nilpotent block.
inline QuadricPencil jordan3() {
  Matrix a(6, 6), b(6, 6);
  a(0, 1) = a(1, 0) = Rational(1);
  b(0, 0) = Rational(1);
  for (int i = 2; i < 6; ++i) {
    a(i, i) = Rational(1);
    b(i, i) = Rational(i);
  }
  return QuadricPencil(3, SymmetricMatrix(a), SymmetricMatrix(b));
}

}  // namespace fixtures
