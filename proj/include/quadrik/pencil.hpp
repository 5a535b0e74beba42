#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadrik/binary_form.hpp"
#include "quadrik/kernels.hpp"
#include "quadrik/matrix.hpp"
#include "quadrik/polynomial.hpp"

namespace quadrik {

/// Two quadrics Q1 = x^T A x, Q2 = x^T B x in P^(n+2), cutting out an
/// n-dimensional complete intersection X.
class QuadricPencil {
 public:
  /// Throws Error(WrongDimension) for n < 2, Error(SizeMismatch) unless both
  /// matrices have size n+3, Error(LinearlyDependentPencil) if A and B are
  /// linearly dependent (including either being zero).
  QuadricPencil(int n, SymmetricMatrix a, SymmetricMatrix b);

  int dimension() const { return n_; }
  std::size_t size() const { return a_.size(); }
  const SymmetricMatrix& a() const { return a_; }
  const SymmetricMatrix& b() const { return b_; }

  /// lambda * A + mu * B.
  Matrix member(const Rational& lambda, const Rational& mu) const;

  /// (S^T A S, S^T B S).
  QuadricPencil congruent(const Matrix& s) const;
  /// (p A + q B, r A + s B); the 2x2 transform must be invertible.
  QuadricPencil rebased(const Rational& p, const Rational& q, const Rational& r, const Rational& s) const;

 private:
  int n_;
  SymmetricMatrix a_;
  SymmetricMatrix b_;
};

/// multiplicity -> number of distinct projective roots with that multiplicity.
using MultiplicityCounts = std::map<int, int>;

struct DiscriminantProfile {
  BinaryForm form;                       // det(lambda A + mu B)
  SquarefreeDecomposition finite_part;   // of det(t A + B)
  int infinity_multiplicity = 0;         // multiplicity of the root [1:0]
  MultiplicityCounts multiplicity_counts;

  /// The multiset of root multiplicities, descending.
  std::vector<int> multiplicities() const;
  int max_multiplicity() const;
};

struct PencilPoint {
  Rational lambda;
  Rational mu;

  friend bool operator==(const PencilPoint&, const PencilPoint&) = default;
};

struct DiagonalizationResult {
  bool diagonalizable = false;
  std::vector<int> eigenvalue_multiplicities;  // descending; empty unless diagonalizable
  PencilPoint witness;                         // nonsingular member lambda A + mu B used
  std::string witness_description;
};

/// Throws Error(NonRegularPencil) if det(lambda A + mu B) vanishes identically.
DiscriminantProfile discriminant_profile(const QuadricPencil& pencil,
                                         kernels::Execution exec = kernels::Execution::Parallel);

/// Candidate pencil members (1,0), (0,1), (1,1), (1,-1), (1,2), (1,-2), ...
std::vector<PencilPoint> member_candidates(std::size_t count);

DiagonalizationResult diagonalizability_test(const QuadricPencil& pencil);
DiagonalizationResult diagonalizability_test(const QuadricPencil& pencil, const DiscriminantProfile& profile,
                                             kernels::Execution exec = kernels::Execution::Parallel);

}  // namespace quadrik
