#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "quadrik/pencil.hpp"

namespace quadrik {

enum class KEClass { SmoothStable, PolystableBoundary, NotKE };

/// Which clause of the KE criterion for intersections of two quadrics decided the verdict.
enum class VerdictClause {
  NotSimultaneouslyDiagonalizable,
  MultiplicityAboveBound,
  HalfMultiplicityWithoutTwoBlocks,
  HalfMultiplicityTwoBlocks,
  AllRootsSimple,
  MultiplicitiesWithinBound,
};

struct VerdictReason {
  VerdictClause clause;
  std::string detail;
  std::string citation;
};

struct KEVerdict {
  KEClass kind = KEClass::NotKE;
  bool equality_case = false;
  VerdictReason reason;
  DiscriminantProfile profile;
  DiagonalizationResult diagonalization;

  bool admits_ke() const { return kind != KEClass::NotKE; }
};

std::string_view to_string(KEClass kind);
std::string_view to_string(VerdictClause clause);
/// Citation string attached to each clause in reports.
std::string_view citation(VerdictClause clause);

/// The decision on an already computed profile. `multiplicities` is the root
/// multiplicity multiset (infinity included) of an n-dimensional intersection.
struct Classification {
  KEClass kind;
  bool equality_case;
  VerdictClause clause;
  std::string detail;
};
Classification classify(int n, bool diagonalizable, const std::vector<int>& multiplicities);

KEVerdict ke_decision(const QuadricPencil& pencil);
KEVerdict ke_decision(const QuadricPencil& pencil, kernels::Execution exec);

/// True iff the discriminant has n+3 distinct roots.
bool is_smooth(const QuadricPencil& pencil);

}  // namespace quadrik
