#include "quadrik/stability.hpp"

#include <algorithm>

namespace quadrik {

std::string_view to_string(KEClass kind) {
  switch (kind) {
    case KEClass::SmoothStable: return "SmoothStable";
    case KEClass::PolystableBoundary: return "PolystableBoundary";
    case KEClass::NotKE: return "NotKE";
  }
  return "?";
}

std::string_view to_string(VerdictClause clause) {
  switch (clause) {
    case VerdictClause::NotSimultaneouslyDiagonalizable: return "not_simultaneously_diagonalizable";
    case VerdictClause::MultiplicityAboveBound: return "multiplicity_above_bound";
    case VerdictClause::HalfMultiplicityWithoutTwoBlocks: return "half_multiplicity_without_two_blocks";
    case VerdictClause::HalfMultiplicityTwoBlocks: return "half_multiplicity_two_blocks";
    case VerdictClause::AllRootsSimple: return "all_roots_simple";
    case VerdictClause::MultiplicitiesWithinBound: return "multiplicities_within_bound";
  }
  return "?";
}

std::string_view citation(VerdictClause clause) {
  switch (clause) {
    case VerdictClause::NotSimultaneouslyDiagonalizable:
      return "KE criterion for intersections of two quadrics: the quadrics must be simultaneously "
             "diagonalizable (otherwise not GIT polystable)";
    case VerdictClause::MultiplicityAboveBound:
      return "KE criterion for intersections of two quadrics: no discriminant root of multiplicity > (n+3)/2";
    case VerdictClause::HalfMultiplicityWithoutTwoBlocks:
    case VerdictClause::HalfMultiplicityTwoBlocks:
      return "KE criterion for intersections of two quadrics: a root of multiplicity (n+3)/2 forces "
             "X = {x_0^2+...+x_{(n+1)/2}^2 = x_{(n+3)/2}^2+...+x_{n+2}^2 = 0}";
    case VerdictClause::AllRootsSimple:
      return "GIT dictionary: strictly GIT stable points are exactly the smooth intersections";
    case VerdictClause::MultiplicitiesWithinBound:
      return "KE criterion for intersections of two quadrics: diagonalizable with all multiplicities "
             "< (n+3)/2 gives a singular GIT polystable KE intersection";
  }
  return "";
}

// Equality clause: with Q1 = Id and Q2 diagonal with two eigenvalues a, b of
// multiplicity (n+3)/2 each, the members Q2 - a Q1 and Q2 - b Q1 are (up to scale)
// the sums of squares over the two blocks, so X is the model variety. Conversely
// the model variety's discriminant is lambda^h mu^h. Hence the multiset test.
Classification classify(int n, bool diagonalizable, const std::vector<int>& multiplicities) {
  if (!diagonalizable) {
    return {KEClass::NotKE, false, VerdictClause::NotSimultaneouslyDiagonalizable,
            "not polystable: the quadrics are not simultaneously diagonalizable"};
  }
  const int bound2 = n + 3;  // compare 2m against n+3 to stay in integers
  const int max_m = multiplicities.empty() ? 0 : *std::max_element(multiplicities.begin(), multiplicities.end());
  if (2 * max_m > bound2) {
    std::string bound = (bound2 % 2 == 0) ? std::to_string(bound2 / 2) : std::to_string(bound2) + "/2";
    return {KEClass::NotKE, false, VerdictClause::MultiplicityAboveBound,
            "multiplicity " + std::to_string(max_m) + " > " + bound};
  }
  if (2 * max_m == bound2) {
    const int half = bound2 / 2;
    if (multiplicities.size() == 2 && multiplicities[0] == half && multiplicities[1] == half) {
      return {KEClass::PolystableBoundary, true, VerdictClause::HalfMultiplicityTwoBlocks,
              "equality case: multiplicities {" + std::to_string(half) + "," + std::to_string(half) + "}"};
    }
    return {KEClass::NotKE, false, VerdictClause::HalfMultiplicityWithoutTwoBlocks,
            "multiplicity " + std::to_string(half) + " = (n+3)/2 but the remaining roots do not form a second block of " +
                "multiplicity " + std::to_string(half)};
  }
  if (max_m <= 1) {
    return {KEClass::SmoothStable, false, VerdictClause::AllRootsSimple, "all " + std::to_string(n + 3) +
                                                                             " discriminant roots are simple"};
  }
  return {KEClass::PolystableBoundary, false, VerdictClause::MultiplicitiesWithinBound,
          "maximal multiplicity " + std::to_string(max_m) + " < (n+3)/2"};
}

KEVerdict ke_decision(const QuadricPencil& pencil) { return ke_decision(pencil, kernels::Execution::Parallel); }

KEVerdict ke_decision(const QuadricPencil& pencil, kernels::Execution exec) {
  KEVerdict v;
  v.profile = discriminant_profile(pencil, exec);
  v.diagonalization = diagonalizability_test(pencil, v.profile, exec);
  const Classification c = classify(pencil.dimension(), v.diagonalization.diagonalizable, v.profile.multiplicities());
  v.kind = c.kind;
  v.equality_case = c.equality_case;
  v.reason = {c.clause, c.detail, std::string(citation(c.clause))};
  return v;
}

bool is_smooth(const QuadricPencil& pencil) {
  return discriminant_profile(pencil).max_multiplicity() == 1;
}

}  // namespace quadrik
