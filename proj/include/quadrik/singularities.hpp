#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadrik/pencil.hpp"

namespace quadrik {

/// Singular locus contributed by all discriminant roots of one multiplicity m.
/// Each such root gives {sum over its eigenblock of x_i^2 = 0, other x_j = 0},
/// a quadric of dimension m-2 in P^(m-1).
struct SingularStratum {
  int multiplicity = 0;
  int stratum_dim = 0;          // m - 2
  std::string transverse_type;  // "C^k x A_1^(n-k)"
  int components_per_root = 0;  // 2 points for m = 2, one irreducible quadric for m >= 3
  int root_count = 0;

  friend bool operator==(const SingularStratum&, const SingularStratum&) = default;
};

struct SingularityReport {
  int n = 0;
  std::vector<SingularStratum> strata;  // ascending multiplicity
  int isolated_odp_count = 0;           // 2 * number of double roots
  std::optional<int> max_stratum_dim;   // empty when smooth
  bool special_orbifold = false;        // n = 3 with multiplicities {3,3}: CP^3/Z_2

  /// Number of connected components of the singular set.
  int component_count() const;
  bool smooth() const { return strata.empty(); }

  friend bool operator==(const SingularityReport&, const SingularityReport&) = default;
};

std::string transverse_type_label(int n, int k);

/// Throws Error(NotDiagonalizable) or Error(NonRegularPencil).
SingularityReport singular_strata(const QuadricPencil& pencil);
SingularityReport singular_strata(int n, const DiscriminantProfile& profile, const DiagonalizationResult& diag);

/// Even ODP count check for three-dimensional KE intersections without
/// non-isolated singularities. Throws Error(WrongDimension) for n != 3 and
/// Error(InvalidArgument) for the CP^3/Z_2 case.
bool odp_parity_check(const SingularityReport& report);

}  // namespace quadrik
